#include <catch2/catch_amalgamated.hpp>

#include "foldcob/normalforms.hpp"

#include <cmath>
#include <random>

using namespace foldcob;

TEST_CASE("critical point count of x^3 + psi*x") {
  CHECK(critical_points(-1.0) == 2);
  CHECK(critical_points(-0.01) == 2);
  CHECK(critical_points(0.0) == 1);
  CHECK(critical_points(1.0) == 0);
  CHECK(critical_points(0.01) == 0);
  // within tolerance the count snaps to the degenerate value
  CHECK(critical_points(5e-10, 1e-9) == 1);
  CHECK(critical_points(-5e-10, 1e-9) == 1);
}

TEST_CASE("cusp normal form evaluation") {
  MorinCuspMap f{1};
  auto im = eval_morin(f, {1.0, 0.0}, 0.0, 1.0);
  REQUIRE(im.y.size() == 3);
  CHECK(im.y[0] == 1.0);
  CHECK(im.y[1] == 0.0);
  CHECK(im.y[2] == 0.0);
  REQUIRE(im.z.size() == 1);
  CHECK(im.z[0] == 1.0);
  CHECK(im.u == 1.0);

  MorinCuspMap g{0};
  auto im0 = eval_morin(g, {}, -1.0, 1.0);
  CHECK(im0.y.size() == 1);
  CHECK(im0.z.empty());
  CHECK(im0.u == 0.0); // x = 1 is a root of x^3 - x

  MorinCuspMap h{2};
  auto im2 = eval_morin(h, {1.0, 2.0, 3.0, 4.0}, 2.0, 3.0);
  REQUIRE(im2.y.size() == 5);
  CHECK(im2.y[4] == 2.0);
  REQUIRE(im2.z.size() == 2);
  CHECK(im2.z[0] == Catch::Approx(3.0 * 1.0 + 9.0 * 2.0));
  CHECK(im2.z[1] == Catch::Approx(3.0 * 3.0 + 9.0 * 4.0));
  CHECK(im2.u == Catch::Approx(3.0 * (9.0 + 2.0)));

  CHECK_THROWS_AS(eval_morin(f, {1.0}, 0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(eval_morin(MorinCuspMap{-1}, {}, 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("critical count matches the singular set of the normal form") {
  // du/dx = 3x^2 + s, so the slice at parameter s has critical x exactly
  // where 3x^2 = -s.
  MorinCuspMap f{0};
  auto du_dx = [&](double s, double x) {
    const double h = 1e-6;
    auto a = eval_morin(f, {}, s, x + h);
    auto b = eval_morin(f, {}, s, x - h);
    return (a.u - b.u) / (2 * h);
  };
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (int trial = 0; trial < 100; ++trial) {
    double s = dist(rng);
    if (std::fabs(s) < 1e-6) continue;
    int n = critical_points(s);
    if (s < 0) {
      REQUIRE(n == 2);
      double r = std::sqrt(-s / 3.0);
      CHECK(std::fabs(du_dx(s, r)) < 1e-6);
      CHECK(std::fabs(du_dx(s, -r)) < 1e-6);
    } else {
      REQUIRE(n == 0);
      for (double x : {-1.5, -0.3, 0.0, 0.7, 2.0})
        CHECK(du_dx(s, x) > 0.0);
    }
  }
}

static FamilyModel poly_family(std::string name, std::vector<double> coeffs,
                               double lo, double hi, int samples = 2000) {
  FamilyModel fam;
  fam.name = std::move(name);
  fam.psi = polynomial(std::move(coeffs));
  fam.s_min = lo;
  fam.s_max = hi;
  fam.sample_count = samples;
  return fam;
}

TEST_CASE("cusp scan of s(s-1) finds a death then a birth") {
  // psi = s^2 - s, scanned on [-1/4, 5/4]
  auto fam = poly_family("pair", {0.0, -1.0, 1.0}, -0.25, 1.25);
  auto rep = scan_family(fam);
  REQUIRE(rep.scan.events.size() == 2);
  CHECK(rep.cusp_count == 2);
  CHECK_FALSE(rep.cusp_free);
  CHECK_FALSE(rep.two_critical_points_throughout);
  CHECK(rep.scan.count_at_min == 0);
  CHECK(rep.scan.count_at_max == 0);

  const auto& death = rep.scan.events[0];
  CHECK(std::fabs(death.s - 0.0) < 1e-7);
  CHECK_FALSE(death.birth);
  CHECK(death.slope_sign == -1);
  CHECK(death.count_before == 0);
  CHECK(death.count_after == 2);

  const auto& birth = rep.scan.events[1];
  CHECK(std::fabs(birth.s - 1.0) < 1e-7);
  CHECK(birth.birth);
  CHECK(birth.slope_sign == 1);
  CHECK(birth.count_before == 2);
  CHECK(birth.count_after == 0);
}

TEST_CASE("cusp scan of -s(s-1) swaps the labels") {
  auto fam = poly_family("flipped pair", {0.0, 1.0, -1.0}, -0.25, 1.25);
  auto rep = scan_family(fam);
  REQUIRE(rep.scan.events.size() == 2);
  CHECK(rep.scan.events[0].birth);
  CHECK(std::fabs(rep.scan.events[0].s - 0.0) < 1e-7);
  CHECK_FALSE(rep.scan.events[1].birth);
  CHECK(std::fabs(rep.scan.events[1].s - 1.0) < 1e-7);
  CHECK(rep.scan.count_at_min == 2);
  CHECK(rep.scan.count_at_max == 2);
}

TEST_CASE("cusp-free families") {
  SECTION("psi identically -1: two folds for every s") {
    auto fam = poly_family("below", {-1.0}, 0.0, 1.0);
    auto rep = scan_family(fam);
    CHECK(rep.cusp_count == 0);
    CHECK(rep.cusp_free);
    CHECK(rep.two_critical_points_throughout);
    CHECK(rep.scan.count_at_min == 2);
    CHECK(rep.scan.count_at_max == 2);
    CHECK(rep.scan.degenerate.empty());
  }
  SECTION("psi = s^2 + 1: no critical points at all") {
    auto fam = poly_family("above", {1.0, 0.0, 1.0}, -1.0, 2.0);
    auto rep = scan_family(fam);
    CHECK(rep.cusp_count == 0);
    CHECK(rep.cusp_free);
    CHECK_FALSE(rep.two_critical_points_throughout);
    CHECK(rep.scan.count_at_min == 0);
    CHECK(rep.scan.count_at_max == 0);
  }
}

TEST_CASE("degenerate touch is reported but not counted") {
  // psi = s^2 touches zero at s = 0 without changing sign.
  auto fam = poly_family("touch", {0.0, 0.0, 1.0}, -1.0, 1.0, 2000);
  auto rep = scan_family(fam);
  CHECK(rep.cusp_count == 0);
  REQUIRE(rep.scan.degenerate.size() == 1);
  CHECK(std::fabs(rep.scan.degenerate[0]) < 1e-3);
}

TEST_CASE("scan validation") {
  SECTION("psi vanishing at an endpoint is rejected") {
    auto fam = poly_family("bad", {0.0, 1.0}, 0.0, 1.0);
    CHECK_THROWS_WITH(detect_cusps(fam),
                      Catch::Matchers::ContainsSubstring("endpoint"));
  }
  SECTION("two roots hidden inside one sample interval") {
    auto fam = poly_family("narrow", {0.18, -0.85, 1.0}, 0.0, 1.0, 2);
    CHECK_THROWS_WITH(detect_cusps(fam),
                      Catch::Matchers::ContainsSubstring("sample_count"));
  }
  SECTION("parameter checks") {
    auto fam = poly_family("ok", {-1.0}, 0.0, 1.0);
    fam.s_max = fam.s_min;
    CHECK_THROWS_AS(detect_cusps(fam), std::invalid_argument);
    fam = poly_family("ok", {-1.0}, 0.0, 1.0);
    fam.sample_count = 1;
    CHECK_THROWS_AS(detect_cusps(fam), std::invalid_argument);
    fam = poly_family("ok", {-1.0}, 0.0, 1.0);
    fam.tolerance = 0.0;
    CHECK_THROWS_AS(detect_cusps(fam), std::invalid_argument);
    fam = poly_family("ok", {-1.0}, 0.0, 1.0);
    fam.psi = nullptr;
    CHECK_THROWS_AS(detect_cusps(fam), std::invalid_argument);
  }
}

TEST_CASE("event locations are stable under sample refinement") {
  auto coarse = poly_family("c", {0.06, -0.5, 1.0}, -0.5, 1.5, 1000);
  auto fine = poly_family("f", {0.06, -0.5, 1.0}, -0.5, 1.5, 5000);
  auto a = detect_cusps(coarse);
  auto b = detect_cusps(fine);
  REQUIRE(a.events.size() == b.events.size());
  for (size_t i = 0; i < a.events.size(); ++i) {
    CHECK(std::fabs(a.events[i].s - b.events[i].s) < 1e-8);
    CHECK(a.events[i].birth == b.events[i].birth);
  }
}

TEST_CASE("endpoint counts balance births against deaths") {
  // Random polynomial families: the fold-count change across the scan
  // equals twice the surplus of deaths over births.
  std::mt19937 rng(7171);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> deg(1, 4);
  int scanned = 0;
  int attempts = 0;
  while (scanned < 200 && attempts < 4000) {
    ++attempts;
    int d = deg(rng);
    std::vector<double> cs(d + 1);
    for (auto& c : cs) c = coeff(rng);
    auto fam = poly_family("random", cs, -1.5, 1.5, 3000);
    CuspScan scan;
    try {
      scan = detect_cusps(fam);
    } catch (const std::invalid_argument&) {
      continue; // endpoint zero; try another family
    } catch (const std::runtime_error&) {
      continue; // too coarse for a near-degenerate pair
    }
    ++scanned;
    int births = 0, deaths = 0;
    for (const auto& e : scan.events)
      (e.birth ? births : deaths)++;
    CHECK(scan.count_at_max - scan.count_at_min == 2 * (deaths - births));
    // consecutive counts must chain
    int running = scan.count_at_min;
    for (const auto& e : scan.events) {
      CHECK(e.count_before == running);
      running = e.count_after;
    }
    CHECK(running == scan.count_at_max);
  }
  REQUIRE(scanned == 200);
}

TEST_CASE("two-family comparison scenario") {
  auto rep = two_family_scenario(0.1);
  CHECK(rep.dichotomy);
  CHECK_FALSE(rep.roles_as_described);
  CHECK(rep.flipped_scanned);

  // psi1 = -s(s-1) is the family carrying the cusp pair
  CHECK(rep.psi1.cusp_count == 2);
  REQUIRE(rep.psi1.scan.events.size() == 2);
  CHECK(rep.psi1.scan.events[0].birth);
  CHECK(std::fabs(rep.psi1.scan.events[0].s) < 1e-6);
  CHECK_FALSE(rep.psi1.scan.events[1].birth);
  CHECK(std::fabs(rep.psi1.scan.events[1].s - 1.0) < 1e-6);

  // psi2 stays negative: no cusps, two fold points for every s
  CHECK(rep.psi2.cusp_free);
  CHECK(rep.psi2.two_critical_points_throughout);

  // flipping the signs realizes the described assignment of roles
  CHECK(rep.flipped1.cusp_count == 2);
  CHECK_FALSE(rep.flipped1.scan.events[0].birth);
  CHECK(rep.flipped1.scan.events[1].birth);
  CHECK(rep.flipped2.cusp_free);
  CHECK_FALSE(rep.flipped2.two_critical_points_throughout);

  CHECK(rep.plateau == Catch::Approx(-1.0 / 3.0));
}

TEST_CASE("scenario parameter validation") {
  CHECK_THROWS_AS(two_family_scenario(0.0), std::invalid_argument);
  CHECK_THROWS_AS(two_family_scenario(0.25), std::invalid_argument);
  CHECK_THROWS_AS(two_family_scenario(-0.1), std::invalid_argument);
}

TEST_CASE("polynomial helper") {
  auto p = polynomial({1.0, -2.0, 1.0}); // (s-1)^2
  CHECK(p(1.0) == 0.0);
  CHECK(p(0.0) == 1.0);
  CHECK(p(3.0) == 4.0);
  CHECK_THROWS_AS(polynomial({}), std::invalid_argument);
}
