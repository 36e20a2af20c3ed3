#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>

#include "foldcob/fgab.hpp"

using namespace foldcob;

namespace {

// Independent oracle: the multiset of prime-power factors determines the
// isomorphism class of the torsion part, whatever the coefficient list.
std::map<std::int64_t, int> prime_power_multiset(const std::vector<std::int64_t>& torsion) {
  std::map<std::int64_t, int> out;
  for (auto t : torsion) {
    for (std::int64_t p = 2; p * p <= t; ++p) {
      if (t % p != 0) continue;
      std::int64_t q = 1;
      while (t % p == 0) {
        q *= p;
        t /= p;
      }
      ++out[q];
    }
    if (t > 1) ++out[t];
  }
  return out;
}

HomologyProfile sphere7() {
  HomologyProfile p;
  p.name = "S7";
  p.dimension = 7;
  p.orientable = true;
  p.groups.assign(8, FGAbGroup{});
  p.groups[0] = FGAbGroup{1, {}};
  p.groups[7] = FGAbGroup{1, {}};
  return p;
}

HomologyProfile s1_x_s6() {
  HomologyProfile p;
  p.name = "S1 x S6";
  p.dimension = 7;
  p.orientable = true;
  p.groups.assign(8, FGAbGroup{});
  p.groups[0] = FGAbGroup{1, {}};
  p.groups[1] = FGAbGroup{1, {}};
  p.groups[6] = FGAbGroup{1, {}};
  p.groups[7] = FGAbGroup{1, {}};
  return p;
}

}  // namespace

TEST_CASE("divisor-chain normalization") {
  CHECK(normalize(FGAbGroup{0, {4, 2}}) == FGAbGroup{0, {2, 4}});
  CHECK(normalize(FGAbGroup{0, {2, 3}}) == FGAbGroup{0, {6}});
  CHECK(normalize(FGAbGroup{1, {3, 2, 2}}) == FGAbGroup{1, {2, 6}});
  CHECK(normalize(FGAbGroup{0, {4, 6, 9}}) == FGAbGroup{0, {6, 36}});
  CHECK(normalize(FGAbGroup{2, {}}) == FGAbGroup{2, {}});
  CHECK(normalize(FGAbGroup{}) == FGAbGroup{});
  CHECK_THROWS_AS(normalize(FGAbGroup{0, {1}}), std::invalid_argument);
  CHECK_THROWS_AS(normalize(FGAbGroup{0, {0}}), std::invalid_argument);
  CHECK_THROWS_AS(normalize(FGAbGroup{-1, {}}), std::invalid_argument);
}

TEST_CASE("normalization properties against the prime-power oracle") {
  std::mt19937 rng(20260815);
  std::uniform_int_distribution<int> count(0, 5);
  std::uniform_int_distribution<std::int64_t> coeff(2, 60);
  for (int trial = 0; trial < 500; ++trial) {
    FGAbGroup g;
    g.free_rank = count(rng) % 3;
    int n = count(rng);
    for (int i = 0; i < n; ++i) g.torsion.push_back(coeff(rng));
    FGAbGroup c = normalize(g);

    // same isomorphism class (prime-power multiset), same order product
    CHECK(prime_power_multiset(c.torsion) == prime_power_multiset(g.torsion));
    CHECK(c.free_rank == g.free_rank);

    // divisibility chain, entries >= 2
    for (std::size_t i = 0; i + 1 < c.torsion.size(); ++i) {
      CHECK(c.torsion[i] >= 2);
      CHECK(c.torsion[i + 1] % c.torsion[i] == 0);
    }

    // idempotent
    CHECK(normalize(c) == c);
  }
}

TEST_CASE("mod-2 functors") {
  CHECK(tensor_z2(FGAbGroup{1, {}}) == FGAbGroup{0, {2}});
  CHECK(tensor_z2(FGAbGroup{0, {2, 4}}) == FGAbGroup{0, {2, 2}});
  CHECK(tensor_z2(FGAbGroup{0, {3}}) == FGAbGroup{});
  CHECK(ext_z2(FGAbGroup{1, {2}}) == FGAbGroup{0, {2}});
  CHECK(ext_z2(FGAbGroup{3, {}}) == FGAbGroup{});
  CHECK(ext_z2(FGAbGroup{0, {9}}) == FGAbGroup{});

  std::mt19937 rng(17);
  std::uniform_int_distribution<int> count(0, 4);
  std::uniform_int_distribution<std::int64_t> coeff(2, 40);
  for (int trial = 0; trial < 300; ++trial) {
    FGAbGroup g;
    g.free_rank = count(rng);
    int n = count(rng);
    for (int i = 0; i < n; ++i) g.torsion.push_back(coeff(rng));
    CHECK(tensor_z2(g) == hom_z2(g));  // finite Z/2 ranks agree
  }
}

TEST_CASE("odd torsion quotient") {
  CHECK(modulo_odd_torsion(FGAbGroup{1, {3}}) == FGAbGroup{1, {}});
  CHECK(modulo_odd_torsion(FGAbGroup{0, {6}}) == FGAbGroup{0, {2}});
  CHECK(modulo_odd_torsion(FGAbGroup{0, {12, 9}}) == FGAbGroup{0, {4}});
}

TEST_CASE("mod-2 homology of a profile via universal coefficients") {
  HomologyProfile p;
  p.name = "demo";
  p.dimension = 7;
  p.groups.assign(8, FGAbGroup{});
  p.groups[0] = FGAbGroup{1, {}};
  p.groups[1] = FGAbGroup{1, {3}};
  p.groups[2] = FGAbGroup{0, {4}};
  CHECK(mod2_homology(p, 1) == FGAbGroup{0, {2}});       // Z (x) Z2, Z3 dies, Ext(H0)=0
  CHECK(mod2_homology(p, 2) == FGAbGroup{0, {2}});       // Z4 (x) Z2; Ext(Z+Z3, Z2)=0
  CHECK(mod2_homology(p, 3) == FGAbGroup{0, {2}});       // Ext(Z4, Z2) alone
  CHECK(mod2_homology(p, 5) == FGAbGroup{});
}

TEST_CASE("dimension-6 bordism of a target, modulo odd torsion") {
  CHECK(omega6_of_target(sphere7()).group == FGAbGroup{});
  CHECK(omega6_of_target(s1_x_s6()).group == FGAbGroup{1, {2}});

  HomologyProfile p;
  p.name = "S2 x S5";
  p.dimension = 7;
  p.groups.assign(8, FGAbGroup{});
  p.groups[0] = FGAbGroup{1, {}};
  p.groups[2] = FGAbGroup{1, {}};
  p.groups[5] = FGAbGroup{1, {}};
  p.groups[7] = FGAbGroup{1, {}};
  CHECK(omega6_of_target(p).group == FGAbGroup{1, {}});
  CHECK(omega6_of_target(p).modulo_odd);
}

TEST_CASE("vanishing condition for 7-dimensional targets") {
  CHECK(target_condition_dim7(sphere7()).holds);

  auto bad = target_condition_dim7(s1_x_s6());
  CHECK_FALSE(bad.holds);
  CHECK(bad.h1_mod2 == FGAbGroup{0, {2}});
  CHECK(bad.witness == "H_1(P; Z/2) = Z2");

  HomologyProfile odd = sphere7();
  odd.groups[1] = FGAbGroup{0, {3}};  // odd torsion is invisible mod 2
  CHECK(target_condition_dim7(odd).holds);

  HomologyProfile wrong = sphere7();
  wrong.dimension = 6;
  CHECK_THROWS_AS(target_condition_dim7(wrong), std::invalid_argument);
}

TEST_CASE("condition agrees with Hom(bordism, Z/2) on duality-consistent profiles") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> rank(0, 2);
  std::uniform_int_distribution<int> tcount(0, 2);
  const std::int64_t pool[] = {2, 3, 4, 5, 6, 9};
  std::uniform_int_distribution<int> pick(0, 5);

  for (int trial = 0; trial < 200; ++trial) {
    HomologyProfile p;
    p.dimension = 7;
    p.groups.assign(8, FGAbGroup{});
    p.groups[0] = FGAbGroup{1, {}};
    p.groups[7] = FGAbGroup{1, {}};
    for (int j = 1; j <= 5; ++j) {
      FGAbGroup g;
      g.free_rank = rank(rng);
      int n = tcount(rng);
      for (int i = 0; i < n; ++i) g.torsion.push_back(pool[pick(rng)]);
      p.groups[static_cast<std::size_t>(j)] = normalize(g);
    }
    // closed orientable target: H6 is the free part of H1 (duality)
    p.groups[6] = FGAbGroup{p.groups[1].free_rank, {}};

    bool via_condition = target_condition_dim7(p).holds;
    bool via_bordism = hom_z2(omega6_of_target(p).group).is_trivial();
    CHECK(via_condition == via_bordism);
  }
}
