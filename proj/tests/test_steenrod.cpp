#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "foldcob/steenrod.hpp"

using namespace foldcob;

namespace {

std::int64_t binom_parity(int n, int k) {
  // Lucas: C(n,k) is odd iff every binary digit of k is <= the digit of n.
  if (k < 0 || k > n) return 0;
  return (k & ~n) == 0 ? 1 : 0;
}

RingElement gen(const ManifoldModel& m, std::size_t which = 0) {
  return generator_element(m.ring, which);
}

}  // namespace

TEST_CASE("squares on projective space match the binomial-parity closed form") {
  // Sq^i(a^k) = C(k,i) a^{k+i} on RP(n)
  for (int n : {2, 3, 4, 5, 6, 7}) {
    auto m = real_projective(n);
    SteenrodContext ctx(m);
    auto a = gen(m);
    for (int k = 1; k <= n; ++k) {
      auto ak = power(a, k);
      for (int i = 0; i <= n; ++i) {
        INFO("RP(" << n << "), Sq^" << i << " a^" << k);
        auto got = ctx.sq(i, ak);
        auto want = binom_parity(k, i) && k + i <= n ? power(a, k + i) : zero_element(m.ring);
        CHECK(got == want);
      }
    }
  }
}

TEST_CASE("squares on complex projective space double the binomial rule") {
  // Sq^{2i}(a^k) = C(k,i) a^{k+i}, odd squares vanish (classes sit in even degrees)
  auto m = complex_projective(4);
  SteenrodContext ctx(m);
  auto a = gen(m);
  for (int k = 1; k <= 4; ++k) {
    for (int i = 0; i <= 4; ++i) {
      auto got = ctx.sq(2 * i, power(a, k));
      auto want = binom_parity(k, i) && k + i <= 4 ? power(a, k + i) : zero_element(m.ring);
      INFO("Sq^" << 2 * i << " a^" << k);
      CHECK(got == want);
      CHECK(ctx.sq(2 * i + 1, power(a, k)).is_zero());
    }
  }
}

TEST_CASE("the composite square chain evaluates to the top class") {
  auto m = complex_projective(4);
  SteenrodContext ctx(m);
  auto a = gen(m);
  auto middle = ctx.sq(2, a);
  CHECK(middle == a * a);
  auto top = ctx.sq(4, middle);
  CHECK(top == power(a, 4));
  CHECK(pair_with_fundamental_class(top) == 1);
}

TEST_CASE("total square is multiplicative (Cartan rule)") {
  std::mt19937 rng(9090);
  std::vector<ManifoldModel> models;
  models.push_back(real_projective(4));
  models.push_back(complex_projective(3));
  models.push_back(dold(1, 2));
  models.push_back(product(real_projective(2), real_projective(3)));
  for (const auto& m : models) {
    SteenrodContext ctx(m);
    std::uniform_int_distribution<int> coin(0, 1);
    auto random_element = [&]() {
      RingElement e(m.ring);
      for (std::uint32_t b = 0; b < m.ring->basis.size(); ++b)
        if (coin(rng)) e.add_term(b, 1);
      return e;
    };
    for (int trial = 0; trial < 150; ++trial) {
      auto x = random_element();
      auto y = random_element();
      INFO(m.name);
      CHECK(ctx.total_sq(x * y) == ctx.total_sq(x) * ctx.total_sq(y));
    }
  }
}

TEST_CASE("square axioms hold on every catalog model") {
  std::vector<ManifoldModel> models;
  models.push_back(real_projective(2));
  models.push_back(real_projective(5));
  models.push_back(complex_projective(2));
  models.push_back(sphere(3));
  models.push_back(dold(1, 2));
  models.push_back(dold(2, 1));
  for (const auto& m : models) {
    SteenrodContext ctx(m);
    for (std::uint32_t b = 0; b < m.ring->basis.size(); ++b) {
      auto e = basis_element(m.ring, b);
      int d = m.ring->basis[b].degree;
      INFO(m.name << ", basis " << m.ring->basis[b].name);
      // Sq^0 = id, top square = cup square, instability above the degree
      CHECK(ctx.sq(0, e) == e);
      CHECK(ctx.sq(d, e) == e * e);
      CHECK(ctx.sq(d + 1, e).is_zero());
      CHECK(ctx.sq(d + 3, e).is_zero());
      // Sq^1 Sq^1 = 0 (start of the Adem relations)
      CHECK(ctx.sq(1, ctx.sq(1, e)).is_zero());
    }
  }
}

TEST_CASE("wu classes of the small models") {
  {
    auto m = real_projective(2);
    SteenrodContext ctx(m);
    auto v = wu_class(ctx);
    CHECK(v.to_string() == "1 + a");
    CHECK(wu_check(ctx));
  }
  {
    auto m = complex_projective(2);
    SteenrodContext ctx(m);
    auto v = wu_class(ctx);
    CHECK(v.to_string() == "1 + a");  // v_2 = a, the degree-2 generator
    CHECK(wu_check(ctx));
  }
  {
    // spheres have trivial wu class
    auto m = sphere(4);
    SteenrodContext ctx(m);
    CHECK(wu_class(ctx).to_string() == "1");
    CHECK(wu_check(ctx));
  }
}

TEST_CASE("wu consistency across the catalog and random products") {
  std::vector<ManifoldModel> models;
  for (int n = 1; n <= 6; ++n) models.push_back(real_projective(n));
  for (int n = 1; n <= 4; ++n) models.push_back(complex_projective(n));
  for (int n = 1; n <= 6; ++n) models.push_back(sphere(n));
  models.push_back(dold(1, 1));
  models.push_back(dold(1, 2));
  models.push_back(dold(2, 1));
  models.push_back(dold(2, 2));
  for (const auto& m : models) {
    INFO(m.name);
    SteenrodContext ctx(m);
    CHECK(wu_check(ctx));
  }

  std::mt19937 rng(555);
  std::uniform_int_distribution<int> pick(0, 7);
  auto small = [&](int which) -> ManifoldModel {
    switch (which) {
      case 0: return real_projective(2);
      case 1: return real_projective(3);
      case 2: return real_projective(4);
      case 3: return complex_projective(1);
      case 4: return complex_projective(2);
      case 5: return sphere(2);
      case 6: return dold(1, 1);
      default: return dold(1, 2);
    }
  };
  for (int trial = 0; trial < 10; ++trial) {
    auto p = product(small(pick(rng)), small(pick(rng)));
    INFO(p.name);
    SteenrodContext ctx(p);
    CHECK(wu_check(ctx));
  }
}

TEST_CASE("wu class pairs as the square against every complementary class") {
  // defining property: <v_i x, [M]> = <Sq^i x, [M]> for all x of degree dim-i
  std::vector<ManifoldModel> models;
  models.push_back(real_projective(4));
  models.push_back(dold(1, 2));
  models.push_back(product(real_projective(2), real_projective(2)));
  for (const auto& m : models) {
    SteenrodContext ctx(m);
    auto v = wu_class(ctx);
    for (int i = 0; i <= m.dimension / 2; ++i) {
      auto vi = graded_component(v, i);
      for (std::uint32_t b = 0; b < m.ring->basis.size(); ++b) {
        if (m.ring->basis[b].degree != m.dimension - i) continue;
        auto x = basis_element(m.ring, b);
        INFO(m.name << " i=" << i << " x=" << m.ring->basis[b].name);
        CHECK(pair_with_fundamental_class(vi * x) ==
              pair_with_fundamental_class(ctx.sq(i, x)));
      }
    }
  }
}

TEST_CASE("context rejects rings without factorization data") {
  // hand-build a structure model whose positive-degree basis lacks exponents
  std::vector<Generator> gens = {{"u", 2, 2}};
  std::vector<BasisElement> elems = {{"1", 0, {}}, {"u", 2, {}}};
  auto ring = make_structure_ring(Coefficients::Z2, gens, elems, {StructureProduct{1, 1, {}}},
                                  "opaque");
  auto w = unit_element(ring);
  ManifoldModel m;
  m.name = "opaque";
  m.dimension = 2;
  m.orientable = true;
  m.ring = ring;
  m.sw = w;
  m.sq_on_generators = {{zero_element(ring), zero_element(ring)}};
  CHECK_THROWS_AS(SteenrodContext(m), std::invalid_argument);
}
