#include <catch2/catch_amalgamated.hpp>

#include "foldcob/expr.hpp"

#include <random>

using namespace foldcob;
using Catch::Matchers::ContainsSubstring;

static ManifoldExpr atom(std::string name, std::vector<int> args) {
  ManifoldExpr e;
  e.atom = std::move(name);
  e.args = std::move(args);
  return e;
}

TEST_CASE("atom parsing") {
  auto e = parse_manifold("RP(4)");
  CHECK(e == atom("RP", {4}));
  CHECK(e.to_string() == "RP(4)");
  CHECK(parse_manifold("Dold(1,2)") == atom("Dold", {1, 2}));
  CHECK(parse_manifold(" S( 6 ) ") == atom("S", {6}));
}

TEST_CASE("powers expand into flat products") {
  auto e = parse_manifold("Dold(1,2) x RP(2)^2");
  REQUIRE(e.kind == ManifoldExpr::Kind::Product);
  REQUIRE(e.factors.size() == 3);
  CHECK(e.factors[0] == atom("Dold", {1, 2}));
  CHECK(e.factors[1] == atom("RP", {2}));
  CHECK(e.factors[2] == atom("RP", {2}));
  CHECK(e.to_string() == "Dold(1,2) x RP(2) x RP(2)");

  auto f = parse_manifold("(Dold(1,2) x RP(2))^2");
  REQUIRE(f.factors.size() == 4);
  CHECK(f.factors[0] == atom("Dold", {1, 2}));
  CHECK(f.factors[1] == atom("RP", {2}));
  CHECK(f.factors[2] == atom("Dold", {1, 2}));
  CHECK(f.factors[3] == atom("RP", {2}));

  CHECK(parse_manifold("S(1)^2^2").factors.size() == 4);
  CHECK(parse_manifold("RP(3)^1") == atom("RP", {3}));
  CHECK(parse_manifold("RP(2) x S(1)^3").factors.size() == 4);
}

TEST_CASE("parentheses group without changing flat shape") {
  CHECK(parse_manifold("(RP(2))") == atom("RP", {2}));
  CHECK(parse_manifold("(RP(2) x S(1)) x CP(2)") ==
        parse_manifold("RP(2) x S(1) x CP(2)"));
}

TEST_CASE("serialize then parse is the identity") {
  std::mt19937 rng(616);
  std::uniform_int_distribution<int> nfac(1, 4);
  std::uniform_int_distribution<int> which(0, 3);
  std::uniform_int_distribution<int> small(1, 6);
  for (int trial = 0; trial < 60; ++trial) {
    int n = nfac(rng);
    std::vector<ManifoldExpr> parts;
    for (int i = 0; i < n; ++i) {
      switch (which(rng)) {
        case 0: parts.push_back(atom("RP", {small(rng)})); break;
        case 1: parts.push_back(atom("CP", {small(rng)})); break;
        case 2: parts.push_back(atom("S", {small(rng)})); break;
        default: parts.push_back(atom("Dold", {small(rng) - 1, small(rng)})); break;
      }
    }
    ManifoldExpr e;
    if (n == 1) {
      e = parts[0];
    } else {
      e.kind = ManifoldExpr::Kind::Product;
      e.factors = parts;
    }
    CAPTURE(e.to_string());
    CHECK(parse_manifold(e.to_string()) == e);
  }
}

TEST_CASE("Load atoms") {
  auto e = parse_manifold("Load(data/x.ring)");
  CHECK(e.atom == "Load");
  CHECK(e.path == "data/x.ring");
  CHECK(e.to_string() == "Load(data/x.ring)");
  CHECK(parse_manifold("Load( spaced.ring )").path == "spaced.ring");
  CHECK(parse_manifold("Load(a(b).ring)").path == "a(b).ring");
  auto prod = parse_manifold("Load(a.ring) x S(2)");
  REQUIRE(prod.factors.size() == 2);
  CHECK(prod.factors[0].path == "a.ring");
  CHECK_THROWS_WITH(parse_manifold("Load()"), ContainsSubstring("Load needs a file path"));
  CHECK_THROWS_WITH(parse_manifold("Load(x.ring"), ContainsSubstring("closing Load("));
}

TEST_CASE("syntax errors carry a position") {
  CHECK_THROWS_WITH(parse_manifold("CP(0)"), ContainsSubstring("CP(n) needs n >= 1"));
  CHECK_THROWS_WITH(parse_manifold("CP(0)"), ContainsSubstring("position"));
  CHECK_THROWS_WITH(parse_manifold("RP(2"), ContainsSubstring("expected ')'"));
  CHECK_THROWS_WITH(parse_manifold("RP"), ContainsSubstring("expected '(' after 'RP'"));
  CHECK_THROWS_WITH(parse_manifold("Foo(2)"), ContainsSubstring("unknown atom 'Foo'"));
  CHECK_THROWS_WITH(parse_manifold(""), ContainsSubstring("expected a manifold atom"));
  CHECK_THROWS_WITH(parse_manifold("RP(2))"), ContainsSubstring("trailing"));
  CHECK_THROWS_WITH(parse_manifold("Dold(1)"), ContainsSubstring("expected ','"));
  CHECK_THROWS_WITH(parse_manifold("Dold(0,0)"), ContainsSubstring("m + 2n >= 1"));
  CHECK_THROWS_WITH(parse_manifold("S(1) x x S(2)"),
                    ContainsSubstring("expected '(' after 'x'"));
  CHECK_THROWS_WITH(parse_manifold("S(1) x "),
                    ContainsSubstring("expected a manifold atom"));
  CHECK_THROWS_WITH(parse_manifold("RP(2)^0"), ContainsSubstring("power must be >= 1"));
}

TEST_CASE("expression evaluation") {
  auto m = evaluate_manifold("RP(2) x RP(2)");
  CHECK(m.name == "RP(2) x RP(2)");
  CHECK(m.dimension == 4);
  CHECK(m.ring->basis.size() == 9);

  auto d = evaluate_manifold("Dold(1,2)");
  CHECK(d.dimension == 5);
  CHECK(d.orientable);

  auto cube = evaluate_manifold("CP(1)^3");
  CHECK(cube.dimension == 6);
  CHECK(cube.has_integral());

  SECTION("Load needs a loader") {
    CHECK_THROWS_WITH(evaluate_manifold("Load(x.ring)"),
                      ContainsSubstring("needs a config loader"));
  }
  SECTION("Load goes through the callback") {
    int calls = 0;
    auto loader = [&](const std::string& path) {
      ++calls;
      CHECK(path == "p2.ring");
      return real_projective(2);
    };
    auto w = evaluate_manifold("Load(p2.ring) x S(3)", loader);
    CHECK(calls == 1);
    CHECK(w.dimension == 5);
  }
}
