#pragma once

// The manifold zoo: RP^n, CP^n, S^n, Dold manifolds P(m,n), finite products,
// and structure-table models assembled from external presentations.  Each
// model carries its mod-2 cohomology ring, the total tangent Stiefel-Whitney
// class, the Steenrod action on ring generators, orientation data, and (for
// torsion-free even-generator models) an integral ring with the total
// Pontryagin class.

#include <string>
#include <vector>

#include "foldcob/ringcore.hpp"

namespace foldcob {

struct ManifoldModel {
  std::string name;
  int dimension = 0;
  bool orientable = false;

  RingPtr ring;      // mod-2 cohomology
  RingElement sw;    // total tangent Stiefel-Whitney class

  // sq_on_generators[g][i-1] = Sq^i applied to generator g, 1 <= i <= deg g.
  std::vector<std::vector<RingElement>> sq_on_generators;

  // Integral side, present only when z_ring is non-null.
  RingPtr z_ring;
  RingElement pontryagin;  // total Pontryagin class

  bool has_integral() const { return static_cast<bool>(z_ring); }
};

namespace detail {

inline bool homogeneous_of_degree(const RingElement& e, int d) {
  for (const auto& [i, c] : e.terms()) {
    (void)c;
    if (e.ring()->basis[i].degree != d) return false;
  }
  return true;
}

}  // namespace detail

/// Validates and finishes a model: unit-led SW class, orientability read off
/// w_1, vanishing top class in odd dimensions, and the instability shape of
/// the generator Steenrod data (Sq^i g homogeneous of degree deg g + i,
/// Sq^{deg g} g = g^2).
inline ManifoldModel assemble_model(std::string name, RingPtr ring, RingElement sw,
                                    std::vector<std::vector<RingElement>> sq_on_generators,
                                    RingPtr z_ring = nullptr, RingElement pontryagin = {}) {
  if (!ring) throw std::invalid_argument("catalog: model needs a ring");
  if (sw.ring() != ring)
    throw std::invalid_argument("catalog: Stiefel-Whitney class lives in the wrong ring");
  ManifoldModel m;
  m.name = std::move(name);
  m.dimension = ring->top_degree;
  m.ring = ring;
  m.sw = std::move(sw);
  if (m.sw.coefficient(ring->unit_index) != 1)
    throw std::invalid_argument("catalog: total Stiefel-Whitney class of " + m.name +
                                " must start with 1");
  m.orientable = graded_component(m.sw, 1).is_zero();
  if (m.dimension % 2 == 1 && !graded_component(m.sw, m.dimension).is_zero())
    throw std::invalid_argument("catalog: odd-dimensional model " + m.name +
                                " has non-vanishing top Stiefel-Whitney class");

  if (sq_on_generators.size() != ring->generators.size())
    throw std::invalid_argument("catalog: Steenrod data of " + m.name +
                                " does not cover every generator");
  for (std::size_t g = 0; g < sq_on_generators.size(); ++g) {
    const Generator& gen = ring->generators[g];
    const auto& rows = sq_on_generators[g];
    if (static_cast<int>(rows.size()) != gen.degree)
      throw std::invalid_argument("catalog: generator " + gen.name + " of " + m.name +
                                  " needs Sq^1 .. Sq^" + std::to_string(gen.degree));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].ring() != ring)
        throw std::invalid_argument("catalog: Steenrod data of " + m.name +
                                    " lives in the wrong ring");
      if (!detail::homogeneous_of_degree(rows[i], gen.degree + static_cast<int>(i) + 1))
        throw std::invalid_argument("catalog: Sq^" + std::to_string(i + 1) + " " + gen.name +
                                    " of " + m.name + " has the wrong degree");
    }
    RingElement ge = generator_element(ring, g);
    if (!(rows.back() == ge * ge))
      throw std::invalid_argument("catalog: Sq^" + std::to_string(gen.degree) + " " + gen.name +
                                  " of " + m.name + " must equal the square of the generator");
  }
  m.sq_on_generators = std::move(sq_on_generators);

  if (z_ring) {
    if (pontryagin.ring() != z_ring)
      throw std::invalid_argument("catalog: Pontryagin class of " + m.name +
                                  " lives in the wrong ring");
    if (z_ring->coefficients != Coefficients::Z)
      throw std::invalid_argument("catalog: integral ring of " + m.name +
                                  " must have Z coefficients");
    if (pontryagin.coefficient(z_ring->unit_index) != 1)
      throw std::invalid_argument("catalog: total Pontryagin class of " + m.name +
                                  " must start with 1");
    m.z_ring = std::move(z_ring);
    m.pontryagin = std::move(pontryagin);
  }
  return m;
}

/// RP^n: Z2[a]/(a^{n+1}), w = (1+a)^{n+1}, Sq^1 a = a^2.
inline ManifoldModel real_projective(int n) {
  if (n < 1) throw std::invalid_argument("catalog: RP(n) needs n >= 1");
  auto r = make_monomial_ring(Coefficients::Z2, {{"a", 1, n + 1}}, n);
  auto a = generator_element(r, 0);
  auto w = power(unit_element(r) + a, n + 1);
  return assemble_model("RP(" + std::to_string(n) + ")", r, w, {{a * a}});
}

/// CP^n: mod-2 ring Z2[a]/(a^{n+1}) with deg a = 2 and w = (1+a)^{n+1};
/// integral ring Z[g]/(g^{n+1}) with total Pontryagin class (1+g^2)^{n+1}.
inline ManifoldModel complex_projective(int n) {
  if (n < 1) throw std::invalid_argument("catalog: CP(n) needs n >= 1");
  auto r = make_monomial_ring(Coefficients::Z2, {{"a", 2, n + 1}}, 2 * n);
  auto a = generator_element(r, 0);
  auto w = power(unit_element(r) + a, n + 1);
  auto zr = make_monomial_ring(Coefficients::Z, {{"g", 2, n + 1}}, 2 * n);
  auto g = generator_element(zr, 0);
  auto p = power(unit_element(zr) + g * g, n + 1);
  return assemble_model("CP(" + std::to_string(n) + ")", r, w,
                        {{zero_element(r), a * a}}, zr, p);
}

/// Dold manifold P(m,n) = (S^m x CP^n)/Z2, dimension m+2n:
/// Z2[c,d]/(c^{m+1}, d^{n+1}) with deg c = 1, deg d = 2,
/// w = (1+c)^m (1+c+d)^{n+1}, Sq^1 c = c^2, Sq^1 d = cd, Sq^2 d = d^2.
inline ManifoldModel dold(int m, int n) {
  if (m < 0 || n < 0 || m + 2 * n < 1)
    throw std::invalid_argument("catalog: Dold(m,n) needs m,n >= 0 and m+2n >= 1");
  auto r = make_monomial_ring(Coefficients::Z2, {{"c", 1, m + 1}, {"d", 2, n + 1}}, m + 2 * n);
  auto c = generator_element(r, 0);
  auto d = generator_element(r, 1);
  auto w = power(unit_element(r) + c, m) * power(unit_element(r) + c + d, n + 1);
  return assemble_model("Dold(" + std::to_string(m) + "," + std::to_string(n) + ")", r, w,
                        {{c * c}, {c * d, d * d}});
}

/// S^n: single generator of degree n with square zero; w = 1.
inline ManifoldModel sphere(int n) {
  if (n < 1) throw std::invalid_argument("catalog: S(n) needs n >= 1");
  auto r = make_monomial_ring(Coefficients::Z2, {{"s", n, 2}}, n);
  std::vector<RingElement> sq(static_cast<std::size_t>(n), zero_element(r));
  return assemble_model("S(" + std::to_string(n) + ")", r, unit_element(r), {std::move(sq)});
}

/// Product model via the tensor product of the factors' rings; w and the
/// Pontryagin class multiply, the Steenrod data is pushed through the
/// inclusions, and integral data survives exactly when both factors carry it.
inline ManifoldModel product(const ManifoldModel& A, const ManifoldModel& B) {
  auto kr = kunneth_product(A.ring, B.ring);
  auto w = include_left(A.sw, kr) * include_right(B.sw, kr);
  std::vector<std::vector<RingElement>> sq;
  for (const auto& rows : A.sq_on_generators) {
    std::vector<RingElement> pushed;
    for (const auto& e : rows) pushed.push_back(include_left(e, kr));
    sq.push_back(std::move(pushed));
  }
  for (const auto& rows : B.sq_on_generators) {
    std::vector<RingElement> pushed;
    for (const auto& e : rows) pushed.push_back(include_right(e, kr));
    sq.push_back(std::move(pushed));
  }
  RingPtr zr;
  RingElement p;
  if (A.has_integral() && B.has_integral()) {
    auto kz = kunneth_product(A.z_ring, B.z_ring);
    zr = kz.ring;
    p = include_left(A.pontryagin, kz) * include_right(B.pontryagin, kz);
  }
  return assemble_model(A.name + " x " + B.name, kr.ring, std::move(w), std::move(sq), zr,
                        std::move(p));
}

/// Euler characteristic mod 2: for the models here this is the total mod-2
/// Betti number, i.e. the basis size, mod 2.
inline int euler_char_mod2(const ManifoldModel& m) {
  return static_cast<int>(m.ring->basis.size() % 2);
}

/// Codimension of the named Thom-Boardman locus in the source of a stable map
/// with target dimension excess k.
inline int thom_boardman_codim(const std::string& symbol, int k) {
  if (k < 0) throw std::invalid_argument("catalog: codimension parameter k must be >= 0");
  if (symbol == "Sigma^{1,0}") return k + 1;
  if (symbol == "Sigma^{1,1}") return 2 * (k + 1);
  if (symbol == "Sigma^{1,1}-nontransverse") return 3 * (k + 1);
  throw std::invalid_argument("catalog: unknown Thom-Boardman symbol " + symbol);
}

}  // namespace foldcob
