#pragma once

// Steenrod squares over the catalog's mod-2 rings.  The action is generated
// by the models' per-generator data and extended multiplicatively: the total
// square is a ring homomorphism, so on a basis monomial it is the product of
// the generator totals.  Wu classes are recovered from the nondegenerate
// top-degree pairing by linear algebra over Z/2.

#include <string>
#include <vector>

#include "foldcob/catalog.hpp"

namespace foldcob {

class SteenrodContext {
 public:
  explicit SteenrodContext(const ManifoldModel& model) : model_(&model) {
    const RingPtr& r = model.ring;
    std::vector<RingElement> gen_total;
    for (std::size_t g = 0; g < r->generators.size(); ++g) {
      RingElement total = generator_element(r, g);
      for (const auto& e : model.sq_on_generators[g]) total = total + e;
      gen_total.push_back(std::move(total));
    }
    for (std::uint32_t b = 0; b < r->basis.size(); ++b) {
      const BasisElement& be = r->basis[b];
      if (be.exponents.empty() && be.degree > 0)
        throw std::invalid_argument(
            "steenrod: basis element " + be.name +
            " carries no generator factorization; the square action is undefined");
      RingElement total = unit_element(r);
      for (std::size_t g = 0; g < be.exponents.size(); ++g)
        for (int e = 0; e < be.exponents[g]; ++e) total = total * gen_total[g];
      if (!(graded_component(total, be.degree) == basis_element(r, b)))
        throw std::logic_error("steenrod: total square of " + be.name +
                               " does not restrict to the identity in its own degree");
      RingElement sqr = basis_element(r, b) * basis_element(r, b);
      if (!(graded_component(total, 2 * be.degree) == sqr))
        throw std::logic_error("steenrod: top square of " + be.name +
                               " does not equal its ring square");
      for (int d = 2 * be.degree + 1; d <= r->top_degree; ++d)
        if (!graded_component(total, d).is_zero())
          throw std::logic_error("steenrod: square of " + be.name + " violates instability");
      basis_total_.push_back(std::move(total));
    }
  }

  const ManifoldModel& model() const { return *model_; }

  /// Sq^i(x) by linearity over the cached basis totals.
  RingElement sq(int i, const RingElement& x) const {
    if (i < 0) throw std::invalid_argument("steenrod: negative square index");
    if (x.ring() != model_->ring)
      throw std::invalid_argument("steenrod: element belongs to a different ring");
    RingElement out(model_->ring);
    for (const auto& [b, c] : x.terms()) {
      (void)c;
      int d = model_->ring->basis[b].degree;
      out = out + graded_component(basis_total_[b], d + i);
    }
    return out;
  }

  /// Sum of Sq^i(x) over all i; finite by instability.
  RingElement total_sq(const RingElement& x) const {
    if (x.ring() != model_->ring)
      throw std::invalid_argument("steenrod: element belongs to a different ring");
    RingElement out(model_->ring);
    for (const auto& [b, c] : x.terms()) {
      (void)c;
      out = out + basis_total_[b];
    }
    return out;
  }

 private:
  const ManifoldModel* model_;
  std::vector<RingElement> basis_total_;
};

/// The Wu class v = 1 + v_1 + ... with <v_i x, [M]> = <Sq^i x, [M]> for all x
/// of complementary degree; v_i = 0 above half the dimension.  Each v_i is
/// found by solving a linear system over Z/2 against the top-degree pairing,
/// which must be nondegenerate (square and invertible) for a valid closed-
/// manifold presentation.
inline RingElement wu_class(const SteenrodContext& ctx) {
  const ManifoldModel& m = ctx.model();
  const RingPtr& r = m.ring;
  RingElement v = unit_element(r);
  for (int i = 1; 2 * i <= m.dimension; ++i) {
    const auto& rows = r->basis_by_degree[static_cast<std::size_t>(i)];
    const auto& cols = r->basis_by_degree[static_cast<std::size_t>(m.dimension - i)];
    if (rows.size() != cols.size())
      throw std::runtime_error("steenrod: pairing between degrees " + std::to_string(i) +
                               " and " + std::to_string(m.dimension - i) + " of " + m.name +
                               " is not square; presentation is not a closed manifold ring");
    std::size_t n = rows.size();
    if (n == 0) continue;
    // Augmented system: unknown v_i = sum x_j rows[j] with
    // sum_j x_j <rows[j] cols[l]> = <Sq^i cols[l]> for every l.
    std::vector<std::vector<int>> aug(n, std::vector<int>(n + 1, 0));
    for (std::size_t l = 0; l < n; ++l) {
      for (std::size_t j = 0; j < n; ++j)
        aug[l][j] = static_cast<int>(
            pair_with_fundamental_class(basis_element(r, rows[j]) * basis_element(r, cols[l])) &
            1);
      aug[l][n] = static_cast<int>(
          pair_with_fundamental_class(ctx.sq(i, basis_element(r, cols[l]))) & 1);
    }
    for (std::size_t col = 0, row = 0; col < n; ++col) {
      std::size_t pivot = row;
      while (pivot < n && aug[pivot][col] == 0) ++pivot;
      if (pivot == n)
        throw std::runtime_error("steenrod: singular pairing matrix in degree " +
                                 std::to_string(i) + " of " + m.name);
      std::swap(aug[pivot], aug[row]);
      for (std::size_t l = 0; l < n; ++l)
        if (l != row && aug[l][col])
          for (std::size_t c = 0; c <= n; ++c) aug[l][c] ^= aug[row][c];
      ++row;
    }
    for (std::size_t j = 0; j < n; ++j)
      if (aug[j][n]) v.add_term(rows[j], 1);
  }
  return v;
}

/// Wu's formula w = Sq(v): the master consistency check tying the model's
/// Stiefel-Whitney data, Steenrod data, and pairing together.
inline bool wu_check(const SteenrodContext& ctx) {
  return ctx.total_sq(wu_class(ctx)) == ctx.model().sw;
}

}  // namespace foldcob
