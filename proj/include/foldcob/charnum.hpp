#pragma once

// Characteristic numbers of the catalog models: normal Stiefel-Whitney
// numbers, the mod-2 cusp count of fold-with-cusp maps in dimensions 4k+2,
// and normal Pontryagin numbers with their 3-power gcd estimate.

#include <cstdlib>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "foldcob/catalog.hpp"
#include "foldcob/foldgroups.hpp"

namespace foldcob {

/// Total normal Stiefel-Whitney class, the multiplicative inverse of w.
inline RingElement normal_sw_class(const ManifoldModel& W) { return invert_total_class(W.sw); }

/// Stiefel-Whitney number for a partition of dim W; `normal` selects the
/// normal class, otherwise the tangent class is paired.
inline int sw_number(const ManifoldModel& W, const std::vector<int>& partition, bool normal) {
  int total = 0;
  for (int p : partition) {
    if (p < 1) throw std::invalid_argument("charnum: partition entries must be positive");
    total = checked_add(total, p);
  }
  if (total != W.dimension) {
    std::ostringstream o;
    o << "charnum: partition weight " << total << " does not match dim " << W.name << " = "
      << W.dimension;
    throw std::invalid_argument(o.str());
  }
  RingElement cls = normal ? normal_sw_class(W) : W.sw;
  RingElement prod = unit_element(W.ring);
  for (int p : partition) prod = prod * graded_component(cls, p);
  return static_cast<int>(pair_with_fundamental_class(prod) & 1);
}

/// The two normal-class summands that decide the parity of the cusp count of
/// any generic map of W^{4k+2} into R^{6k+2}.
struct CuspParityReport {
  std::string manifold;
  int k = 0;
  int square_summand = 0;  // < wbar_{2k+1}^2 , [W] >
  int mixed_summand = 0;   // < wbar_{2k+2} wbar_{2k} , [W] >
  int parity = 0;
};

inline CuspParityReport cusp_parity(const ManifoldModel& W) {
  if (W.dimension % 4 != 2) {
    std::ostringstream o;
    o << "charnum: the cusp parity formula applies in dimensions 4k+2, and dim " << W.name
      << " = " << W.dimension;
    throw std::invalid_argument(o.str());
  }
  int k = (W.dimension - 2) / 4;
  RingElement wbar = normal_sw_class(W);
  RingElement odd = graded_component(wbar, 2 * k + 1);
  RingElement mixed = graded_component(wbar, 2 * k + 2) * graded_component(wbar, 2 * k);
  CuspParityReport r;
  r.manifold = W.name;
  r.k = k;
  r.square_summand = static_cast<int>(pair_with_fundamental_class(odd * odd) & 1);
  r.mixed_summand = static_cast<int>(pair_with_fundamental_class(mixed) & 1);
  r.parity = (r.square_summand + r.mixed_summand) % 2;
  return r;
}

/// Top normal Pontryagin number pbar_m[W] of an oriented W^{4m}; this is the
/// algebraic number of cusps of a generic map into R^{6m-1}.
inline std::int64_t normal_pontryagin_number(const ManifoldModel& W, int m) {
  if (m < 1) throw std::invalid_argument("charnum: pontryagin index m must be >= 1");
  if (W.dimension != 4 * m) {
    std::ostringstream o;
    o << "charnum: pbar_" << m << " needs dim = " << 4 * m << ", and dim " << W.name << " = "
      << W.dimension;
    throw std::invalid_argument(o.str());
  }
  if (!W.orientable)
    throw std::invalid_argument("charnum: " + W.name + " is not orientable");
  if (!W.has_integral())
    throw std::invalid_argument("charnum: " + W.name + " carries no integral model");
  RingElement pbar = invert_total_class(W.pontryagin);
  return pair_with_fundamental_class(graded_component(pbar, 4 * m));
}

/// gcd of pbar_m over a family of 4m-dimensional models, compared against
/// 3^t.  The gcd over all closed oriented 4m-manifolds equals 3^t exactly;
/// any finite family can only witness a multiple of it.
struct PontryaginGcdReport {
  int m = 0;
  std::vector<std::int64_t> values;
  std::int64_t gcd = 0;
  int t = 0;
  std::int64_t three_pow_t = 0;
  bool divisible = false;  // 3^t | gcd
  bool exact = false;      // gcd == 3^t
};

inline PontryaginGcdReport pontryagin_gcd_estimate(int m,
                                                   const std::vector<ManifoldModel>& family) {
  if (family.empty())
    throw std::invalid_argument("charnum: gcd estimate needs a non-empty family");
  PontryaginGcdReport r;
  r.m = m;
  for (const auto& W : family) {
    std::int64_t v = normal_pontryagin_number(W, m);
    r.values.push_back(v);
    r.gcd = std::gcd(r.gcd, v);
  }
  r.t = t_invariant(m);
  r.three_pow_t = pow3(r.t);
  r.divisible = r.gcd % r.three_pow_t == 0;
  r.exact = r.gcd == r.three_pow_t;
  return r;
}

}  // namespace foldcob
