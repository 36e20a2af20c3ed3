#pragma once

// Finitely generated abelian groups in divisor-chain normal form, homology
// profiles of closed manifolds, and the mod-2 functors (tensor, Hom, Ext)
// needed to assemble bordism groups of maps into a 7-dimensional target.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace foldcob {

/// Z^r + Z/t1 + ... + Z/tk.  A value is canonical when the torsion
/// coefficients form a divisibility chain t1 | t2 | ... | tk with ti >= 2;
/// normalize() brings any coefficient list into that form, so canonical
/// values compare isomorphism classes by operator==.
struct FGAbGroup {
  std::int64_t free_rank = 0;
  std::vector<std::int64_t> torsion;

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }

  bool operator==(const FGAbGroup& other) const = default;

  /// Renders "0", "Z", "Z^2", "Z + Z2", "Z2 + Z4", ...
  std::string to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream out;
    bool first = true;
    if (free_rank > 0) {
      out << "Z";
      if (free_rank > 1) out << "^" << free_rank;
      first = false;
    }
    for (auto t : torsion) {
      if (!first) out << " + ";
      out << "Z" << t;
      first = false;
    }
    return out.str();
  }
};

inline FGAbGroup direct_sum(const FGAbGroup& a, const FGAbGroup& b) {
  FGAbGroup s;
  s.free_rank = a.free_rank + b.free_rank;
  s.torsion = a.torsion;
  s.torsion.insert(s.torsion.end(), b.torsion.begin(), b.torsion.end());
  return s;
}

/// Divisor-chain normal form.  Repeatedly replaces a non-dividing sorted
/// pair (a, b) by (gcd(a,b), lcm(a,b)); the product of the coefficients is
/// preserved, and the multiset strictly gains divisibility each pass, so
/// the loop terminates with t1 | t2 | ... | tk.
inline FGAbGroup normalize(FGAbGroup g) {
  if (g.free_rank < 0) throw std::invalid_argument("fgab: negative free rank");
  for (auto t : g.torsion)
    if (t < 2)
      throw std::invalid_argument(
          "fgab: torsion coefficients must be >= 2, got " + std::to_string(t));
  auto& v = g.torsion;
  bool changed = true;
  while (changed) {
    changed = false;
    std::sort(v.begin(), v.end());
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      if (v[i + 1] % v[i] != 0) {
        std::int64_t d = std::gcd(v[i], v[i + 1]);
        std::int64_t l = v[i] / d * v[i + 1];
        v[i] = d;
        v[i + 1] = l;
        changed = true;
      }
    }
    v.erase(std::remove(v.begin(), v.end(), std::int64_t{1}), v.end());
  }
  return g;
}

/// G (x) Z/2: one Z/2 per free generator and per even torsion coefficient.
inline FGAbGroup tensor_z2(const FGAbGroup& g) {
  std::int64_t count = g.free_rank;
  for (auto t : g.torsion)
    if (t % 2 == 0) ++count;
  return FGAbGroup{0, std::vector<std::int64_t>(count, 2)};
}

/// Hom(G, Z/2), same underlying count as the tensor (finite Z/2 ranks agree).
inline FGAbGroup hom_z2(const FGAbGroup& g) { return tensor_z2(g); }

/// Ext(G, Z/2): free part contributes nothing, even torsion one Z/2 each.
inline FGAbGroup ext_z2(const FGAbGroup& g) {
  std::int64_t count = 0;
  for (auto t : g.torsion)
    if (t % 2 == 0) ++count;
  return FGAbGroup{0, std::vector<std::int64_t>(count, 2)};
}

/// Largest 2-power-times-free quotient: Z stays, each Z/t becomes Z/2^a where
/// 2^a is the 2-primary part of t (entries with odd t disappear).
inline FGAbGroup modulo_odd_torsion(const FGAbGroup& g) {
  FGAbGroup r;
  r.free_rank = g.free_rank;
  for (auto t : g.torsion) {
    std::int64_t two = 1;
    while (t % 2 == 0) {
      two *= 2;
      t /= 2;
    }
    if (two > 1) r.torsion.push_back(two);
  }
  return normalize(r);
}

/// Integral homology of a closed manifold, one group per degree.
struct HomologyProfile {
  std::string name;
  int dimension = 0;
  bool orientable = true;
  std::vector<FGAbGroup> groups;  // groups[j] = H_j; degrees outside are 0

  const FGAbGroup& homology(int j) const {
    static const FGAbGroup zero{};
    if (j < 0 || j >= static_cast<int>(groups.size())) return zero;
    return groups[static_cast<std::size_t>(j)];
  }

  /// H_0 = Z.  Informational only; nothing below enforces it.
  bool looks_connected() const { return homology(0) == FGAbGroup{1, {}}; }
};

/// H_j(P; Z/2) by universal coefficients: (H_j (x) Z/2) + Ext(H_{j-1}, Z/2).
inline FGAbGroup mod2_homology(const HomologyProfile& p, int j) {
  return normalize(direct_sum(tensor_z2(p.homology(j)), ext_z2(p.homology(j - 1))));
}

struct Omega6Result {
  FGAbGroup group;
  bool modulo_odd = true;  // always reported only up to odd torsion
};

/// Oriented bordism of a target space P in dimension 6, modulo odd torsion:
/// H_1(P; Z/2) + H_2(P; Z) + H_6(P; Z), the three columns that survive since
/// the coefficient groups in the remaining degrees vanish.
inline Omega6Result omega6_of_target(const HomologyProfile& p) {
  FGAbGroup g = mod2_homology(p, 1);
  g = direct_sum(g, modulo_odd_torsion(p.homology(2)));
  g = direct_sum(g, modulo_odd_torsion(p.homology(6)));
  return Omega6Result{normalize(g)};
}

struct TargetConditionReport {
  bool holds = false;
  FGAbGroup h1_mod2;
  FGAbGroup h2_mod2;
  std::string witness;  // names the first nonvanishing obstruction
};

/// The vanishing condition H_1(P; Z/2) = 0 = H_2(P; Z/2) for a closed
/// orientable 7-dimensional target.  H_6(P; Z) never enters: by Poincare
/// duality it is the free part of H_1, so its contribution is already
/// controlled by the H_1 test.
inline TargetConditionReport target_condition_dim7(const HomologyProfile& p) {
  if (p.dimension != 7)
    throw std::invalid_argument("target condition requires a 7-dimensional profile, got dimension " +
                                std::to_string(p.dimension));
  TargetConditionReport r;
  r.h1_mod2 = mod2_homology(p, 1);
  r.h2_mod2 = mod2_homology(p, 2);
  r.holds = r.h1_mod2.is_trivial() && r.h2_mod2.is_trivial();
  if (!r.holds) {
    std::ostringstream w;
    if (!r.h1_mod2.is_trivial())
      w << "H_1(P; Z/2) = " << r.h1_mod2.to_string();
    else
      w << "H_2(P; Z/2) = " << r.h2_mod2.to_string();
    r.witness = w.str();
  }
  return r;
}

}  // namespace foldcob
