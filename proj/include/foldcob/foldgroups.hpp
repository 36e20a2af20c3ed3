#pragma once

// Answer groups for the fold cobordism / bordism classification: triadic
// digit arithmetic for the 3-power torsion, and symbolic group expressions
// with exact-sequence wrappers for the cases the classification leaves
// unresolved up to extension.

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "foldcob/fgab.hpp"

namespace foldcob {

/// Sum of base-3 digits.
inline int alpha3(std::int64_t x) {
  if (x < 0) throw std::invalid_argument("foldgroups: alpha3 needs a non-negative integer");
  int s = 0;
  while (x > 0) {
    s += static_cast<int>(x % 3);
    x /= 3;
  }
  return s;
}

/// t = min{ j : alpha3(2m + j) <= 3j }.  The digit sum grows logarithmically,
/// so j <= 2m is a safe search bound for m >= 1.
inline int t_invariant(int m) {
  if (m < 1) throw std::invalid_argument("foldgroups: t is defined for m >= 1");
  for (int j = 0; j <= 2 * m; ++j)
    if (alpha3(2 * m + j) <= 3 * j) return j;
  throw std::logic_error("foldgroups: t search exceeded its bound");
}

inline std::int64_t pow3(int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > std::numeric_limits<std::int64_t>::max() / 3)
      throw std::overflow_error("foldgroups: 3^e overflows");
    r *= 3;
  }
  return r;
}

/// A named cobordism/bordism group left symbolic: N(n), Omega(n), C(n,k),
/// C_so(n,k), optionally relative to a target ("Omega(5; P)").
struct SymbolicGroup {
  std::string family;  // "N", "Omega", "C", "C_so"
  int n = 0;
  int k = -1;          // second index for C / C_so; -1 when absent
  std::string target;  // target label; empty when none

  SymbolicGroup() = default;
  SymbolicGroup(std::string fam, int n_, int k_ = -1, std::string tgt = {})
      : family(std::move(fam)), n(n_), k(k_), target(std::move(tgt)) {}

  std::string to_string() const {
    std::ostringstream o;
    o << family << "(" << n;
    if (k >= 0) o << "," << k;
    if (!target.empty()) o << "; " << target;
    o << ")";
    return o.str();
  }
  bool operator==(const SymbolicGroup&) const = default;
};

/// Z_{3^e} with the exponent either pinned (lo == hi) or only bounded
/// (lo <= e <= hi, printed with its symbol, e.g. u for the bordism case).
struct ThreePowerAtom {
  int lo = 0;
  int hi = 0;
  std::string symbol = "t";
  bool operator==(const ThreePowerAtom&) const = default;

  std::string to_string() const {
    std::ostringstream o;
    if (lo == hi) {
      o << "Z(3^" << hi << ")";
    } else {
      o << "Z(3^" << symbol << ") with " << symbol << " in [" << lo << "," << hi << "]";
    }
    return o.str();
  }
};

/// A formal direct sum of a normalized concrete part, symbolic summands, and
/// at most one 3-power atom; or an exact-sequence wrapper 0 -> sub -> ? ->
/// quot -> 0 when the classification determines the group only up to
/// extension; or an explicit "undetermined" verdict carrying the reason.
struct GroupExpression {
  FGAbGroup concrete;
  std::vector<SymbolicGroup> symbolic;
  std::optional<ThreePowerAtom> three_power;
  std::shared_ptr<GroupExpression> ses_sub;
  std::shared_ptr<GroupExpression> ses_quot;
  std::string note;
  bool undetermined = false;

  bool is_ses() const { return ses_sub && ses_quot; }

  std::string to_string() const {
    if (undetermined) return note.empty() ? "undetermined" : "undetermined (" + note + ")";
    if (is_ses())
      return "SES[" + ses_sub->to_string() + " -> ? -> " + ses_quot->to_string() + "]";
    std::vector<std::string> parts;
    if (!concrete.is_trivial()) parts.push_back(concrete.to_string());
    for (const auto& s : symbolic) parts.push_back(s.to_string());
    if (three_power && !(three_power->lo == 0 && three_power->hi == 0))
      parts.push_back(three_power->to_string());
    if (parts.empty()) return "0";
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
    return out;
  }
};

inline GroupExpression concrete_expression(FGAbGroup g) {
  GroupExpression e;
  e.concrete = normalize(std::move(g));
  return e;
}

inline GroupExpression symbolic_expression(SymbolicGroup s) {
  GroupExpression e;
  e.symbolic.push_back(std::move(s));
  return e;
}

inline GroupExpression ses_expression(GroupExpression sub, GroupExpression quot) {
  GroupExpression e;
  e.ses_sub = std::make_shared<GroupExpression>(std::move(sub));
  e.ses_quot = std::make_shared<GroupExpression>(std::move(quot));
  return e;
}

namespace detail {

inline void require_fold_regime(int n, int k) {
  if (k >= 0 && n == 2 * k + 1) return;
  std::ostringstream o;
  o << "foldgroups: the pair (n,k) = (" << n << "," << k
    << ") is outside the resolved regime n = 2k+1: for 2k+1 > n the forgetful morphisms to the "
       "manifold (co)bordism groups are isomorphisms by transversality, and for 2k+1 < n no "
       "classification is stated";
  throw std::invalid_argument(o.str());
}

}  // namespace detail

/// Cobordism group of fold maps of n-manifolds into R^{n+k}, n = 2k+1.
inline GroupExpression fold_cobordism_group(int n, int k, bool oriented) {
  detail::require_fold_regime(n, k);
  if (!oriented) return symbolic_expression({"N", n});
  if (n % 4 == 1) {
    int m = (n - 1) / 4;
    if (m == 0) return concrete_expression({0, {2}});
    if (m == 1) return concrete_expression({0, {2, 2}});
    return symbolic_expression({"Omega", n});
  }
  int m = (n + 1) / 4;
  GroupExpression e = symbolic_expression({"Omega", n});
  int t = t_invariant(m);
  e.three_power = ThreePowerAtom{t, t, "t"};
  return e;
}

/// Bordism group of fold maps (source and target both move), n = 2k+1.
inline GroupExpression fold_bordism_group(int n, int k, bool oriented) {
  detail::require_fold_regime(n, k);
  if (!oriented) return symbolic_expression({"C", n, k});
  if (n % 4 == 1) {
    int m = (n - 1) / 4;
    if (m == 0) return concrete_expression({0, {2}});
    if (m == 1) return concrete_expression({0, {2}});
    return symbolic_expression({"C_so", n, k});
  }
  int m = (n + 1) / 4;
  GroupExpression e = symbolic_expression({"C_so", n, k});
  e.three_power = ThreePowerAtom{0, t_invariant(m), "u"};
  e.note = "the 3-power exponent u is only bounded, 0 <= u <= t";
  return e;
}

/// Cobordism group of fold maps of n-manifolds into a fixed closed target P
/// with dim P = (3n-1)/2.  The n = 1 oriented case is classified for the
/// circle target only; the n = 5 oriented case needs the mod-2 homology
/// condition on P and reports a condition failure as an undetermined result
/// rather than an error.
inline GroupExpression target_fold_group(int n, const HomologyProfile& P, bool oriented) {
  if (n < 1 || n % 2 == 0)
    throw std::invalid_argument("foldgroups: source dimension must be odd and positive");
  if (2 * P.dimension != 3 * n - 1) {
    std::ostringstream o;
    o << "foldgroups: target dimension " << P.dimension << " does not match source dimension "
      << n << " (need dim P = (3n-1)/2 = " << (3 * n - 1) / 2 << ")";
    throw std::invalid_argument(o.str());
  }
  std::string tag = P.name.empty() ? "P" : P.name;
  if (!oriented) return symbolic_expression({"N", n, -1, tag});
  if (!P.orientable)
    throw std::invalid_argument("foldgroups: the oriented classification needs an orientable "
                                "target, and " + tag + " is not");
  if (n == 1) {
    bool circle = P.dimension == 1 && P.homology(0) == FGAbGroup{1, {}} &&
                  P.homology(1) == FGAbGroup{1, {}};
    if (circle) return concrete_expression({1, {2}});
    GroupExpression e;
    e.undetermined = true;
    e.note = "only the circle target is classified for fold maps of 1-manifolds";
    return e;
  }
  if (n % 4 == 1) {
    int m = (n - 1) / 4;
    if (m == 1) {
      TargetConditionReport cond = target_condition_dim7(P);
      if (!cond.holds) {
        GroupExpression e;
        e.undetermined = true;
        e.note = "no answer for this target: condition fails, " + cond.witness;
        return e;
      }
      return ses_expression(concrete_expression({0, {2}}),
                            symbolic_expression({"Omega", 5, -1, tag}));
    }
    return symbolic_expression({"Omega", n, -1, tag});
  }
  int m = (n + 1) / 4;
  GroupExpression sub;
  sub.three_power = ThreePowerAtom{0, t_invariant(m), "v"};
  GroupExpression e =
      ses_expression(std::move(sub), symbolic_expression({"Omega", n, -1, tag}));
  e.note = "the 3-power exponent v is only bounded, 0 <= v <= t";
  return e;
}

/// Optional lookup table of small (co)bordism groups with citations, used to
/// expand symbolic atoms like Omega(5) into concrete groups.
struct BordismTableEntry {
  std::string family;  // "Omega" or "N"
  int n = 0;
  FGAbGroup value;
  std::string citation;
};

struct BordismTable {
  std::vector<BordismTableEntry> entries;

  const BordismTableEntry* find(const std::string& family, int n) const {
    for (const auto& e : entries)
      if (e.family == family && e.n == n) return &e;
    return nullptr;
  }
};

/// Replaces table-known absolute symbolic atoms (no target tag, no second
/// index) by their concrete values; everything else is kept symbolic.
inline GroupExpression expand_with_table(const GroupExpression& e, const BordismTable& table) {
  GroupExpression out = e;
  if (e.is_ses()) {
    out.ses_sub = std::make_shared<GroupExpression>(expand_with_table(*e.ses_sub, table));
    out.ses_quot = std::make_shared<GroupExpression>(expand_with_table(*e.ses_quot, table));
    return out;
  }
  out.symbolic.clear();
  for (const auto& s : e.symbolic) {
    const BordismTableEntry* hit =
        (s.target.empty() && s.k < 0) ? table.find(s.family, s.n) : nullptr;
    if (hit)
      out.concrete = direct_sum(out.concrete, hit->value);
    else
      out.symbolic.push_back(s);
  }
  out.concrete = normalize(out.concrete);
  if (out.three_power && out.three_power->lo == out.three_power->hi) {
    int exp3 = out.three_power->hi;
    if (exp3 > 0) {
      FGAbGroup g{0, {pow3(exp3)}};
      out.concrete = normalize(direct_sum(out.concrete, g));
    }
    out.three_power.reset();
  }
  return out;
}

}  // namespace foldcob
