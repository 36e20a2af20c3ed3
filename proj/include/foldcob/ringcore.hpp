#pragma once

// Exact arithmetic in truncated graded-commutative cohomology rings.
//
// Two presentation kinds share a single sparse element type:
//   * monomial quotients  k[g1,...,gn]/(g1^e1,...,gn^en), degrees graded,
//     products truncated above a top degree;
//   * structure-constant presentations with an explicit multiplication
//     table, for rings whose relations are not monomial.
// Coefficients are Z/2 or Z (exact 64-bit with overflow checking; integral
// presentations restrict to even-degree generators so graded commutativity
// carries no signs).

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

namespace foldcob {

enum class Coefficients { Z2, Z };

enum class RingKind { Monomial, Structure };

struct Generator {
  std::string name;
  int degree = 1;
  int nilpotency = 2;  // g^nilpotency = 0; 1 means the generator itself is 0
};

struct BasisElement {
  std::string name;
  int degree = 0;
  // Exponents over the generator list ("factorization"); may be empty for
  // structure presentations that do not provide one.
  std::vector<int> exponents;
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("ringcore: 64-bit integer overflow in addition");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("ringcore: 64-bit integer overflow in multiplication");
  return r;
}

class RingPresentation;
using RingPtr = std::shared_ptr<const RingPresentation>;

class RingPresentation {
 public:
  Coefficients coefficients = Coefficients::Z2;
  RingKind kind = RingKind::Monomial;
  std::string label;
  std::vector<Generator> generators;
  std::vector<BasisElement> basis;
  int top_degree = 0;
  std::uint32_t unit_index = 0;
  std::uint32_t top_index = 0;
  std::map<std::vector<int>, std::uint32_t> index_of_exponents;
  std::vector<std::vector<std::uint32_t>> basis_by_degree;
  // Structure tables keyed by (i << 32) | j; unit rows are implicit.
  std::unordered_map<std::uint64_t, std::vector<std::pair<std::uint32_t, std::int64_t>>> table;

  /// Product of two basis elements as a list of (basis index, coefficient).
  std::vector<std::pair<std::uint32_t, std::int64_t>> basis_product(std::uint32_t i,
                                                                    std::uint32_t j) const {
    if (i == unit_index) return {{j, 1}};
    if (j == unit_index) return {{i, 1}};
    if (kind == RingKind::Monomial) {
      const auto& a = basis[i];
      const auto& b = basis[j];
      if (a.degree + b.degree > top_degree) return {};
      std::vector<int> e(generators.size());
      for (std::size_t g = 0; g < e.size(); ++g) {
        e[g] = a.exponents[g] + b.exponents[g];
        if (e[g] >= generators[g].nilpotency) return {};
      }
      auto it = index_of_exponents.find(e);
      if (it == index_of_exponents.end()) return {};
      return {{it->second, 1}};
    }
    auto it = table.find((static_cast<std::uint64_t>(i) << 32) | j);
    if (it == table.end()) return {};
    return it->second;
  }
};

class RingElement {
 public:
  RingElement() = default;
  explicit RingElement(RingPtr ring) : ring_(std::move(ring)) {}

  const RingPtr& ring() const { return ring_; }
  const std::map<std::uint32_t, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Largest degree carrying a term, or -1 for the zero element.
  int degree() const {
    int d = -1;
    for (const auto& [i, c] : terms_) d = std::max(d, ring_->basis[i].degree);
    return d;
  }

  std::int64_t coefficient(std::uint32_t basis_index) const {
    auto it = terms_.find(basis_index);
    return it == terms_.end() ? 0 : it->second;
  }

  void add_term(std::uint32_t basis_index, std::int64_t c) {
    auto& slot = terms_[basis_index];
    slot = checked_add(slot, c);
    if (ring_->coefficients == Coefficients::Z2) slot = ((slot % 2) + 2) % 2;
    if (slot == 0) terms_.erase(basis_index);
  }

  bool operator==(const RingElement& other) const {
    return ring_ == other.ring_ && terms_ == other.terms_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [i, c] : terms_) {
      const std::string& name = ring_->basis[i].name;
      std::int64_t a = c;
      if (first) {
        if (a < 0) out << "-";
      } else {
        out << (a < 0 ? " - " : " + ");
      }
      a = a < 0 ? -a : a;
      if (a != 1 || name == "1")
        out << a;
      if (a != 1 && name != "1") out << "*";
      if (name != "1") out << name;
      first = false;
    }
    return out.str();
  }

 private:
  RingPtr ring_;
  std::map<std::uint32_t, std::int64_t> terms_;
};

inline void require_same_ring(const RingElement& a, const RingElement& b) {
  if (a.ring() != b.ring())
    throw std::invalid_argument("ringcore: elements belong to different ring presentations");
}

inline RingElement zero_element(const RingPtr& r) { return RingElement(r); }

inline RingElement unit_element(const RingPtr& r) {
  RingElement e(r);
  e.add_term(r->unit_index, 1);
  return e;
}

inline RingElement basis_element(const RingPtr& r, std::uint32_t index) {
  if (index >= r->basis.size()) throw std::invalid_argument("ringcore: basis index out of range");
  RingElement e(r);
  e.add_term(index, 1);
  return e;
}

/// The generator as an element; the zero element when its nilpotency is 1
/// (the quotient kills it outright).
inline RingElement generator_element(const RingPtr& r, std::size_t gen_index) {
  if (gen_index >= r->generators.size())
    throw std::invalid_argument("ringcore: generator index out of range");
  if (r->generators[gen_index].nilpotency <= 1) return RingElement(r);
  std::vector<int> e(r->generators.size(), 0);
  e[gen_index] = 1;
  auto it = r->index_of_exponents.find(e);
  if (it == r->index_of_exponents.end())
    throw std::invalid_argument("ringcore: presentation lacks a basis entry for generator " +
                                r->generators[gen_index].name);
  return basis_element(r, it->second);
}

inline RingElement operator+(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b);
  RingElement r = a;
  for (const auto& [i, c] : b.terms()) r.add_term(i, c);
  return r;
}

inline RingElement operator-(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b);
  RingElement r = a;
  for (const auto& [i, c] : b.terms()) r.add_term(i, checked_mul(c, -1));
  return r;
}

inline RingElement scale(const RingElement& a, std::int64_t k) {
  RingElement r(a.ring());
  for (const auto& [i, c] : a.terms()) r.add_term(i, checked_mul(c, k));
  return r;
}

inline RingElement operator*(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b);
  RingElement r(a.ring());
  for (const auto& [i, ci] : a.terms())
    for (const auto& [j, cj] : b.terms())
      for (const auto& [k, ck] : a.ring()->basis_product(i, j))
        r.add_term(k, checked_mul(checked_mul(ci, cj), ck));
  return r;
}

inline RingElement power(const RingElement& a, int n) {
  if (n < 0) throw std::invalid_argument("ringcore: negative power");
  RingElement r = unit_element(a.ring());
  for (int i = 0; i < n; ++i) r = r * a;
  return r;
}

inline RingElement graded_component(const RingElement& a, int d) {
  RingElement r(a.ring());
  for (const auto& [i, c] : a.terms())
    if (a.ring()->basis[i].degree == d) r.add_term(i, c);
  return r;
}

/// Coefficient of the designated top-degree basis element (the evaluation
/// against the fundamental class).
inline std::int64_t pair_with_fundamental_class(const RingElement& a) {
  return a.coefficient(a.ring()->top_index);
}

/// Inverse of a total class 1 + (positive-degree part) via the geometric
/// series sum_j (1 - x)^j, exact because positive-degree parts are nilpotent
/// in a truncated ring.  The degree-0 coefficient must be exactly 1 (over Z
/// as well: normal classes of honest total classes start at +1).
inline RingElement invert_total_class(const RingElement& x) {
  const RingPtr& ring = x.ring();
  if (!ring) throw std::invalid_argument("ringcore: cannot invert an element without a ring");
  if (x.coefficient(ring->unit_index) != 1)
    throw std::invalid_argument(
        "ringcore: invert_total_class requires degree-0 coefficient exactly 1, got " +
        std::to_string(x.coefficient(ring->unit_index)));
  RingElement q = unit_element(ring) - x;  // minus the positive-degree part
  RingElement inv = unit_element(ring);
  RingElement pw = unit_element(ring);
  for (int j = 1; j <= ring->top_degree; ++j) {
    pw = pw * q;
    if (pw.is_zero()) break;
    inv = inv + pw;
  }
  return inv;
}

namespace detail {

inline std::string monomial_name(const std::vector<Generator>& gens, const std::vector<int>& e) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (e[g] == 0) continue;
    if (!first) out << "*";
    out << gens[g].name;
    if (e[g] > 1) out << "^" << e[g];
    first = false;
  }
  return first ? std::string("1") : out.str();
}

inline void check_generators(Coefficients coeff, const std::vector<Generator>& gens) {
  for (const auto& g : gens) {
    if (g.degree < 1)
      throw std::invalid_argument("ringcore: generator " + g.name + " must have positive degree");
    if (g.nilpotency < 1)
      throw std::invalid_argument("ringcore: generator " + g.name + " needs nilpotency >= 1");
    if (coeff == Coefficients::Z && g.degree % 2 != 0)
      throw std::invalid_argument(
          "ringcore: integral presentations reject odd-degree generator " + g.name +
          " (graded signs would enter)");
    if (g.name.empty() || g.name == "1")
      throw std::invalid_argument("ringcore: bad generator name");
  }
}

inline void finish_presentation(RingPresentation& r) {
  r.basis_by_degree.assign(static_cast<std::size_t>(r.top_degree) + 1, {});
  int top_hits = 0;
  for (std::uint32_t i = 0; i < r.basis.size(); ++i) {
    int d = r.basis[i].degree;
    if (d < 0 || d > r.top_degree)
      throw std::invalid_argument("ringcore: basis element " + r.basis[i].name +
                                  " outside degree range");
    r.basis_by_degree[static_cast<std::size_t>(d)].push_back(i);
    if (d == 0) r.unit_index = i;
    if (d == r.top_degree) {
      r.top_index = i;
      ++top_hits;
    }
  }
  if (r.basis_by_degree[0].size() != 1)
    throw std::invalid_argument("ringcore: presentation needs exactly one degree-0 basis element");
  if (top_hits != 1)
    throw std::invalid_argument(
        "ringcore: presentation needs a unique basis element in the top degree");
}

}  // namespace detail

/// k[g1,...,gn]/(gi^ei) truncated above top_degree.  The basis is every
/// exponent tuple below the nilpotency bounds with total degree <= top,
/// ordered by (degree, lexicographic exponents).
inline RingPtr make_monomial_ring(Coefficients coeff, std::vector<Generator> gens, int top_degree,
                                  std::string label = "") {
  detail::check_generators(coeff, gens);
  if (top_degree < 0) throw std::invalid_argument("ringcore: negative top degree");
  auto r = std::make_shared<RingPresentation>();
  r->coefficients = coeff;
  r->kind = RingKind::Monomial;
  r->generators = gens;
  r->top_degree = top_degree;
  if (label.empty()) {
    std::ostringstream lab;
    lab << (coeff == Coefficients::Z2 ? "Z2[" : "Z[");
    for (std::size_t g = 0; g < gens.size(); ++g)
      lab << (g ? "," : "") << gens[g].name;
    lab << "]/(";
    for (std::size_t g = 0; g < gens.size(); ++g)
      lab << (g ? "," : "") << gens[g].name << "^" << gens[g].nilpotency;
    lab << ")";
    r->label = lab.str();
  } else {
    r->label = std::move(label);
  }

  std::vector<std::pair<int, std::vector<int>>> monos;  // (degree, exponents)
  std::vector<int> e(gens.size(), 0);
  while (true) {
    int deg = 0;
    for (std::size_t g = 0; g < gens.size(); ++g) deg += e[g] * gens[g].degree;
    if (deg <= top_degree) monos.emplace_back(deg, e);
    // odometer over the exponent box
    std::size_t g = 0;
    for (; g < gens.size(); ++g) {
      if (e[g] + 1 < gens[g].nilpotency) {
        ++e[g];
        break;
      }
      e[g] = 0;
    }
    if (g == gens.size()) break;
  }
  std::sort(monos.begin(), monos.end());
  for (auto& [deg, exps] : monos)
    r->basis.push_back(BasisElement{detail::monomial_name(gens, exps), deg, exps});
  for (std::uint32_t i = 0; i < r->basis.size(); ++i)
    r->index_of_exponents[r->basis[i].exponents] = i;
  detail::finish_presentation(*r);
  return r;
}

struct StructureProduct {
  std::uint32_t i = 0, j = 0;
  std::vector<std::pair<std::uint32_t, std::int64_t>> terms;
};

/// Explicit-table presentation.  Validates grading, commutativity,
/// truncation, completeness, and full associativity over every basis triple
/// (the failing triple is named in the error).
inline RingPtr make_structure_ring(Coefficients coeff, std::vector<Generator> gens,
                                   std::vector<BasisElement> elems,
                                   const std::vector<StructureProduct>& products,
                                   std::string label = "") {
  detail::check_generators(coeff, gens);
  auto r = std::make_shared<RingPresentation>();
  r->coefficients = coeff;
  r->kind = RingKind::Structure;
  r->generators = std::move(gens);
  r->basis = std::move(elems);
  int top = 0;
  for (const auto& b : r->basis) top = std::max(top, b.degree);
  r->top_degree = top;
  r->label = label.empty() ? "structure ring" : std::move(label);
  detail::finish_presentation(*r);

  for (std::uint32_t i = 0; i < r->basis.size(); ++i) {
    const auto& b = r->basis[i];
    if (!b.exponents.empty()) {
      if (b.exponents.size() != r->generators.size())
        throw std::invalid_argument("ringcore: exponent vector size mismatch on " + b.name);
      int d = 0;
      for (std::size_t g = 0; g < b.exponents.size(); ++g)
        d += b.exponents[g] * r->generators[g].degree;
      if (d != b.degree)
        throw std::invalid_argument("ringcore: factorization of " + b.name +
                                    " does not match its degree");
      r->index_of_exponents[b.exponents] = i;
    }
  }

  auto key = [](std::uint32_t i, std::uint32_t j) {
    return (static_cast<std::uint64_t>(i) << 32) | j;
  };
  for (const auto& p : products) {
    if (p.i >= r->basis.size() || p.j >= r->basis.size())
      throw std::invalid_argument("ringcore: structure product index out of range");
    if (p.i == r->unit_index || p.j == r->unit_index)
      throw std::invalid_argument("ringcore: unit products are implicit; do not list them");
    int want = r->basis[p.i].degree + r->basis[p.j].degree;
    for (const auto& [k, c] : p.terms) {
      if (k >= r->basis.size())
        throw std::invalid_argument("ringcore: structure product result index out of range");
      if (c == 0)
        throw std::invalid_argument("ringcore: zero coefficient listed in product of " +
                                    r->basis[p.i].name + " and " + r->basis[p.j].name);
      if (r->basis[k].degree != want)
        throw std::invalid_argument("ringcore: product of " + r->basis[p.i].name + " and " +
                                    r->basis[p.j].name + " violates the grading");
      if (want > r->top_degree)
        throw std::invalid_argument("ringcore: product of " + r->basis[p.i].name + " and " +
                                    r->basis[p.j].name + " exceeds the top degree");
    }
    if (r->table.count(key(p.i, p.j)))
      throw std::invalid_argument("ringcore: duplicate table row for " + r->basis[p.i].name +
                                  " and " + r->basis[p.j].name);
    r->table[key(p.i, p.j)] = p.terms;
    r->table[key(p.j, p.i)] = p.terms;  // commutative (no signs: Z/2 or even degrees)
  }
  // completeness: every non-unit pair must be covered (possibly by a zero row)
  for (std::uint32_t i = 0; i < r->basis.size(); ++i) {
    if (i == r->unit_index) continue;
    for (std::uint32_t j = i; j < r->basis.size(); ++j) {
      if (j == r->unit_index) continue;
      if (r->basis[i].degree + r->basis[j].degree > r->top_degree) continue;  // implicitly zero
      if (!r->table.count(key(i, j)))
        throw std::invalid_argument("ringcore: multiplication table missing the product of " +
                                    r->basis[i].name + " and " + r->basis[j].name);
    }
  }
  // exhaustive associativity
  auto mul_into = [&](const std::map<std::uint32_t, std::int64_t>& a, std::uint32_t j,
                      std::map<std::uint32_t, std::int64_t>& out) {
    for (const auto& [i, ci] : a)
      for (const auto& [k, ck] : r->basis_product(i, j)) {
        auto& slot = out[k];
        slot = checked_add(slot, checked_mul(ci, ck));
        if (coeff == Coefficients::Z2) slot = ((slot % 2) + 2) % 2;
        if (slot == 0) out.erase(k);
      }
  };
  for (std::uint32_t i = 0; i < r->basis.size(); ++i)
    for (std::uint32_t j = 0; j < r->basis.size(); ++j)
      for (std::uint32_t k = 0; k < r->basis.size(); ++k) {
        std::map<std::uint32_t, std::int64_t> ij, left, jk, right;
        for (const auto& [m, c] : r->basis_product(i, j)) ij[m] = c;
        mul_into(ij, k, left);
        for (const auto& [m, c] : r->basis_product(j, k)) jk[m] = c;
        // commutativity lets us multiply jk by i on the left via the same helper
        mul_into(jk, i, right);
        if (left != right)
          throw std::invalid_argument("ringcore: multiplication table is not associative on (" +
                                      r->basis[i].name + ", " + r->basis[j].name + ", " +
                                      r->basis[k].name + ")");
      }
  return r;
}

namespace detail {

/// Disambiguates generator names across a product: names sharing a stem
/// (name minus trailing digits) get numbered stem1, stem2, ... in order.
inline std::vector<Generator> rename_generators(const std::vector<Generator>& a,
                                                const std::vector<Generator>& b) {
  std::vector<Generator> all = a;
  all.insert(all.end(), b.begin(), b.end());
  auto stem = [](const std::string& s) {
    std::size_t n = s.size();
    while (n > 0 && std::isdigit(static_cast<unsigned char>(s[n - 1]))) --n;
    return n == 0 ? s : s.substr(0, n);
  };
  std::map<std::string, int> total, seen;
  for (const auto& g : all) ++total[stem(g.name)];
  for (auto& g : all) {
    std::string st = stem(g.name);
    if (total[st] > 1) g.name = st + std::to_string(++seen[st]);
  }
  return all;
}

}  // namespace detail

struct KunnethResult {
  RingPtr ring;
  std::vector<std::uint32_t> left;   // basis index in A -> index of (a x 1)
  std::vector<std::uint32_t> right;  // basis index in B -> index of (1 x b)
};

/// Tensor product of two presentations over the same coefficients, with the
/// two inclusion maps.  Monomial x monomial stays monomial; anything
/// involving a structure presentation becomes a structure presentation with
/// the product table computed from the factors.
inline KunnethResult kunneth_product(const RingPtr& A, const RingPtr& B, std::string label = "") {
  if (!A || !B) throw std::invalid_argument("ringcore: null presentation in tensor product");
  if (A->coefficients != B->coefficients)
    throw std::invalid_argument("ringcore: tensor product needs matching coefficient domains");
  std::vector<Generator> gens = detail::rename_generators(A->generators, B->generators);
  KunnethResult out;
  if (A->kind == RingKind::Monomial && B->kind == RingKind::Monomial) {
    out.ring = make_monomial_ring(A->coefficients, gens, A->top_degree + B->top_degree,
                                  std::move(label));
    auto embed = [&](const RingPtr& factor, bool is_left, std::vector<std::uint32_t>& map) {
      map.resize(factor->basis.size());
      for (std::uint32_t i = 0; i < factor->basis.size(); ++i) {
        std::vector<int> e(gens.size(), 0);
        const auto& src = factor->basis[i].exponents;
        std::size_t offset = is_left ? 0 : A->generators.size();
        for (std::size_t g = 0; g < src.size(); ++g) e[offset + g] = src[g];
        map[i] = out.ring->index_of_exponents.at(e);
      }
    };
    embed(A, true, out.left);
    embed(B, false, out.right);
    return out;
  }

  // Structure-kind result: basis = pairs (a, b) ordered by (degree, iA, iB),
  // with (a1 x b1)(a2 x b2) = (a1 a2) x (b1 b2); no signs arise (Z/2, or
  // integral factors whose degrees are all even).
  bool have_exponents = true;
  for (const auto& b : A->basis) have_exponents = have_exponents && !b.exponents.empty();
  for (const auto& b : B->basis) have_exponents = have_exponents && !b.exponents.empty();

  struct Pair {
    int degree;
    std::uint32_t ia, ib;
  };
  std::vector<Pair> pairs;
  for (std::uint32_t ia = 0; ia < A->basis.size(); ++ia)
    for (std::uint32_t ib = 0; ib < B->basis.size(); ++ib)
      pairs.push_back({A->basis[ia].degree + B->basis[ib].degree, ia, ib});
  std::sort(pairs.begin(), pairs.end(), [](const Pair& p, const Pair& q) {
    return std::tie(p.degree, p.ia, p.ib) < std::tie(q.degree, q.ia, q.ib);
  });

  std::vector<BasisElement> elems;
  std::vector<std::vector<std::uint32_t>> pair_index(A->basis.size(),
                                                     std::vector<std::uint32_t>(B->basis.size()));
  auto combined_name = [&](std::uint32_t ia, std::uint32_t ib) -> std::string {
    const std::string& na = A->basis[ia].name;
    const std::string& nb = B->basis[ib].name;
    if (na == "1") return nb;
    if (nb == "1") return na;
    return na + "*" + nb;
  };
  for (std::uint32_t n = 0; n < pairs.size(); ++n) {
    const Pair& p = pairs[n];
    pair_index[p.ia][p.ib] = n;
    BasisElement e;
    e.degree = p.degree;
    if (have_exponents) {
      e.exponents = A->basis[p.ia].exponents;
      e.exponents.insert(e.exponents.end(), B->basis[p.ib].exponents.begin(),
                         B->basis[p.ib].exponents.end());
      e.name = detail::monomial_name(gens, e.exponents);
    } else {
      e.name = combined_name(p.ia, p.ib);
    }
    elems.push_back(std::move(e));
  }

  std::vector<StructureProduct> products;
  std::uint32_t unit_pair = pair_index[A->unit_index][B->unit_index];
  for (std::uint32_t n = 0; n < pairs.size(); ++n) {
    if (n == unit_pair) continue;
    for (std::uint32_t m = n; m < pairs.size(); ++m) {
      if (m == unit_pair) continue;
      if (pairs[n].degree + pairs[m].degree > A->top_degree + B->top_degree) continue;
      StructureProduct sp;
      sp.i = n;
      sp.j = m;
      std::map<std::uint32_t, std::int64_t> acc;
      for (const auto& [ka, ca] : A->basis_product(pairs[n].ia, pairs[m].ia))
        for (const auto& [kb, cb] : B->basis_product(pairs[n].ib, pairs[m].ib))
          acc[pair_index[ka][kb]] = checked_add(acc[pair_index[ka][kb]], checked_mul(ca, cb));
      for (const auto& [k, c] : acc)
        if (c != 0) sp.terms.emplace_back(k, c);
      products.push_back(std::move(sp));
    }
  }
  out.ring = make_structure_ring(A->coefficients, gens, std::move(elems), products,
                                 label.empty() ? A->label + " (x) " + B->label : std::move(label));
  out.left.resize(A->basis.size());
  out.right.resize(B->basis.size());
  for (std::uint32_t ia = 0; ia < A->basis.size(); ++ia)
    out.left[ia] = pair_index[ia][B->unit_index];
  for (std::uint32_t ib = 0; ib < B->basis.size(); ++ib)
    out.right[ib] = pair_index[A->unit_index][ib];
  return out;
}

/// Pushes an element of a tensor factor into the product ring.
inline RingElement include_left(const RingElement& a, const KunnethResult& kr) {
  RingElement r(kr.ring);
  for (const auto& [i, c] : a.terms()) r.add_term(kr.left[i], c);
  return r;
}

inline RingElement include_right(const RingElement& b, const KunnethResult& kr) {
  RingElement r(kr.ring);
  for (const auto& [i, c] : b.terms()) r.add_term(kr.right[i], c);
  return r;
}

}  // namespace foldcob
