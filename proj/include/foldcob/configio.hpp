#pragma once

// Line-oriented text formats: structure-constant ring models, homology
// profiles for targets, and small bordism-group lookup tables.  Every format
// starts with a "<kind> <version>" header; '#' starts a comment; blank lines
// are skipped.  Exact grammars are documented in the repo README.

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "foldcob/catalog.hpp"
#include "foldcob/fgab.hpp"
#include "foldcob/foldgroups.hpp"

namespace foldcob {

namespace detail {

struct ConfigLine {
  int number = 0;
  std::string text;
};

inline std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

inline std::vector<ConfigLine> significant_lines(const std::string& text) {
  std::vector<ConfigLine> out;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (!line.empty()) out.push_back({number, line});
  }
  return out;
}

[[noreturn]] inline void config_fail(const std::string& source, int line, const std::string& msg) {
  std::ostringstream o;
  o << source << " line " << line << ": " << msg;
  throw std::invalid_argument(o.str());
}

inline std::vector<std::string> split_words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

inline std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

inline int parse_int(const std::string& source, int line, const std::string& s) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    config_fail(source, line, "expected an integer, got '" + s + "'");
  }
}

inline void expect_header(const std::string& source, const std::vector<ConfigLine>& lines,
                          const std::string& kind) {
  if (lines.empty()) config_fail(source, 1, "empty file; expected header '" + kind + " 1'");
  auto words = split_words(lines[0].text);
  if (words.size() != 2 || words[0] != kind)
    config_fail(source, lines[0].number, "expected header '" + kind + " <version>'");
  int v = parse_int(source, lines[0].number, words[1]);
  if (v != 1)
    config_fail(source, lines[0].number,
                "unsupported " + kind + " version " + std::to_string(v) + " (this reader knows 1)");
}

/// "1" or a '*'-joined list of factors "g" / "g^e".
inline std::vector<int> parse_monomial(const std::string& source, int line, const std::string& text,
                                       const std::vector<Generator>& gens) {
  std::vector<int> e(gens.size(), 0);
  std::string body = trim(text);
  if (body.empty()) config_fail(source, line, "empty monomial");
  if (body == "1") return e;
  for (const std::string& raw : split_on(body, '*')) {
    std::string factor = raw;
    int exp = 1;
    auto caret = factor.find('^');
    if (caret != std::string::npos) {
      exp = parse_int(source, line, trim(factor.substr(caret + 1)));
      factor = trim(factor.substr(0, caret));
      if (exp < 1) config_fail(source, line, "exponents must be >= 1 in '" + raw + "'");
    }
    bool found = false;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      if (gens[g].name == factor) {
        e[g] += exp;
        found = true;
        break;
      }
    }
    if (!found) config_fail(source, line, "unknown generator '" + factor + "'");
  }
  return e;
}

inline RingElement parse_z2_sum(const std::string& source, int line, const std::string& text,
                                const RingPtr& ring) {
  RingElement out(ring);
  std::string body = trim(text);
  if (body == "0") return out;
  for (const std::string& term : split_on(body, '+')) {
    if (term.empty()) config_fail(source, line, "empty term in sum '" + body + "'");
    auto e = parse_monomial(source, line, term, ring->generators);
    auto it = ring->index_of_exponents.find(e);
    if (it == ring->index_of_exponents.end())
      config_fail(source, line, "monomial '" + term + "' is not a basis element of this model");
    out.add_term(it->second, 1);
  }
  return out;
}

}  // namespace detail

/// Parses "0", "Z", "Z^2", "Z2", "Z12^3", and '+'-sums of those.
inline FGAbGroup parse_abelian_group(const std::string& text) {
  FGAbGroup g;
  std::string body = detail::trim(text);
  if (body.empty()) throw std::invalid_argument("configio: empty group expression");
  if (body == "0") return g;
  for (const std::string& term : detail::split_on(body, '+')) {
    std::string base = term;
    std::int64_t reps = 1;
    auto caret = term.find('^');
    if (caret != std::string::npos) {
      base = detail::trim(term.substr(0, caret));
      reps = std::stoll(detail::trim(term.substr(caret + 1)));
      if (reps < 1) throw std::invalid_argument("configio: bad multiplicity in '" + term + "'");
    }
    if (base == "Z") {
      g.free_rank += reps;
    } else if (base.size() > 1 && base[0] == 'Z') {
      std::int64_t d = std::stoll(base.substr(1));
      if (d < 2) throw std::invalid_argument("configio: bad torsion order in '" + term + "'");
      for (std::int64_t i = 0; i < reps; ++i) g.torsion.push_back(d);
    } else {
      throw std::invalid_argument("configio: cannot parse group term '" + term + "'");
    }
  }
  return normalize(g);
}

/// Reads a "ring-model 1" document: generators, basis monomials, a top-class
/// designation, the full multiplication table, Steenrod rows, and the total
/// tangent class.  Returns a validated model (mod-2 coefficients).
inline ManifoldModel load_structure_model(const std::string& text,
                                          const std::string& source = "<ring-model>") {
  auto lines = detail::significant_lines(text);
  detail::expect_header(source, lines, "ring-model");

  std::string name;
  int dim = -1;
  std::vector<Generator> gens;
  std::vector<std::vector<int>> basis_exps;
  std::vector<int> basis_lines;
  std::string top_text;
  int top_line = 0;
  struct MulRow {
    int line;
    std::string lhs1, lhs2, rhs;
  };
  std::vector<MulRow> muls;
  struct SqRow {
    int line;
    int i;
    std::string gen, rhs;
  };
  std::vector<SqRow> sqs;
  std::string sw_text;
  int sw_line = 0;

  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto& [number, line] = lines[li];
    auto words = detail::split_words(line);
    const std::string& key = words[0];
    if (key == "name") {
      if (words.size() != 2) detail::config_fail(source, number, "usage: name <identifier>");
      name = words[1];
    } else if (key == "dim") {
      if (words.size() != 2) detail::config_fail(source, number, "usage: dim <integer>");
      dim = detail::parse_int(source, number, words[1]);
    } else if (key == "generator") {
      if (words.size() != 4)
        detail::config_fail(source, number, "usage: generator <name> <degree> <nilpotency>");
      gens.push_back(Generator{words[1], detail::parse_int(source, number, words[2]),
                               detail::parse_int(source, number, words[3])});
    } else if (key == "basis") {
      if (words.size() != 2) detail::config_fail(source, number, "usage: basis <monomial>");
      basis_exps.push_back(detail::parse_monomial(source, number, words[1], gens));
      basis_lines.push_back(number);
    } else if (key == "top") {
      if (words.size() != 2) detail::config_fail(source, number, "usage: top <monomial>");
      top_text = words[1];
      top_line = number;
    } else if (key == "mul") {
      auto eq = line.find('=');
      if (eq == std::string::npos)
        detail::config_fail(source, number, "usage: mul <monomial> <monomial> = <sum>");
      auto left = detail::split_words(line.substr(3, eq - 3));
      if (left.size() != 2)
        detail::config_fail(source, number, "usage: mul <monomial> <monomial> = <sum>");
      muls.push_back({number, left[0], left[1], detail::trim(line.substr(eq + 1))});
    } else if (key == "sq") {
      auto eq = line.find('=');
      if (eq == std::string::npos)
        detail::config_fail(source, number, "usage: sq <i> <generator> = <sum>");
      auto left = detail::split_words(line.substr(2, eq - 2));
      if (left.size() != 2)
        detail::config_fail(source, number, "usage: sq <i> <generator> = <sum>");
      sqs.push_back({number, detail::parse_int(source, number, left[0]), left[1],
                     detail::trim(line.substr(eq + 1))});
    } else if (key == "sw") {
      auto eq = line.find('=');
      if (eq == std::string::npos) detail::config_fail(source, number, "usage: sw = <sum>");
      sw_text = detail::trim(line.substr(eq + 1));
      sw_line = number;
    } else {
      detail::config_fail(source, number, "unknown directive '" + key + "'");
    }
  }

  if (name.empty()) detail::config_fail(source, 1, "missing 'name' line");
  if (dim < 0) detail::config_fail(source, 1, "missing 'dim' line");
  if (gens.empty()) detail::config_fail(source, 1, "no generators declared");
  if (basis_exps.empty()) detail::config_fail(source, 1, "no basis elements declared");
  if (top_text.empty()) detail::config_fail(source, 1, "missing 'top' designation");
  if (sw_text.empty()) detail::config_fail(source, 1, "missing 'sw' line");

  std::vector<BasisElement> basis;
  std::map<std::vector<int>, int> seen;
  for (std::size_t b = 0; b < basis_exps.size(); ++b) {
    const auto& e = basis_exps[b];
    if (seen.count(e))
      detail::config_fail(source, basis_lines[b], "duplicate basis monomial '" +
                                                      detail::monomial_name(gens, e) + "'");
    seen[e] = 1;
    int d = 0;
    for (std::size_t g = 0; g < gens.size(); ++g) d += e[g] * gens[g].degree;
    basis.push_back(BasisElement{detail::monomial_name(gens, e), d, e});
  }

  // Index lookup for the product rows, before the ring exists.
  auto index_of = [&](const std::string& mono, int line) -> std::uint32_t {
    auto e = detail::parse_monomial(source, line, mono, gens);
    for (std::uint32_t b = 0; b < basis.size(); ++b)
      if (basis[b].exponents == e) return b;
    detail::config_fail(source, line, "monomial '" + mono + "' is not a declared basis element");
  };

  std::vector<StructureProduct> products;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> product_slots;
  for (const auto& m : muls) {
    StructureProduct p;
    p.i = index_of(m.lhs1, m.line);
    p.j = index_of(m.lhs2, m.line);
    product_slots.emplace_back(p.i, p.j);
    products.push_back(std::move(p));
  }

  RingPtr probe;  // rhs sums need a ring; build once without tables to reuse the parser
  try {
    // The table rows' right-hand sides are plain basis sums, so parse them
    // against a temporary element space with an empty table.
    auto tmp = std::make_shared<RingPresentation>();
    tmp->coefficients = Coefficients::Z2;
    tmp->kind = RingKind::Structure;
    tmp->generators = gens;
    tmp->basis = basis;
    for (const auto& b : basis) tmp->top_degree = std::max(tmp->top_degree, b.degree);
    tmp->label = name;
    detail::finish_presentation(*tmp);
    for (std::uint32_t b = 0; b < tmp->basis.size(); ++b)
      tmp->index_of_exponents[tmp->basis[b].exponents] = b;
    probe = tmp;
  } catch (const std::exception& e) {
    detail::config_fail(source, 1, e.what());
  }
  for (std::size_t r = 0; r < muls.size(); ++r) {
    RingElement rhs = detail::parse_z2_sum(source, muls[r].line, muls[r].rhs, probe);
    for (const auto& [idx, c] : rhs.terms()) products[r].terms.emplace_back(idx, c);
  }

  RingPtr ring;
  try {
    ring = make_structure_ring(Coefficients::Z2, gens, basis, products, name);
  } catch (const std::exception& e) {
    detail::config_fail(source, 1, e.what());
  }
  if (ring->top_degree != dim) {
    std::ostringstream o;
    o << "declared dim " << dim << " does not match the top basis degree " << ring->top_degree;
    detail::config_fail(source, 1, o.str());
  }
  auto top_e = detail::parse_monomial(source, top_line, top_text, gens);
  if (top_e != ring->basis[ring->top_index].exponents)
    detail::config_fail(source, top_line,
                        "declared top class '" + top_text + "' is not the top basis element '" +
                            ring->basis[ring->top_index].name + "'");

  RingElement sw = detail::parse_z2_sum(source, sw_line, sw_text, ring);

  std::vector<std::vector<RingElement>> sq_rows;
  for (const auto& g : gens)
    sq_rows.push_back(std::vector<RingElement>(static_cast<std::size_t>(g.degree),
                                               zero_element(ring)));
  for (const auto& s : sqs) {
    std::size_t gi = gens.size();
    for (std::size_t g = 0; g < gens.size(); ++g)
      if (gens[g].name == s.gen) gi = g;
    if (gi == gens.size())
      detail::config_fail(source, s.line, "unknown generator '" + s.gen + "' in sq row");
    if (s.i < 1 || s.i > gens[gi].degree)
      detail::config_fail(source, s.line,
                          "sq index " + std::to_string(s.i) + " outside 1..deg " + s.gen);
    sq_rows[gi][static_cast<std::size_t>(s.i - 1)] =
        detail::parse_z2_sum(source, s.line, s.rhs, ring);
  }

  try {
    return assemble_model(name, ring, sw, sq_rows);
  } catch (const std::exception& e) {
    detail::config_fail(source, 1, std::string("model validation failed: ") + e.what());
  }
}

/// Reads a "homology-profile 1" document: name, dimension, orientability,
/// and one "H <j> = <group>" row per nonzero degree.
inline HomologyProfile load_homology_profile(const std::string& text,
                                             const std::string& source = "<profile>") {
  auto lines = detail::significant_lines(text);
  detail::expect_header(source, lines, "homology-profile");
  HomologyProfile p;
  bool have_dim = false;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto& [number, line] = lines[li];
    auto words = detail::split_words(line);
    const std::string& key = words[0];
    if (key == "name") {
      if (words.size() != 2) detail::config_fail(source, number, "usage: name <identifier>");
      p.name = words[1];
    } else if (key == "dim") {
      if (words.size() != 2) detail::config_fail(source, number, "usage: dim <integer>");
      p.dimension = detail::parse_int(source, number, words[1]);
      have_dim = true;
    } else if (key == "orientable") {
      if (words.size() != 2 || (words[1] != "yes" && words[1] != "no"))
        detail::config_fail(source, number, "usage: orientable yes|no");
      p.orientable = words[1] == "yes";
    } else if (key == "H") {
      auto eq = line.find('=');
      if (eq == std::string::npos || words.size() < 2)
        detail::config_fail(source, number, "usage: H <j> = <group>");
      int j = detail::parse_int(source, number, words[1]);
      if (j < 0) detail::config_fail(source, number, "negative homology degree");
      if (j >= static_cast<int>(p.groups.size())) p.groups.resize(static_cast<std::size_t>(j) + 1);
      try {
        p.groups[static_cast<std::size_t>(j)] = parse_abelian_group(line.substr(eq + 1));
      } catch (const std::exception& e) {
        detail::config_fail(source, number, e.what());
      }
    } else {
      detail::config_fail(source, number, "unknown directive '" + key + "'");
    }
  }
  if (p.name.empty()) detail::config_fail(source, 1, "missing 'name' line");
  if (!have_dim) detail::config_fail(source, 1, "missing 'dim' line");
  if (p.dimension < 0) detail::config_fail(source, 1, "negative dimension");
  for (int j = p.dimension + 1; j < static_cast<int>(p.groups.size()); ++j)
    if (!p.groups[static_cast<std::size_t>(j)].is_trivial())
      detail::config_fail(source, 1, "homology above the dimension must vanish");
  return p;
}

/// Reads a "bordism-table 1" document of rows
///   <family> <n> = <group> | <citation>
inline BordismTable load_bordism_table(const std::string& text,
                                       const std::string& source = "<table>") {
  auto lines = detail::significant_lines(text);
  detail::expect_header(source, lines, "bordism-table");
  BordismTable table;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto& [number, line] = lines[li];
    auto bar = line.find('|');
    if (bar == std::string::npos)
      detail::config_fail(source, number,
                          "usage: <family> <n> = <group> | <citation> (citation is required)");
    std::string head = detail::trim(line.substr(0, bar));
    std::string citation = detail::trim(line.substr(bar + 1));
    if (citation.empty()) detail::config_fail(source, number, "empty citation");
    auto eq = head.find('=');
    if (eq == std::string::npos)
      detail::config_fail(source, number, "usage: <family> <n> = <group> | <citation>");
    auto words = detail::split_words(head.substr(0, eq));
    if (words.size() != 2 || (words[0] != "Omega" && words[0] != "N"))
      detail::config_fail(source, number, "family must be Omega or N");
    BordismTableEntry entry;
    entry.family = words[0];
    entry.n = detail::parse_int(source, number, words[1]);
    if (entry.n < 0) detail::config_fail(source, number, "negative dimension");
    try {
      entry.value = parse_abelian_group(head.substr(eq + 1));
    } catch (const std::exception& e) {
      detail::config_fail(source, number, e.what());
    }
    entry.citation = citation;
    if (table.find(entry.family, entry.n))
      detail::config_fail(source, number, "duplicate entry for " + entry.family + "(" +
                                              std::to_string(entry.n) + ")");
    table.entries.push_back(std::move(entry));
  }
  return table;
}

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("configio: cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::string basename_of(const std::string& path) {
  auto slash = path.find_last_of("/\\");
  return slash == std::string::npos ? path : path.substr(slash + 1);
}

}  // namespace detail

inline ManifoldModel load_structure_model_file(const std::string& path) {
  return load_structure_model(detail::read_file(path), detail::basename_of(path));
}

inline HomologyProfile load_homology_profile_file(const std::string& path) {
  return load_homology_profile(detail::read_file(path), detail::basename_of(path));
}

inline BordismTable load_bordism_table_file(const std::string& path) {
  return load_bordism_table(detail::read_file(path), detail::basename_of(path));
}

}  // namespace foldcob
