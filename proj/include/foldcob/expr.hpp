#pragma once

// Manifold expressions: atoms RP(n), CP(n), S(n), Dold(m,n), Load(path),
// the binary product written `x`, and postfix powers `^j` which expand into
// repeated products.  Products associate to the left and `^` binds tighter
// than `x`; trees are kept flat, so serialize/parse round-trips to an equal
// tree.

#include <cctype>
#include <functional>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "foldcob/catalog.hpp"

namespace foldcob {

struct ManifoldExpr {
  enum class Kind { Atom, Product };
  Kind kind = Kind::Atom;
  // Atom
  std::string atom;        // "RP", "CP", "S", "Dold", "Load"
  std::vector<int> args;   // numeric arguments
  std::string path;        // Load only
  // Product
  std::vector<ManifoldExpr> factors;

  bool operator==(const ManifoldExpr&) const = default;

  std::string to_string() const {
    if (kind == Kind::Atom) {
      std::ostringstream o;
      o << atom << "(";
      if (atom == "Load") {
        o << path;
      } else {
        for (std::size_t i = 0; i < args.size(); ++i) o << (i ? "," : "") << args[i];
      }
      o << ")";
      return o.str();
    }
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) out += " x ";
      out += factors[i].to_string();
    }
    return out;
  }
};

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string text) : text_(std::move(text)) {}

  ManifoldExpr parse() {
    ManifoldExpr e = parse_product();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  std::string text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    std::ostringstream o;
    o << "expr: syntax error at position " << pos_ << ": " << msg;
    throw std::invalid_argument(o.str());
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string read_word() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  int read_int() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::stoi(text_.substr(start, pos_ - start));
  }

  static void flatten_into(ManifoldExpr& product, const ManifoldExpr& e) {
    if (e.kind == ManifoldExpr::Kind::Product)
      for (const auto& f : e.factors) product.factors.push_back(f);
    else
      product.factors.push_back(e);
  }

  ManifoldExpr parse_product() {
    ManifoldExpr first = parse_power();
    skip_space();
    std::vector<ManifoldExpr> parts{first};
    while (true) {
      std::size_t save = pos_;
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == 'x' &&
          (pos_ + 1 == text_.size() ||
           !std::isalnum(static_cast<unsigned char>(text_[pos_ + 1])))) {
        ++pos_;
        parts.push_back(parse_power());
      } else {
        pos_ = save;
        break;
      }
    }
    if (parts.size() == 1) return parts[0];
    ManifoldExpr prod;
    prod.kind = ManifoldExpr::Kind::Product;
    for (const auto& p : parts) flatten_into(prod, p);
    return prod;
  }

  ManifoldExpr parse_power() {
    ManifoldExpr base = parse_primary();
    while (eat('^')) {
      int j = read_int();
      if (j < 1) fail("power must be >= 1");
      if (j == 1) continue;
      ManifoldExpr prod;
      prod.kind = ManifoldExpr::Kind::Product;
      for (int c = 0; c < j; ++c) flatten_into(prod, base);
      base = std::move(prod);
    }
    return base;
  }

  ManifoldExpr parse_primary() {
    skip_space();
    if (eat('(')) {
      ManifoldExpr inner = parse_product();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    std::string word = read_word();
    if (word.empty()) fail("expected a manifold atom");
    ManifoldExpr e;
    e.atom = word;
    if (!eat('(')) fail("expected '(' after '" + word + "'");
    if (word == "RP" || word == "CP" || word == "S") {
      e.args.push_back(read_int());
      if (!eat(')')) fail("expected ')'");
      if (e.args[0] < 1) fail(word + "(n) needs n >= 1");
    } else if (word == "Dold") {
      e.args.push_back(read_int());
      if (!eat(',')) fail("expected ',' in Dold(m,n)");
      e.args.push_back(read_int());
      if (!eat(')')) fail("expected ')'");
      if (e.args[0] < 0 || e.args[1] < 0 || e.args[0] + 2 * e.args[1] < 1)
        fail("Dold(m,n) needs m,n >= 0 with m + 2n >= 1");
    } else if (word == "Load") {
      std::size_t start = pos_;
      int depth = 1;
      while (pos_ < text_.size() && depth > 0) {
        if (text_[pos_] == '(') ++depth;
        if (text_[pos_] == ')') --depth;
        if (depth > 0) ++pos_;
      }
      if (depth != 0) fail("expected ')' closing Load(");
      e.path = text_.substr(start, pos_ - start);
      ++pos_;
      // trim surrounding spaces in the path
      while (!e.path.empty() && std::isspace(static_cast<unsigned char>(e.path.front())))
        e.path.erase(e.path.begin());
      while (!e.path.empty() && std::isspace(static_cast<unsigned char>(e.path.back())))
        e.path.pop_back();
      if (e.path.empty()) fail("Load needs a file path");
    } else {
      fail("unknown atom '" + word + "'");
    }
    return e;
  }
};

}  // namespace detail

inline ManifoldExpr parse_manifold(const std::string& text) {
  return detail::ExprParser(text).parse();
}

/// Builds the model named by the expression.  Load atoms are resolved by the
/// `loader` callback (defaults to rejecting them, for contexts with no file
/// access).
inline ManifoldModel evaluate_manifold(
    const ManifoldExpr& e,
    const std::function<ManifoldModel(const std::string&)>& loader = nullptr) {
  if (e.kind == ManifoldExpr::Kind::Atom) {
    if (e.atom == "RP") return real_projective(e.args[0]);
    if (e.atom == "CP") return complex_projective(e.args[0]);
    if (e.atom == "S") return sphere(e.args[0]);
    if (e.atom == "Dold") return dold(e.args[0], e.args[1]);
    if (e.atom == "Load") {
      if (!loader)
        throw std::invalid_argument("expr: Load(" + e.path + ") needs a config loader");
      return loader(e.path);
    }
    throw std::invalid_argument("expr: unknown atom '" + e.atom + "'");
  }
  ManifoldModel acc = evaluate_manifold(e.factors[0], loader);
  for (std::size_t i = 1; i < e.factors.size(); ++i)
    acc = product(acc, evaluate_manifold(e.factors[i], loader));
  return acc;
}

inline ManifoldModel evaluate_manifold(
    const std::string& text,
    const std::function<ManifoldModel(const std::string&)>& loader = nullptr) {
  return evaluate_manifold(parse_manifold(text), loader);
}

}  // namespace foldcob
