#include "mzv/expr.hpp"

#include <cctype>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "mzv/errors.hpp"
#include "mzv/series.hpp"

namespace mzv::symbolic {

BasisSymbol BasisSymbol::zeta(int k) {
  if (k < 2) throw DomainError("zeta symbol needs k >= 2");
  return {SymbolKind::zeta, {k}};
}

BasisSymbol BasisSymbol::li_half(int k) {
  if (k < 1) throw DomainError("polylog symbol needs k >= 1");
  return {SymbolKind::li_half, {k}};
}

BasisSymbol BasisSymbol::mli_half(std::vector<int> exponents) {
  if (exponents.size() < 2) throw DomainError("multiple polylog symbol needs at least two exponents");
  for (const int s : exponents) {
    if (s < 1) throw DomainError("multiple polylog exponents must be positive");
  }
  return {SymbolKind::mli_half, std::move(exponents)};
}

std::string BasisSymbol::to_string() const {
  switch (kind) {
    case SymbolKind::ln2:
      return "ln2";
    case SymbolKind::zeta:
      return "z" + std::to_string(args.at(0));
    case SymbolKind::li_half:
      return "li" + std::to_string(args.at(0));
    case SymbolKind::mli_half: {
      std::string out = "mli(";
      for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(args[i]);
      }
      return out + ")";
    }
  }
  return {};
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  // Walk both monomials from the largest symbol down, one factor at a time.
  auto ia = a.rbegin();
  auto ib = b.rbegin();
  int left_a = ia == a.rend() ? 0 : ia->second;
  int left_b = ib == b.rend() ? 0 : ib->second;
  while (ia != a.rend() && ib != b.rend()) {
    if (ia->first != ib->first) return ib->first < ia->first;
    const int step = std::min(left_a, left_b);
    left_a -= step;
    left_b -= step;
    if (left_a == 0 && ++ia != a.rend()) left_a = ia->second;
    if (left_b == 0 && ++ib != b.rend()) left_b = ib->second;
  }
  // The longer sequence is larger.
  return ia != a.rend() && ib == b.rend();
}

ConstantExpr::ConstantExpr(const Rational& constant) {
  if (constant != 0) terms_.emplace(Monomial{}, constant);
}

ConstantExpr::ConstantExpr(const BasisSymbol& symbol, int power) {
  if (power < 0) throw DomainError("negative symbol power");
  Monomial m;
  if (power > 0) m.emplace(symbol, power);
  terms_.emplace(std::move(m), Rational(1));
}

Rational ConstantExpr::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void ConstantExpr::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

ConstantExpr& ConstantExpr::operator+=(const ConstantExpr& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

ConstantExpr& ConstantExpr::operator-=(const ConstantExpr& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

ConstantExpr& ConstantExpr::operator*=(const ConstantExpr& other) {
  ConstantExpr out;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      Monomial m = ma;
      for (const auto& [s, p] : mb) m[s] += p;
      out.add_term(m, ca * cb);
    }
  }
  terms_ = std::move(out.terms_);
  return *this;
}

ConstantExpr& ConstantExpr::operator*=(const Rational& r) {
  if (r == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= r;
  return *this;
}

std::string ConstantExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string factors;
    for (const auto& [s, p] : m) {
      // Larger symbols print first.
      std::string f = s.to_string();
      if (p != 1) f += "^" + std::to_string(p);
      factors = factors.empty() ? f : f + "*" + factors;
    }
    if (factors.empty()) {
      out += mzv::to_string(mag);
    } else if (mag == 1) {
      out += factors;
    } else {
      out += mzv::to_string(mag) + "*" + factors;
    }
  }
  return out;
}

ConstantExpr expr_arith(const ConstantExpr& a, const ConstantExpr& b, ArithOp op, const Rational& r) {
  switch (op) {
    case ArithOp::add:
      return a + b;
    case ArithOp::mul:
      return a * b;
    case ArithOp::scale:
      return a * r;
  }
  return a;
}

ConstantExpr pow(const ConstantExpr& e, int n) {
  if (n < 0) throw DomainError("negative power of an expression");
  ConstantExpr out(Rational(1));
  for (int i = 0; i < n; ++i) out *= e;
  return out;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  ConstantExpr parse() {
    ConstantExpr out;
    skip();
    if (done()) fail("empty expression");
    bool negative = false;
    if (peek() == '-' || peek() == '+') negative = take() == '-';
    while (true) {
      ConstantExpr term = parse_term();
      if (negative) term = -term;
      out += term;
      skip();
      if (done()) break;
      const char op = take();
      if (op != '+' && op != '-') fail("expected + or -");
      negative = op == '-';
    }
    return out;
  }

 private:
  ConstantExpr parse_term() {
    ConstantExpr term(Rational(1));
    while (true) {
      skip();
      if (done()) fail("unexpected end of expression");
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        term *= parse_coefficient();
      } else {
        term *= parse_factor();
      }
      skip();
      if (done() || peek() != '*') break;
      take();
    }
    return term;
  }

  Rational parse_coefficient() {
    std::string num = digits();
    std::string den = "1";
    skip();
    if (!done() && peek() == '/') {
      take();
      skip();
      den = digits();
    }
    try {
      return make_rational(BigInt(num), BigInt(den));
    } catch (const std::exception&) {
      fail("bad coefficient");
    }
  }

  ConstantExpr parse_factor() {
    BasisSymbol s = parse_symbol();
    int power = 1;
    skip();
    if (!done() && peek() == '^') {
      take();
      skip();
      power = std::stoi(digits());
      if (power < 1) fail("powers must be positive");
    }
    return ConstantExpr(s, power);
  }

  BasisSymbol parse_symbol() {
    std::string word;
    while (!done() && std::isalpha(static_cast<unsigned char>(peek()))) word += take();
    try {
      if (word == "ln") {
        if (digits() != "2") fail("expected ln2");
        return BasisSymbol::ln2();
      }
      if (word == "z") return BasisSymbol::zeta(std::stoi(digits()));
      if (word == "li") return BasisSymbol::li_half(std::stoi(digits()));
      if (word == "mli") {
        skip();
        if (done() || take() != '(') fail("expected ( after mli");
        std::vector<int> exps;
        while (true) {
          skip();
          exps.push_back(std::stoi(digits()));
          skip();
          if (done()) fail("unterminated mli(");
          const char c = take();
          if (c == ')') break;
          if (c != ',') fail("expected , or ) in mli(...)");
        }
        return BasisSymbol::mli_half(std::move(exps));
      }
    } catch (const DomainError& e) {
      fail(e.what());
    }
    fail("unknown symbol '" + word + "'");
  }

  std::string digits() {
    std::string out;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) out += take();
    if (out.empty()) fail("expected digits");
    return out;
  }

  void skip() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char take() { return text_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError("expression: " + what + " at offset " + std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ConstantExpr parse_expr(std::string_view text) {
  try {
    return ExprParser(text).parse();
  } catch (const std::out_of_range&) {
    throw SyntaxError("expression: integer out of range");
  }
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

struct SymbolCache {
  std::mutex mutex;
  std::map<std::pair<BasisSymbol, int>, EvalResult> values;
};

SymbolCache& symbol_cache() {
  static SymbolCache cache;
  return cache;
}

EvalResult compute_symbol(const BasisSymbol& s) {
  switch (s.kind) {
    case SymbolKind::ln2:
      return series::eval_ln2();
    case SymbolKind::zeta:
      return series::eval_zeta(s.args.at(0));
    case SymbolKind::li_half:
    case SymbolKind::mli_half:
      return series::eval_mpl_half(s.args);
  }
  throw DomainError("unknown symbol kind");
}

}  // namespace

EvalResult symbol_value(const BasisSymbol& s) {
  const int bits = working_precision();
  auto& cache = symbol_cache();
  const auto key = std::make_pair(s, bits);
  {
    std::lock_guard lock(cache.mutex);
    const auto it = cache.values.find(key);
    if (it != cache.values.end()) return it->second;
  }
  EvalResult r = compute_symbol(s);
  std::lock_guard lock(cache.mutex);
  return cache.values.emplace(key, std::move(r)).first->second;
}

EvalResult expr_eval(const ConstantExpr& e) {
  BigReal value(0L);
  BigReal err(0L);
  BigReal magnitude(0L);
  for (const auto& [m, c] : e.terms()) {
    BigReal term(c);
    BigReal relative(0L);
    for (const auto& [s, p] : m) {
      const EvalResult v = symbol_value(s);
      term *= pow(v.value, p);
      if (!v.value.is_zero()) relative += BigReal(static_cast<long>(p)) * v.err / abs(v.value);
    }
    err += abs(term) * relative;
    magnitude += abs(term);
    value += term;
  }
  err += ldexp(magnitude, 8 - working_precision());
  return {std::move(value), std::move(err), Method::symbolic, 0};
}

EvalResult expr_eval(const ConstantExpr& e, int precision_bits) {
  PrecisionScope scope(precision_bits);
  return expr_eval(e);
}

}  // namespace mzv::symbolic
