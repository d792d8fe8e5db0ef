#include "mzv/quadrature.hpp"

#include <deque>
#include <map>
#include <memory>
#include <mutex>

#include "mzv/errors.hpp"

namespace mzv::quadrature {
namespace {

// Abscissa u > 0 (or u = 0 at level 0) of the tanh-sinh rule, stored through
// the complements 1 - x and 1 + x of x = tanh(pi/2 sinh u).
struct Node {
  BigReal one_minus;
  BigReal one_plus;
  BigReal weight;  // (pi/2) cosh u / cosh^2(pi/2 sinh u)
  bool center = false;
};

class Table {
 public:
  explicit Table(int bits) : bits_(bits) {
    PrecisionScope scope(bits_);
    // Nodes stop once 1 - x drops below 2^-(P+64).
    const BigReal target = BigReal(static_cast<long>(bits_ + 64)) * mpfr_log2() / mpfr_pi();
    BigReal u(0L);
    while (sinh(u) <= target) u += BigReal(1L) / 8;
    t_max_ = u;
  }

  const std::vector<Node>& level(int L) {
    std::lock_guard lock(mutex_);
    while (static_cast<int>(levels_.size()) <= L) build(static_cast<int>(levels_.size()));
    return levels_[static_cast<std::size_t>(L)];
  }

 private:
  void build(int L) {
    PrecisionScope scope(bits_);
    const BigReal h = pow2(-L);
    const BigReal half_pi = mpfr_pi() / 2;
    std::vector<Node> nodes;
    const long step = L == 0 ? 1 : 2;
    for (long k = L == 0 ? 0 : 1;; k += step) {
      const BigReal u = h * BigReal(k);
      if (u > t_max_) break;
      const BigReal v = half_pi * sinh(u);
      const BigReal e = exp(2 * v);
      Node node;
      node.one_minus = BigReal(2L) / (BigReal(1L) + e);
      node.one_plus = BigReal(2L) - node.one_minus;
      const BigReal c = cosh(v);
      node.weight = half_pi * cosh(u) / (c * c);
      node.center = k == 0;
      nodes.push_back(std::move(node));
    }
    levels_.push_back(std::move(nodes));
  }

  int bits_;
  BigReal t_max_;
  std::mutex mutex_;
  std::deque<std::vector<Node>> levels_;
};

Table& table_for(int bits) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<Table>> tables;
  std::lock_guard lock(mutex);
  auto& slot = tables[bits];
  if (!slot) slot = std::make_unique<Table>(bits);
  return *slot;
}

// `edge` receives the weighted magnitude at the outermost node pair, which
// bounds the part of the integral cut off beyond t_max.
BigReal level_sum(const Integrand& f, const std::vector<Node>& nodes, const BigReal& a, const BigReal& half,
                  BigReal& edge) {
  BigReal sum(0L);
  for (const Node& node : nodes) {
    // Right point: t - a = half (1 + x), b - t = half (1 - x).
    const BigReal right_a = half * node.one_plus;
    const BigReal right_b = half * node.one_minus;
    const BigReal right = f(a + right_a, right_a, right_b);
    BigReal acc = right;
    edge = abs(node.weight * right);
    if (!node.center) {
      const BigReal left = f(a + right_b, right_b, right_a);
      acc += left;
      edge += abs(node.weight * left);
    }
    sum += node.weight * acc;
  }
  return sum;
}

}  // namespace

QuadResult integrate_with_history(const Integrand& f, const BigReal& a, const BigReal& b) {
  const int bits = working_precision();
  Table& table = table_for(bits);
  const BigReal half = (b - a) / 2;
  const BigReal stop = pow2(24 - bits);

  QuadResult out;
  BigReal raw(0L);  // sum of weight * f over all nodes so far
  BigReal estimate(0L);
  BigReal err(0L);
  BigReal edge(0L);
  long evaluations = 0;
  for (int L = 0; L <= kLevelCap; ++L) {
    const auto& nodes = table.level(L);
    raw += level_sum(f, nodes, a, half, edge);
    evaluations += 2 * static_cast<long>(nodes.size());
    const BigReal next = raw * half * pow2(-L);
    if (L > 0) err = abs(next - estimate);
    estimate = next;
    out.levels.push_back(estimate);
    if (L >= 4 && err < stop) break;
  }
  if (err > pow2(-24)) throw ConvergenceError("tanh-sinh quadrature did not converge by level 12");
  const BigReal truncation = abs(half) * edge;
  out.result = {estimate, err + truncation + ldexp(abs(estimate) + 1L, 8 - bits), Method::quadrature, evaluations};
  return out;
}

EvalResult integrate(const Integrand& f, const BigReal& a, const BigReal& b) {
  return integrate_with_history(f, a, b).result;
}

// ---------------------------------------------------------------------------

IntegrandSpec IntegrandSpec::lemma2_1(int n, int m, Rational x) {
  IntegrandSpec s;
  s.kind = IntegrandKind::lemma2_1;
  s.n = n;
  s.m = m;
  s.x = std::move(x);
  return s;
}

IntegrandSpec IntegrandSpec::powlog(int n, int m, Rational x) {
  IntegrandSpec s;
  s.kind = IntegrandKind::powlog;
  s.n = n;
  s.m = m;
  s.x = std::move(x);
  return s;
}

IntegrandSpec IntegrandSpec::lemma2_3(int m) {
  IntegrandSpec s;
  s.kind = IntegrandKind::lemma2_3;
  s.m = m;
  return s;
}

IntegrandSpec IntegrandSpec::lemma2_4(int m, Rational x) {
  IntegrandSpec s;
  s.kind = IntegrandKind::lemma2_4;
  s.m = m;
  s.x = std::move(x);
  return s;
}

IntegrandSpec IntegrandSpec::thm3_3(int m, int k) {
  IntegrandSpec s;
  s.kind = IntegrandKind::thm3_3;
  s.m = m;
  s.k = k;
  return s;
}

void IntegrandSpec::validate() const {
  const auto require = [this](bool ok, const char* what) {
    if (!ok) throw DomainError(to_string() + ": " + what);
  };
  switch (kind) {
    case IntegrandKind::lemma2_1:
      require(n >= 1 && m >= 0, "needs n >= 1, m >= 0");
      require(x >= -1 && x < 1, "needs -1 <= x < 1");
      break;
    case IntegrandKind::powlog:
      require(n >= 0 && m >= 0, "needs n, m >= 0");
      require(x > 0 && x <= 1, "needs 0 < x <= 1");
      break;
    case IntegrandKind::lemma2_3:
      require(m >= 0, "needs m >= 0");
      break;
    case IntegrandKind::lemma2_4:
      require(m >= 1, "needs m >= 1");
      require(x > 0 && x <= 1, "needs 0 < x <= 1");
      break;
    case IntegrandKind::thm3_3:
      require(m >= 0 && k >= 0, "needs m, k >= 0");
      break;
  }
}

std::string IntegrandSpec::to_string() const {
  const auto join = [](const std::string& id, std::initializer_list<std::string> parts) {
    std::string out = id + "(";
    bool first = true;
    for (const auto& p : parts) {
      if (!first) out += ',';
      out += p;
      first = false;
    }
    return out + ")";
  };
  const auto s = [](int v) { return std::to_string(v); };
  switch (kind) {
    case IntegrandKind::lemma2_1:
      return join("lemma2_1", {s(n), s(m), mzv::to_string(x)});
    case IntegrandKind::powlog:
      return join("powlog", {s(n), s(m), mzv::to_string(x)});
    case IntegrandKind::lemma2_3:
      return join("lemma2_3", {s(m)});
    case IntegrandKind::lemma2_4:
      return join("lemma2_4", {s(m), mzv::to_string(x)});
    case IntegrandKind::thm3_3:
      return join("thm3_3", {s(m), s(k)});
  }
  return {};
}

IntegrandSpec parse_integrand(const std::string& id, const std::vector<std::string>& params) {
  const auto integer = [](const std::string& text) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != text.size() || text.empty()) throw SyntaxError("expected an integer, got '" + text + "'");
    return v;
  };
  const auto rational = [](const std::string& text) {
    try {
      return parse_rational(text);
    } catch (const std::exception&) {
      throw SyntaxError("expected a rational, got '" + text + "'");
    }
  };
  const auto arity = [&](std::size_t count) {
    if (params.size() != count) {
      throw SyntaxError(id + " takes " + std::to_string(count) + " parameter(s)");
    }
  };
  IntegrandSpec spec;
  if (id == "lemma2_1") {
    arity(3);
    spec = IntegrandSpec::lemma2_1(integer(params[0]), integer(params[1]), rational(params[2]));
  } else if (id == "powlog") {
    arity(3);
    spec = IntegrandSpec::powlog(integer(params[0]), integer(params[1]), rational(params[2]));
  } else if (id == "lemma2_3") {
    arity(1);
    spec = IntegrandSpec::lemma2_3(integer(params[0]));
  } else if (id == "lemma2_4") {
    if (params.size() == 1) {
      spec = IntegrandSpec::lemma2_4(integer(params[0]));
    } else {
      arity(2);
      spec = IntegrandSpec::lemma2_4(integer(params[0]), rational(params[1]));
    }
  } else if (id == "thm3_3") {
    arity(2);
    spec = IntegrandSpec::thm3_3(integer(params[0]), integer(params[1]));
  } else {
    throw SyntaxError("unknown integrand: " + id);
  }
  spec.validate();
  return spec;
}

QuadResult integrate_with_history(const IntegrandSpec& spec) {
  spec.validate();
  const int n = spec.n;
  const int m = spec.m;
  const int k = spec.k;
  const BigReal x(spec.x);
  switch (spec.kind) {
    case IntegrandKind::lemma2_1: {
      if (spec.x >= 0) {
        return integrate_with_history(
            [n, m](const BigReal&, const BigReal& t, const BigReal&) { return pow(t, n - 1) * pow(log1p(-t), m); },
            BigReal(0L), x);
      }
      // Over [x, 0] with t = -(0 - t); the orientation flips the sign.
      QuadResult r = integrate_with_history(
          [n, m](const BigReal&, const BigReal&, const BigReal& s) { return pow(-s, n - 1) * pow(log1p(s), m); }, x,
          BigReal(0L));
      r.result.value = -r.result.value;
      for (auto& v : r.levels) v = -v;
      return r;
    }
    case IntegrandKind::powlog:
      return integrate_with_history(
          [n, m](const BigReal&, const BigReal& t, const BigReal&) { return pow(t, n) * pow(log(t), m); }, BigReal(0L),
          x);
    case IntegrandKind::lemma2_3:
      return integrate_with_history(
          [m](const BigReal&, const BigReal& t, const BigReal& rest) {
            return pow(log1p(t), m) * log(rest) / (BigReal(1L) + t);
          },
          BigReal(0L), BigReal(1L));
    case IntegrandKind::lemma2_4:
      return integrate_with_history(
          [m](const BigReal&, const BigReal& t, const BigReal&) { return pow(log1p(t), m) / t; }, BigReal(0L), x);
    case IntegrandKind::thm3_3:
      return integrate_with_history(
          [m, k](const BigReal&, const BigReal& t, const BigReal&) {
            return pow(log(t), k) * pow(log1p(-t / 2), m + 1) / t;
          },
          BigReal(0L), BigReal(1L));
  }
  throw DomainError("unknown integrand");
}

EvalResult integrate(const IntegrandSpec& spec) { return integrate_with_history(spec).result; }

EvalResult integrate(const IntegrandSpec& spec, int precision_bits) {
  PrecisionScope scope(precision_bits);
  return integrate(spec);
}

}  // namespace mzv::quadrature
