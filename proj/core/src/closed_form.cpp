#include "mzv/closed_form.hpp"

#include <array>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>

#include "mzv/errors.hpp"

namespace mzv::symbolic {
namespace {

constexpr std::array<FamilyInfo, 11> kFamilies{{
    {Family::euler_star, "euler-star", 1, "k"},
    {Family::star_bar1_ones_bar1, "star-bar1", 1, "m"},
    {Family::star2_ones_bar1, "star-2", 1, "m"},
    {Family::star_bar1_ones, "star-bar1-ones", 1, "m"},
    {Family::star2_ones, "star-2-ones", 1, "m"},
    {Family::li_two_ones, "li-two-ones", 1, "m"},
    {Family::mzv_bar1_ones_bar1, "mzv-bar1-ones-bar1", 1, "m"},
    {Family::integral_i, "integral-i", 1, "k"},
    {Family::integral_j, "integral-j", 1, "m"},
    {Family::three_bar, "three-bar", 2, "m k"},
    {Family::bar1_one_two, "weight4-bar1-one-two", 0, ""},
}};

// Small builders.
ConstantExpr L(int p) { return p == 0 ? ConstantExpr(Rational(1)) : ConstantExpr(BasisSymbol::ln2(), p); }
ConstantExpr Z(int k) { return ConstantExpr(BasisSymbol::zeta(k)); }
ConstantExpr Li(int k) { return ConstantExpr(BasisSymbol::li_half(k)); }
Rational q(long n, long d = 1) { return make_rational(n, d); }
Rational sgn(int n) { return Rational((n % 2 == 0) ? 1 : -1); }
Rational fact(int n) { return Rational(factorial(static_cast<unsigned long>(n))); }
Rational binom(int n, int k) {
  return Rational(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)));
}

class Memo {
 public:
  template <class F>
  ConstantExpr get(Family f, std::vector<int> params, F&& compute) {
    Key key{f, std::move(params)};
    {
      std::shared_lock lock(mutex_);
      const auto it = table_.find(key);
      if (it != table_.end()) return it->second;
    }
    // Computed without the lock; recurrences re-enter get(). Entries are
    // deterministic, so a concurrent duplicate insert is harmless.
    ConstantExpr value = compute();
    std::unique_lock lock(mutex_);
    return table_.emplace(std::move(key), std::move(value)).first->second;
  }

 private:
  using Key = std::pair<Family, std::vector<int>>;
  std::shared_mutex mutex_;
  std::map<Key, ConstantExpr> table_;
};

Memo& memo() {
  static Memo m;
  return m;
}

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

ConstantExpr star_bar1_ones(int m) { return -Li(m + 1); }

ConstantExpr star2_ones(int m) { return q(m + 1) * Z(m + 2); }

// sum_{k=1}^{m} C(m,k) (-1)^{k+1} { sum_{l=1}^{k} l! C(k,l) ln^{m-l}2 Li_{l+2} - k! ln^{m-k}2 zeta(k+2) }
ConstantExpr lemma_inner_sum(int m) {
  ConstantExpr total;
  for (int k = 1; k <= m; ++k) {
    ConstantExpr brace;
    for (int l = 1; l <= k; ++l) brace += fact(l) * binom(k, l) * L(m - l) * Li(l + 2);
    brace -= fact(k) * L(m - k) * Z(k + 2);
    total += binom(m, k) * sgn(k + 1) * brace;
  }
  return total;
}

ConstantExpr integral_i(int k);
ConstantExpr star_bar1_ones_bar1(int m);
ConstantExpr star2_ones_bar1(int m);
ConstantExpr three_bar(int m, int k);

ConstantExpr integral_i(int m) {
  require(m >= 0, "integral-i needs k >= 0");
  return memo().get(Family::integral_i, {m}, [m] {
    if (m == 0) return q(1, 2) * L(2) - q(1, 2) * Z(2);
    return q(1, m + 1) * L(m + 2) - Z(2) * L(m) - lemma_inner_sum(m);
  });
}

ConstantExpr integral_j(int m) {
  require(m >= 1, "integral-j needs m >= 1");
  ConstantExpr out = q(1, m + 1) * L(m + 1) + fact(m) * (Z(m + 1) - Li(m + 1));
  for (int j = 1; j <= m; ++j) out -= fact(m) / fact(m - j + 1) * L(m - j + 1) * Li(j);
  return out;
}

ConstantExpr star_bar1_ones_bar1(int m) {
  require(m >= 0, "star-bar1 needs m >= 0");
  return memo().get(Family::star_bar1_ones_bar1, {m}, [m] {
    if (m == 0) return q(1, 2) * Z(2) + q(1, 2) * L(2);
    ConstantExpr out = sgn(m) / fact(m) * Z(2) * L(m);
    ConstantExpr mid;
    for (int i = 1; i <= m; ++i) {
      mid += sgn(i + 1) * fact(i) * binom(m + 1, i) * L(m + 1 - i) * (star_bar1_ones_bar1(i - 1) - star_bar1_ones(i));
    }
    out -= sgn(m) / fact(m + 1) * mid;
    out += sgn(m) / fact(m) * lemma_inner_sum(m);
    return out;
  });
}

ConstantExpr star2_ones_bar1(int m) {
  require(m >= 0, "star-2 needs m >= 0");
  return memo().get(Family::star2_ones_bar1, {m}, [m] {
    if (m == 0) return q(1, 4) * Z(3) - q(3, 2) * Z(2) * L(1);
    const Rational s = sgn(m);
    ConstantExpr out = q(m + 2) / fact(m + 3) * s * L(m + 3);
    out += q(m + 2) * s * (Z(m + 3) - Li(m + 3));
    ConstantExpr tail;
    for (int j = 1; j <= m + 2; ++j) tail += Rational(1) / fact(m + 3 - j) * L(m + 3 - j) * Li(j);
    out -= q(m + 2) * s * tail;
    out -= q(3, 2) * s / fact(m + 1) * Z(2) * L(m + 1);
    ConstantExpr mid;
    for (int i = 1; i <= m; ++i) {
      mid += sgn(i - 1) * fact(i) * binom(m + 1, i) * L(m + 1 - i) * (star2_ones_bar1(i - 1) - star2_ones(i));
    }
    out -= s / fact(m + 1) * mid;
    return out;
  });
}

// zeta(m+2) - sum_{l=0}^{m+1} ln^{m+1-l}2 / (m+1-l)! Li_{l+1}(1/2)
ConstantExpr li_two_ones(int m) {
  require(m >= 0, "li-two-ones needs m >= 0");
  ConstantExpr out = Z(m + 2);
  for (int l = 0; l <= m + 1; ++l) out -= Rational(1) / fact(m + 1 - l) * L(m + 1 - l) * Li(l + 1);
  return out;
}

ConstantExpr mzv_bar1_ones_bar1(int m) {
  require(m >= 0, "mzv-bar1-ones-bar1 needs m >= 0");
  return sgn(m + 1) * li_two_ones(m);
}

ConstantExpr three_bar(int m, int k) {
  require(m >= 0 && k >= 0, "three-bar needs m, k >= 0");
  return memo().get(Family::three_bar, {m, k}, [m, k] {
    ConstantExpr out = sgn(k) / (fact(m + 1) * fact(k + 1)) *
                       (q(k + 1) * L(m + 1) * integral_i(k) - q(m + k + 2) * integral_i(m + k + 1));
    for (int i = 1; i <= m; ++i) out -= Rational(1) / fact(i) * L(i) * three_bar(m - i, k);
    return out;
  });
}

ConstantExpr euler_star(int k) {
  require(k >= 2, "euler-star needs k >= 2");
  ConstantExpr out = q(k + 2) * Z(k + 1);
  for (int i = 1; i <= k - 2; ++i) out -= Z(k - i) * Z(i + 1);
  return q(1, 2) * out;
}

ConstantExpr bar1_one_two() {
  return q(3) * Li(4) + q(1, 8) * L(4) + q(23, 8) * Z(3) * L(1) - Z(2) * L(2) - q(3) * Z(4);
}

std::vector<int> cat(std::initializer_list<std::vector<int>> parts) { return concat(parts); }

}  // namespace

std::span<const FamilyInfo> families() { return kFamilies; }

const FamilyInfo& family_info(Family f) {
  for (const auto& info : kFamilies) {
    if (info.family == f) return info;
  }
  throw DomainError("unknown family");
}

Family parse_family(std::string_view name) {
  for (const auto& info : kFamilies) {
    if (info.name == name) return info.family;
  }
  throw DomainError("unknown family: " + std::string(name));
}

ConstantExpr closed_form(Family f, std::span<const int> params) {
  const FamilyInfo& info = family_info(f);
  if (static_cast<int>(params.size()) != info.arity) {
    throw DomainError(std::string(info.name) + " takes " + std::to_string(info.arity) + " parameter(s)");
  }
  switch (f) {
    case Family::euler_star:
      return euler_star(params[0]);
    case Family::star_bar1_ones_bar1:
      return star_bar1_ones_bar1(params[0]);
    case Family::star2_ones_bar1:
      return star2_ones_bar1(params[0]);
    case Family::star_bar1_ones:
      require(params[0] >= 0, "star-bar1-ones needs m >= 0");
      return star_bar1_ones(params[0]);
    case Family::star2_ones:
      require(params[0] >= 0, "star-2-ones needs m >= 0");
      return star2_ones(params[0]);
    case Family::li_two_ones:
      return li_two_ones(params[0]);
    case Family::mzv_bar1_ones_bar1:
      return mzv_bar1_ones_bar1(params[0]);
    case Family::integral_i:
      return integral_i(params[0]);
    case Family::integral_j:
      return integral_j(params[0]);
    case Family::three_bar:
      return three_bar(params[0], params[1]);
    case Family::bar1_one_two:
      return bar1_one_two();
  }
  throw DomainError("unknown family");
}

ConstantExpr closed_form(Family f, std::initializer_list<int> params) {
  return closed_form(f, std::span<const int>(params.begin(), params.size()));
}

std::optional<SignedIndex> family_index(Family f, std::span<const int> params) {
  const auto strict = [](const std::vector<int>& e) { return SignedIndex(IndexKind::strict, std::span<const int>(e)); };
  const auto star = [](const std::vector<int>& e) { return SignedIndex(IndexKind::star, std::span<const int>(e)); };
  const int a = params.empty() ? 0 : params[0];
  const int b = params.size() > 1 ? params[1] : 0;
  switch (f) {
    case Family::euler_star:
      return star({a, 1});
    case Family::star_bar1_ones_bar1:
      return star(cat({{-1}, repeat(1, a), {-1}}));
    case Family::star2_ones_bar1:
      return star(cat({{2}, repeat(1, a), {-1}}));
    case Family::star_bar1_ones:
      return star(cat({{-1}, repeat(1, a)}));
    case Family::star2_ones:
      return star(cat({{2}, repeat(1, a)}));
    case Family::mzv_bar1_ones_bar1:
      return strict(cat({{-1}, repeat(1, a), {-1}}));
    case Family::three_bar:
      return strict(cat({{-1}, repeat(1, a), {-1, -1}, repeat(1, b)}));
    case Family::bar1_one_two:
      return strict({-1, 1, 2});
    case Family::li_two_ones:
    case Family::integral_i:
    case Family::integral_j:
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace mzv::symbolic
