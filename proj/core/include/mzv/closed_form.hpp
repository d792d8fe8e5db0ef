#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "mzv/expr.hpp"
#include "mzv/index.hpp"

namespace mzv::symbolic {

enum class Family {
  euler_star,           ///< zeta*(k,1), k >= 2
  star_bar1_ones_bar1,  ///< zeta*(-1,{1}_m,-1)
  star2_ones_bar1,      ///< zeta*(2,{1}_m,-1)
  star_bar1_ones,       ///< zeta*(-1,{1}_m) = -Li_{m+1}(1/2)
  star2_ones,           ///< zeta*(2,{1}_m) = (m+1) zeta(m+2)
  li_two_ones,          ///< Li_{2,{1}_m}(1/2)
  mzv_bar1_ones_bar1,   ///< zeta(-1,{1}_m,-1)
  integral_i,           ///< I(k) = int_0^1 ln^k(1+t) ln(1-t) / (1+t) dt
  integral_j,           ///< int_0^1 ln^m(1+t) / t dt, m >= 1
  three_bar,            ///< zeta(-1,{1}_m,-1,-1,{1}_k)
  bar1_one_two,         ///< zeta(-1,1,2), a fixed weight-4 value
};

struct FamilyInfo {
  Family family;
  std::string_view name;  ///< command-line name
  int arity;
  std::string_view params;  ///< parameter names for help text
};

std::span<const FamilyInfo> families();
const FamilyInfo& family_info(Family f);
/// Looks up a family by its command-line name; DomainError if unknown.
Family parse_family(std::string_view name);

/// Exact closed form. Recurrences are unrolled symbolically and memoized in a
/// process-wide thread-safe table. The result is not canonicalized, so Li_1,
/// Li_2 and Li_3 at 1/2 may appear. DomainError for a wrong parameter count or
/// out-of-range parameters.
ConstantExpr closed_form(Family f, std::span<const int> params);
ConstantExpr closed_form(Family f, std::initializer_list<int> params);

/// The index whose value the family describes, when there is one.
std::optional<SignedIndex> family_index(Family f, std::span<const int> params);

}  // namespace mzv::symbolic
