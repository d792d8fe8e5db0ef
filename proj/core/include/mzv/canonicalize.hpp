#pragma once

#include "mzv/expr.hpp"

namespace mzv::symbolic {

/// Rewrites Li_1(1/2) as ln 2 and, when reduce_low_li is set, eliminates
/// Li_2(1/2) and Li_3(1/2) through their classical evaluations in zeta values
/// and ln 2. The rules are checked numerically (once per working precision)
/// to 2^(32-P) before first use; a failed check throws ValidationError.
ConstantExpr canonicalize(const ConstantExpr& e, bool reduce_low_li = true);

/// Right-hand side used for Li_k(1/2), k in {1, 2, 3}; DomainError otherwise.
ConstantExpr li_half_rule(int k);

/// Runs the numeric self-check of every rule at the working precision.
void validate_li_rules();

}  // namespace mzv::symbolic
