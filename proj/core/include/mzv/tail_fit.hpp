#pragma once

#include <span>
#include <vector>

#include "mzv/big_real.hpp"

namespace mzv::series {

/// Limit of a sequence of partial sums S(N) modelled as
///
///   S(N) = L + sum_{a=1..orders} sum_{b=0..log_degree} c_{a,b} ln(N)^b / N^a,
///
/// the asymptotic shape of nested harmonic sums. Checkpoints must be even so
/// that (-1)^N components collapse into the smooth model.
struct TailFit {
  BigReal limit;
  BigReal err;     ///< |L(orders) - L(orders - 1)|
  int orders = 0;  ///< orders actually used (may be reduced for short ladders)
};

/// Number of unknowns of the model.
int tail_fit_unknowns(int log_degree, int orders);

/// Even, strictly decreasing checkpoints N_0 = cutoff (rounded down to even),
/// N_i ~ N_0 / 1.2^i, stopping before `floor` or after `count` entries.
std::vector<long> checkpoint_ladder(long cutoff, int count, long floor);

/// Solves the exactly determined model on the largest tail_fit_unknowns()
/// checkpoints, and again with one order fewer for the error estimate.
/// `ns` must be decreasing; `sums[i]` is S(ns[i]). Reduces `orders` when the
/// ladder is too short; with no usable order returns S(ns[0]) and
/// |S(ns[0]) - S(ns[1])|.
TailFit fit_log_polynomial(std::span<const long> ns, std::span<const BigReal> sums, int log_degree, int orders);

/// Gaussian elimination with partial pivoting; `a` is row-major n x n.
/// Throws ConvergenceError if the matrix is singular.
std::vector<BigReal> solve_linear(std::vector<BigReal> a, std::vector<BigReal> b);

}  // namespace mzv::series
