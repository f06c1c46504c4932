#ifndef ROOKFFT_FFT_HPP_
#define ROOKFFT_FFT_HPP_

#include <cstdint>
#include <vector>

#include "rookfft/algebra.hpp"
#include "rookfft/matrix.hpp"
#include "rookfft/parallel.hpp"
#include "rookfft/rook_reps.hpp"

namespace rookfft {

// One dense block per label of labels(n), always complete.
struct FourierCoefficients {
  int n = 0;
  Family family = Family::stein;
  std::vector<IrrepLabel> labels;
  std::vector<Matrix> blocks;
  OpCounter ops;

  const Matrix& block(const IrrepLabel& label) const;
  Matrix& block(const IrrepLabel& label);
};

// Zero blocks of the right shapes for every label of R_n.
FourierCoefficients zero_coefficients(int n, Family family);

// Sum_s f(s) rho(s) evaluated directly.  halverson takes semigroup-basis
// input, stein takes groupoid-basis input.  Counts support * dim^2 per label.
FourierCoefficients naive_transform(const AlgebraElement& f, Family family);

// Groupoid-basis input; C(n,k)^2 independent S_k FFTs per rank k.
FourierCoefficients stein_fft(const AlgebraElement& f, Execution exec = Execution::serial);
// Semigroup-basis input: dense zeta transform, then stein_fft.
FourierCoefficients stein_fft_semigroup(const AlgebraElement& f, Execution exec = Execution::serial);
// Semigroup-basis input, halverson family.  Splits R_n into 2n images of
// R_{n-1} (left cosets T_i, the link [n], right cosets T^i) and recurses;
// n <= 2 is naive.  ops.top_level_combine and ops.max_subproblem record the
// top-level split for checking the recurrence.
FourierCoefficients recursive_fft(const AlgebraElement& f, Execution exec = Execution::serial);

// Groupoid-basis coefficients from a complete block set of either family.
AlgebraElement fourier_invert(const FourierCoefficients& F);

// Blockwise matrix product; labels and family must agree.
FourierCoefficients multiply_blocks(const FourierCoefficients& a, const FourierCoefficients& b);
double max_block_difference(const FourierCoefficients& a, const FourierCoefficients& b);

// Which of the three factorizations of the recursive FFT applies to s at
// the top level: n in dom s (left coset), n in ran s only (right coset),
// or neither (link).
enum class FactorizationType { left_coset = 1, right_coset = 2, link = 3 };
FactorizationType factorization_type(const PartialPermutation& s);

// --- closed-form bounds ----------------------------------------------------

// 3 * sum_k C(n,k)^2 (2/3) k (k+1)^2 k!, kept integral.
std::uint64_t stein_bound_times3(int n);
bool within_stein_bound(std::uint64_t ops, int n);
// 2^n |R_n|.
std::uint64_t zeta_bound(int n);
// |R_n|^2 for n <= 2, else 2n B_{n-1} + 2n^2 |R_n|.
std::uint64_t recursive_bound(int n);
// Number of (x, s) pairs with s <= x: sum_k C(n,k)^2 k! |R_{n-k}|.
std::uint64_t zeta_ones_by_rows(int n);
// The same count column by column: sum_k C(n,k)^2 k! 2^k.
std::uint64_t zeta_ones_by_columns(int n);

}  // namespace rookfft

#endif  // ROOKFFT_FFT_HPP_
