#ifndef ROOKFFT_COMBINATORICS_HPP_
#define ROOKFFT_COMBINATORICS_HPP_

#include <cstdint>
#include <span>
#include <vector>

namespace rookfft {

std::uint64_t factorial(int n);
std::uint64_t binomial(int n, int k);

// |R_n| by the closed form sum_k C(n,k)^2 k!.
std::uint64_t rook_size(int n);

// |R_n| by the recurrence 2n|R_{n-1}| - (n-1)^2 |R_{n-2}|, seeded with
// |R_0| = 1, |R_1| = 2, |R_2| = 7.
std::uint64_t rook_size_recursive(int n);

// Colexicographic rank of a strictly increasing 1-based subset.  The set
// {1..k} has rank 0.
std::uint64_t colex_rank(std::span<const int> subset);
std::vector<int> colex_unrank(int n, int k, std::uint64_t rank);

// Permutations of {1..m} are stored as 1-based image vectors.  The coset
// index orders S_m so that T_i S_{m-1} (T_i = t_{i+1}...t_m, i.e. the
// permutations with sigma(m) = i) is the contiguous block
// [(i-1)(m-1)!, i(m-1)!) and, inside that block, T_i^{-1} sigma is indexed
// recursively in S_{m-1}.  The identity gets the last index, m! - 1.
std::uint64_t coset_index(std::span<const int> perm);
std::vector<int> perm_from_coset_index(int m, std::uint64_t index);

}  // namespace rookfft

#endif  // ROOKFFT_COMBINATORICS_HPP_
