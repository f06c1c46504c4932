// Brute-force reference implementations used only by the tests.  Each one
// follows a definition directly and shares no code path with the library
// routine it checks.
#ifndef ROOKFFT_TESTS_ORACLES_HPP_
#define ROOKFFT_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <vector>

#include "rookfft/algebra.hpp"
#include "rookfft/fft.hpp"
#include "rookfft/partial_permutation.hpp"
#include "rookfft/rook_reps.hpp"
#include "rookfft/symmetric_group.hpp"

namespace oracle {

using rookfft::AlgebraElement;
using rookfft::Basis;
using rookfft::Complex;
using rookfft::Matrix;
using rookfft::PartialPermutation;

inline std::vector<PartialPermutation> idempotents(int n) {
  std::vector<PartialPermutation> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> img(static_cast<std::size_t>(n), 0);
    for (int x = 1; x <= n; ++x) {
      if (mask & (1u << (x - 1))) img[static_cast<std::size_t>(x - 1)] = x;
    }
    out.emplace_back(n, img);
  }
  return out;
}

// s <= t iff s = e t for some idempotent e.
inline bool leq_by_idempotents(const PartialPermutation& s, const PartialPermutation& t) {
  for (const auto& e : idempotents(s.n())) {
    if (rookfft::compose(e, t) == s) return true;
  }
  return false;
}

// Moebius function of a finite poset from its recursive definition.
inline int mobius_recursive(const std::vector<PartialPermutation>& all, const PartialPermutation& s,
                            const PartialPermutation& t) {
  if (!leq_by_idempotents(s, t)) return 0;
  if (s == t) return 1;
  int sum = 0;
  for (const auto& x : all) {
    if (x != t && leq_by_idempotents(s, x) && leq_by_idempotents(x, t)) sum += mobius_recursive(all, s, x);
  }
  return -sum;
}

// (f * g)(s) = sum over all pairs r, t of R_n with r t = s.
inline AlgebraElement convolve_all_pairs(const AlgebraElement& f, const AlgebraElement& g) {
  const auto all = rookfft::enumerate(f.n());
  AlgebraElement out(f.n(), Basis::semigroup);
  for (const auto& r : all) {
    for (const auto& t : all) out.add(rookfft::compose(r, t), f.coeff(r) * g.coeff(t));
  }
  out.normalize();
  return out;
}

// Groupoid basis expanded in the semigroup basis by its definition.
inline AlgebraElement floor_as_semigroup(const PartialPermutation& s) {
  AlgebraElement out(s.n(), Basis::semigroup);
  for (const auto& t : rookfft::enumerate(s.n())) {
    if (rookfft::leq(t, s)) out.add(t, static_cast<double>(rookfft::mobius(t, s)));
  }
  out.normalize();
  return out;
}

// Reduced word of a permutation of {1..k} in the transpositions t_j =
// (j-1, j), found by bubble sort: perm = t_{w[0]} t_{w[1]} ...
inline std::vector<int> reduced_word(std::vector<int> perm) {
  std::vector<int> word;
  const int k = static_cast<int>(perm.size());
  // perm = t_j perm' where perm' = t_j perm has one fewer inversion
  bool changed = true;
  while (changed) {
    changed = false;
    for (int j = 2; j <= k; ++j) {
      // left multiplication by t_j swaps the values j-1 and j
      const auto a = std::find(perm.begin(), perm.end(), j - 1);
      const auto b = std::find(perm.begin(), perm.end(), j);
      if (a > b) {
        std::iter_swap(a, b);
        word.push_back(j);
        changed = true;
      }
    }
  }
  return word;
}

// rho(perm) as a dense product of generator images along a reduced word.
inline Matrix rep_by_word(const rookfft::GroupRep& rep, const std::vector<int>& perm) {
  Matrix m = Matrix::Identity(rep.dim(), rep.dim());
  for (int j : reduced_word(perm)) m = m * rep.generator(j).dense();
  return m;
}

inline int count_standard_fillings(const rookfft::Partition& shape) {
  const int k = shape.weight();
  std::vector<int> values(static_cast<std::size_t>(k));
  std::iota(values.begin(), values.end(), 1);
  int count = 0;
  do {
    rookfft::StandardTableau t{shape, {}};
    std::size_t pos = 0;
    for (int r = 0; r < shape.length(); ++r) {
      t.rows.emplace_back(values.begin() + static_cast<std::ptrdiff_t>(pos),
                          values.begin() + static_cast<std::ptrdiff_t>(pos + static_cast<std::size_t>(shape.row_length(r))));
      pos += static_cast<std::size_t>(shape.row_length(r));
    }
    if (t.is_standard()) ++count;
  } while (std::next_permutation(values.begin(), values.end()));
  return count;
}

inline double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

inline double max_coeff_difference(const AlgebraElement& a, const AlgebraElement& b) {
  double worst = 0.0;
  for (const auto& [s, c] : a.terms()) worst = std::max(worst, std::abs(c - b.coeff(s)));
  for (const auto& [s, c] : b.terms()) worst = std::max(worst, std::abs(c - a.coeff(s)));
  return worst;
}

}  // namespace oracle

#endif  // ROOKFFT_TESTS_ORACLES_HPP_
