#include "rookfft/combinatorics.hpp"

#include "rookfft/errors.hpp"

namespace rookfft {

std::uint64_t factorial(int n) {
  if (n < 0) throw DimensionError("factorial of a negative number");
  if (n > 20) throw DimensionError("factorial overflows 64 bits");
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return r;
}

std::uint64_t rook_size(int n) {
  if (n < 0) throw DimensionError("rook monoid size requires n >= 0");
  std::uint64_t total = 0;
  for (int k = 0; k <= n; ++k) {
    const std::uint64_t c = binomial(n, k);
    total += c * c * factorial(k);
  }
  return total;
}

std::uint64_t rook_size_recursive(int n) {
  if (n < 0) throw DimensionError("rook monoid size requires n >= 0");
  static constexpr std::uint64_t kBase[] = {1, 2, 7};
  if (n <= 2) return kBase[n];
  std::uint64_t prev2 = kBase[1];
  std::uint64_t prev1 = kBase[2];
  for (int m = 3; m <= n; ++m) {
    const auto um = static_cast<std::uint64_t>(m);
    const std::uint64_t cur = 2 * um * prev1 - (um - 1) * (um - 1) * prev2;
    prev2 = prev1;
    prev1 = cur;
  }
  return prev1;
}

std::uint64_t colex_rank(std::span<const int> subset) {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    r += binomial(subset[i] - 1, static_cast<int>(i) + 1);
  }
  return r;
}

std::vector<int> colex_unrank(int n, int k, std::uint64_t rank) {
  if (rank >= binomial(n, k)) throw DimensionError("colex rank out of range");
  std::vector<int> out(static_cast<std::size_t>(k));
  int top = n;
  for (int i = k; i >= 1; --i) {
    // largest a with C(a-1, i) <= rank
    int a = top;
    while (binomial(a - 1, i) > rank) --a;
    out[static_cast<std::size_t>(i - 1)] = a;
    rank -= binomial(a - 1, i);
    top = a - 1;
  }
  return out;
}

std::uint64_t coset_index(std::span<const int> perm) {
  std::vector<int> p(perm.begin(), perm.end());
  std::uint64_t index = 0;
  for (int m = static_cast<int>(p.size()); m >= 2; --m) {
    const int i = p[static_cast<std::size_t>(m - 1)];
    index += static_cast<std::uint64_t>(i - 1) * factorial(m - 1);
    p.pop_back();
    for (int& v : p) {
      if (v > i) --v;
    }
  }
  return index;
}

std::vector<int> perm_from_coset_index(int m, std::uint64_t index) {
  if (m < 0) throw DimensionError("negative permutation degree");
  if (m == 0) return {};
  if (index >= factorial(m)) throw DimensionError("coset index out of range");
  std::vector<int> p{1};
  std::vector<int> digits(static_cast<std::size_t>(m + 1), 0);
  for (int level = m; level >= 2; --level) {
    const std::uint64_t block = factorial(level - 1);
    digits[static_cast<std::size_t>(level)] = static_cast<int>(index / block) + 1;
    index %= block;
  }
  for (int level = 2; level <= m; ++level) {
    const int i = digits[static_cast<std::size_t>(level)];
    for (int& v : p) {
      if (v >= i) ++v;
    }
    p.push_back(i);
  }
  return p;
}

}  // namespace rookfft
