#ifndef ROOKFFT_PARTIAL_PERMUTATION_HPP_
#define ROOKFFT_PARTIAL_PERMUTATION_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rookfft {

// A strictly increasing subset of {1..n}.
class OrderedKSubset {
 public:
  OrderedKSubset() = default;
  OrderedKSubset(int n, std::vector<int> elements);

  static OrderedKSubset first(int n, int k);  // {1..k}
  static OrderedKSubset from_colex(int n, int k, std::uint64_t rank);

  int n() const { return n_; }
  int k() const { return static_cast<int>(elements_.size()); }
  std::span<const int> elements() const { return elements_; }
  bool contains(int x) const;
  std::uint64_t colex_rank() const;

  auto operator<=>(const OrderedKSubset&) const = default;

 private:
  int n_ = 0;
  std::vector<int> elements_;
};

// An injective partial map on {1..n}; an element of the rook monoid R_n.
// Symbols are 1-based; image(x) == kUndefined when x is not in the domain.
class PartialPermutation {
 public:
  static constexpr int kUndefined = 0;

  PartialPermutation() = default;
  // The zero map of R_n.
  explicit PartialPermutation(int n);
  // image[i] is the image of symbol i+1, or kUndefined.  Throws
  // DimensionError for out-of-range values and non-injective images.
  PartialPermutation(int n, std::vector<int> image);

  static PartialPermutation identity(int n);
  static PartialPermutation zero(int n) { return PartialPermutation(n); }
  // Identity restricted to a subset; these are exactly the idempotents.
  static PartialPermutation idempotent_on(const OrderedKSubset& a);
  // From a list of (x -> y) pairs.
  static PartialPermutation from_pairs(int n, std::span<const std::pair<int, int>> pairs);

  int n() const { return n_; }
  int operator()(int x) const { return image_[static_cast<std::size_t>(x - 1)]; }
  bool defined_at(int x) const { return (*this)(x) != kUndefined; }
  std::span<const int> image() const { return image_; }

  int rank() const;
  OrderedKSubset domain() const;
  OrderedKSubset range() const;
  bool in_range(int y) const;
  // Preimage of y, or kUndefined.
  int preimage(int y) const;
  bool is_permutation() const { return rank() == n_; }

  auto operator<=>(const PartialPermutation&) const = default;

 private:
  int n_ = 0;
  std::vector<int> image_;
};

// (g o f)(x) = g(f(x)); defined iff x in dom f and f(x) in dom g.
PartialPermutation compose(const PartialPermutation& g, const PartialPermutation& f);
PartialPermutation operator*(const PartialPermutation& g, const PartialPermutation& f);

PartialPermutation inverse(const PartialPermutation& s);

// Natural partial order: s <= t iff s is a restriction of t.
bool leq(const PartialPermutation& s, const PartialPermutation& t);

// (-1)^(rk t - rk s) when s <= t, else 0.
int mobius(const PartialPermutation& s, const PartialPermutation& t);

// All elements of R_n, grouped by rank, then range (colex), then domain
// (colex), then the S_k part in coset order.  See RookIndex.
std::vector<PartialPermutation> enumerate(int n);
std::uint64_t size(int n);
std::uint64_t size_recursive(int n);

// Cycle-link (Munn) notation: "(a,b,...)" is a cycle, "[b1,...,bk]" a link
// with bk unmapped.  Every symbol 1..n must occur exactly once.
PartialPermutation parse_cycle_link(std::string_view text, int n);
// Canonical form: cycles first, each rotated to start at its minimum, then
// links; blocks within each group sorted by minimal element.
std::string print_cycle_link(const PartialPermutation& s);

// Flat form "2->1;4->4", ascending domain; empty string for the zero map.
PartialPermutation parse_flat(std::string_view text, int n);
std::string print_flat(const PartialPermutation& s);

// 0/1 rook matrix, row = image, column = argument.  Display only.
std::string print_rook_matrix(const PartialPermutation& s);

// Unique order preserving bijection A -> B as an element of R_n.
PartialPermutation order_preserving(const OrderedKSubset& a, const OrderedKSubset& b);

// s = p_({1..k} -> ran) . y . p_(dom -> {1..k}) with y in S_k.
struct CanonicalFactorization {
  OrderedKSubset ran;
  std::vector<int> y;  // permutation of {1..k}, 1-based images
  OrderedKSubset dom;
};

CanonicalFactorization factorize(const PartialPermutation& s);
PartialPermutation reassemble(const CanonicalFactorization& f);
// Embed a permutation of {1..k} into R_n (rank k, dom = ran = {1..k}).
PartialPermutation embed_permutation(std::span<const int> perm, int n);

// Dense indexing of R_n in the enumeration order.  The block of rank k,
// range A and domain B is contiguous and ordered by coset index of y, so
// the Stein block functions f_{A,B} are plain slices.
class RookIndex {
 public:
  explicit RookIndex(int n);

  int n() const { return n_; }
  std::size_t size() const { return elements_.size(); }
  const PartialPermutation& element(std::size_t i) const { return elements_[i]; }
  const std::vector<PartialPermutation>& elements() const { return elements_; }
  std::size_t index_of(const PartialPermutation& s) const;
  // First index of rank k, and the offset of the (A, B) cell of rank k.
  std::size_t rank_offset(int k) const { return rank_offsets_[static_cast<std::size_t>(k)]; }
  std::size_t cell_offset(int k, std::uint64_t ran_rank, std::uint64_t dom_rank) const;

 private:
  int n_;
  std::vector<std::size_t> rank_offsets_;
  std::vector<PartialPermutation> elements_;
};

// Shared, lazily built RookIndex(n).
const RookIndex& rook_index(int n);

// Calls fn(x) for every x >= s (extensions of s), in a fixed order.
void for_each_extension(const PartialPermutation& s,
                        const std::function<void(const PartialPermutation&)>& fn);
// Calls fn(t) for every t <= s (restrictions of s), in a fixed order.
void for_each_restriction(const PartialPermutation& s,
                          const std::function<void(const PartialPermutation&)>& fn);

}  // namespace rookfft

template <>
struct std::hash<rookfft::PartialPermutation> {
  std::size_t operator()(const rookfft::PartialPermutation& s) const noexcept;
};

#endif  // ROOKFFT_PARTIAL_PERMUTATION_HPP_
