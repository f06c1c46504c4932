#ifndef ROOKFFT_ROOK_REPS_HPP_
#define ROOKFFT_ROOK_REPS_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "rookfft/matrix.hpp"
#include "rookfft/partial_permutation.hpp"
#include "rookfft/symmetric_group.hpp"

namespace rookfft {

// lambda |- k with 0 <= k <= n; one irreducible of R_n.
struct IrrepLabel {
  Partition lambda;
  int n = 0;

  int k() const { return lambda.weight(); }
  std::string to_string() const { return lambda.to_string(); }
  auto operator<=>(const IrrepLabel&) const = default;
};

// All labels of R_n: k = 0..n, partitions of k in partitions_of order.
std::vector<IrrepLabel> labels(int n);
// C(n,k) f^lambda.
std::uint64_t dim(const IrrepLabel& label);

enum class Family { stein, halverson };
std::string to_string(Family f);
Family family_from_string(const std::string& s);

// Tensor-up representation: floor(s) maps to E_{ran s, dom s} (x) rho(y)
// when rk s == k, else to zero.  The C(n,k) x C(n,k) cell grid is indexed
// by colex rank of range (rows) and domain (columns).
class SteinRep {
 public:
  explicit SteinRep(IrrepLabel label);

  const IrrepLabel& label() const { return label_; }
  int dim() const { return cells_ * base_.dim(); }
  int cells() const { return cells_; }
  const GroupRep& base() const { return base_; }

  Matrix eval_groupoid(const PartialPermutation& s) const;
  // s = sum over t <= s of floor(t).
  Matrix eval_semigroup(const PartialPermutation& s) const;

 private:
  IrrepLabel label_;
  int cells_;
  GroupRep base_;
};

// Chain-adapted action on n-standard tableaux of shape lambda, basis in
// generalized last-letter order.
class HalversonRep {
 public:
  explicit HalversonRep(IrrepLabel label);

  const IrrepLabel& label() const { return label_; }
  int dim() const { return basis_.size(); }
  const TableauBasis& basis() const { return basis_; }
  // rho(t_j), 2 <= j <= n.
  const SparseMatrix& generator(int j) const { return generators_.at(static_cast<std::size_t>(j)); }
  // rho([m]) for 1 <= m <= n; [n] is primitive, the others are conjugates
  // rho(T_m) rho([n]) rho(T_m)^{-1}.
  const SparseMatrix& link(int m) const { return links_.at(static_cast<std::size_t>(m)); }

  Matrix evaluate(const PartialPermutation& s) const;
  // floor(s) = sum over t <= s of (-1)^(rk s - rk t) t.
  Matrix evaluate_groupoid(const PartialPermutation& s) const;

 private:
  IrrepLabel label_;
  TableauBasis basis_;
  std::vector<SparseMatrix> generators_;
  std::vector<SparseMatrix> links_;
};

// One step of the Type 1/2/3 peeling of an element at level m.
struct PeelStep {
  enum class Kind { left_coset, right_coset, link };
  Kind kind;
  int level;  // m
  int i;      // coset index for T_i / T^i; m for the link
};

// s = L_n ... L_1 R_1 ... R_n where each level contributes one factor,
// T_i or [m] on the left, or T^i on the right.  Steps are listed from
// level n down to level 1.
std::vector<PeelStep> peel(const PartialPermutation& s);

// Multiply m <- rho(T_i) m for T_i = t_{i+1}...t_level (and the mirrored
// right version for T^i = t_level...t_{i+1}).
void apply_left_coset(const HalversonRep& rep, int level, int i, Matrix& m, OpCounter& ops);
void apply_right_coset(const HalversonRep& rep, int level, int i, Matrix& m, OpCounter& ops);

// Ordered summands of the restriction to R_{n-1}: lambda itself when
// |lambda| < n, then lambda minus each corner from top to bottom.
std::vector<IrrepLabel> branch_rn(const IrrepLabel& label);

// All Halverson reps of R_n with their branching into R_{n-1}.
class HalversonLevel {
 public:
  struct Block {
    std::size_t child;  // index into the level below
    int offset;
    int dim;
  };

  explicit HalversonLevel(int n);

  int n() const { return n_; }
  const std::vector<IrrepLabel>& labels() const { return labels_; }
  const std::vector<HalversonRep>& reps() const { return reps_; }
  const std::vector<Block>& branching(std::size_t label) const { return branching_[label]; }
  std::size_t index_of(const IrrepLabel& label) const;

 private:
  int n_;
  std::vector<IrrepLabel> labels_;
  std::vector<HalversonRep> reps_;
  std::vector<std::vector<Block>> branching_;
};

// Cached and immutable once built.
const HalversonLevel& halverson_level(int n);

// images[label][index] = rho(element index of RookIndex(n)), cached.
// Only for n <= 5, where the table stays small.
const std::vector<std::vector<Matrix>>& halverson_images(int n);

}  // namespace rookfft

#endif  // ROOKFFT_ROOK_REPS_HPP_
