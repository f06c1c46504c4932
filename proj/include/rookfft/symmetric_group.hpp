#ifndef ROOKFFT_SYMMETRIC_GROUP_HPP_
#define ROOKFFT_SYMMETRIC_GROUP_HPP_

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rookfft/matrix.hpp"
#include "rookfft/parallel.hpp"

namespace rookfft {

// Weakly decreasing positive parts; zeros are stripped on construction.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  int weight() const;
  int length() const { return static_cast<int>(parts_.size()); }
  int row_length(int row) const;
  // Rows (0-based) holding a corner box, top to bottom.
  std::vector<int> corner_rows() const;
  Partition remove_corner(int row) const;
  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

// Partitions of k in decreasing lexicographic order: (k) first, (1^k) last.
std::vector<Partition> partitions_of(int k);
// Number of standard tableaux, by the hook length formula.
std::uint64_t hook_length_dimension(const Partition& lambda);

// Filling of a Young diagram by distinct positive integers.
struct StandardTableau {
  Partition shape;
  std::vector<std::vector<int>> rows;

  bool contains(int value) const;
  // (row, column), 0-based.  Throws if value is absent.
  std::pair<int, int> position(int value) const;
  int content(int value) const;
  bool is_standard() const;
  // Exchanges a and b wherever they occur.
  StandardTableau swapped(int a, int b) const;
  std::vector<int> flatten() const;
  std::string to_string() const;
};

// All standard tableaux of the given shape with distinct entries from
// {1..max_entry}, in generalized last-letter order: tableaux without
// max_entry first, then max_entry in each corner from top to bottom, each
// group ordered recursively with max_entry - 1.  For |shape| == max_entry
// this is the usual last-letter order.
std::vector<StandardTableau> ordered_tableaux(const Partition& shape, int max_entry);

// Ordered tableau basis with the content-coefficient action of the
// transpositions t_i = (i-1, i) and of the link [max_entry].
class TableauBasis {
 public:
  TableauBasis(Partition shape, int max_entry);

  const Partition& shape() const { return shape_; }
  int max_entry() const { return max_entry_; }
  int size() const { return static_cast<int>(tableaux_.size()); }
  const std::vector<StandardTableau>& tableaux() const { return tableaux_; }
  int index_of(const StandardTableau& t) const;  // -1 when absent

  SparseMatrix transposition_action(int i) const;
  SparseMatrix link_action() const;

 private:
  Partition shape_;
  int max_entry_;
  std::vector<StandardTableau> tableaux_;
  std::map<std::vector<int>, int> index_;
};

// Young's seminormal representation of S_k for lambda |- k.
class GroupRep {
 public:
  explicit GroupRep(Partition lambda);

  const Partition& label() const { return label_; }
  int degree() const { return degree_; }
  int dim() const { return dim_; }
  // rho(t_j), 2 <= j <= degree.
  const SparseMatrix& generator(int j) const { return generators_.at(static_cast<std::size_t>(j)); }
  const std::vector<StandardTableau>& basis() const { return basis_; }
  // rho(perm) by sparse left multiplication along the coset word.
  Matrix evaluate(std::span<const int> perm) const;

 private:
  Partition label_;
  int degree_;
  int dim_;
  std::vector<SparseMatrix> generators_;
  std::vector<StandardTableau> basis_;
};

GroupRep seminormal_rep(const Partition& lambda);

// Summands of the restriction to S_{k-1}, in the block order of the
// last-letter basis (corners top to bottom).
std::vector<Partition> restrict_sn(const Partition& lambda);

// Reps of one degree with their branching to the degree below.
class SymmetricLevel {
 public:
  struct Block {
    std::size_t child;  // index into the level below
    int offset;
    int dim;
  };

  explicit SymmetricLevel(int degree);

  int degree() const { return degree_; }
  const std::vector<Partition>& labels() const { return labels_; }
  const std::vector<GroupRep>& reps() const { return reps_; }
  const std::vector<Block>& branching(std::size_t label) const { return branching_[label]; }
  std::size_t index_of(const Partition& lambda) const;

 private:
  int degree_;
  std::vector<Partition> labels_;
  std::vector<GroupRep> reps_;
  std::vector<std::vector<Block>> branching_;
};

// Cached, immutable once built.  Degree 0 is treated like degree 1: the
// single element is the zero map and its only rep is 1-dimensional.
const SymmetricLevel& symmetric_level(int degree);

// Sum_s f(s) rho(s) over S_k for every lambda |- k, f in coset order.
// Clausen's recursion through T_i S_{k-1}.  For k <= 1 the transform is
// the single value itself and costs nothing.
std::vector<Matrix> sn_fft(std::span<const Complex> f, int k, OpCounter& ops,
                           Execution exec = Execution::serial);
// Direct evaluation of Sum_s f(s) rho(s).  Counts support * dim^2.
std::vector<Matrix> sn_naive_transform(std::span<const Complex> f, int k, OpCounter& ops);
// Inverse of sn_fft, f(s) = (1/k!) Sum d_lambda tr(F(lambda) rho(s^{-1})),
// computed by running the recursion backwards.
std::vector<Complex> sn_ifft(std::span<const Matrix> blocks, int k);

}  // namespace rookfft

#endif  // ROOKFFT_SYMMETRIC_GROUP_HPP_
