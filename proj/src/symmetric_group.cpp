#include "rookfft/symmetric_group.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>

#include "rookfft/combinatorics.hpp"
#include "rookfft/errors.hpp"

namespace rookfft {

// --- Partition -------------------------------------------------------------

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw DimensionError("partition parts must be nonnegative");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw DimensionError("partition must be weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::row_length(int row) const {
  return row < length() ? parts_[static_cast<std::size_t>(row)] : 0;
}

std::vector<int> Partition::corner_rows() const {
  std::vector<int> rows;
  for (int r = 0; r < length(); ++r) {
    if (row_length(r) > row_length(r + 1)) rows.push_back(r);
  }
  return rows;
}

Partition Partition::remove_corner(int row) const {
  if (row >= length() || row_length(row) <= row_length(row + 1)) {
    throw DimensionError("row " + std::to_string(row) + " has no corner in " + to_string());
  }
  std::vector<int> p = parts_;
  --p[static_cast<std::size_t>(row)];
  return Partition(std::move(p));
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int k) {
  if (k < 0) throw DimensionError("partitions of a negative integer");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(k, k, cur, out);
  return out;
}

std::uint64_t hook_length_dimension(const Partition& lambda) {
  const int k = lambda.weight();
  // k! / prod hooks, accumulated as a rational to stay exact
  std::uint64_t hooks = 1;
  for (int r = 0; r < lambda.length(); ++r) {
    for (int c = 0; c < lambda.row_length(r); ++c) {
      int below = 0;
      while (lambda.row_length(r + below + 1) > c) ++below;
      const int arm = lambda.row_length(r) - c - 1;
      hooks *= static_cast<std::uint64_t>(arm + below + 1);
    }
  }
  return factorial(k) / hooks;
}

// --- StandardTableau -------------------------------------------------------

bool StandardTableau::contains(int value) const {
  for (const auto& row : rows) {
    if (std::find(row.begin(), row.end(), value) != row.end()) return true;
  }
  return false;
}

std::pair<int, int> StandardTableau::position(int value) const {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (rows[r][c] == value) return {static_cast<int>(r), static_cast<int>(c)};
    }
  }
  throw DimensionError("value " + std::to_string(value) + " not in tableau");
}

int StandardTableau::content(int value) const {
  const auto [r, c] = position(value);
  return c - r;
}

bool StandardTableau::is_standard() const {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c > 0 && rows[r][c - 1] >= rows[r][c]) return false;
      if (r > 0 && rows[r - 1][c] >= rows[r][c]) return false;
    }
  }
  return true;
}

StandardTableau StandardTableau::swapped(int a, int b) const {
  StandardTableau t = *this;
  for (auto& row : t.rows) {
    for (int& v : row) {
      if (v == a) {
        v = b;
      } else if (v == b) {
        v = a;
      }
    }
  }
  return t;
}

std::vector<int> StandardTableau::flatten() const {
  std::vector<int> flat;
  for (const auto& row : rows) flat.insert(flat.end(), row.begin(), row.end());
  return flat;
}

std::string StandardTableau::to_string() const {
  std::string s;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r > 0) s += '/';
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c > 0) s += ' ';
      s += std::to_string(rows[r][c]);
    }
  }
  return s;
}

std::vector<StandardTableau> ordered_tableaux(const Partition& shape, int max_entry) {
  if (shape.weight() > max_entry) return {};
  if (max_entry == 0) {
    return {StandardTableau{shape, {}}};
  }
  std::vector<StandardTableau> out = ordered_tableaux(shape, max_entry - 1);
  for (int row : shape.corner_rows()) {
    for (auto t : ordered_tableaux(shape.remove_corner(row), max_entry - 1)) {
      t.shape = shape;
      t.rows.resize(static_cast<std::size_t>(shape.length()));
      t.rows[static_cast<std::size_t>(row)].push_back(max_entry);
      out.push_back(std::move(t));
    }
  }
  return out;
}

// --- TableauBasis ----------------------------------------------------------

TableauBasis::TableauBasis(Partition shape, int max_entry)
    : shape_(std::move(shape)), max_entry_(max_entry), tableaux_(ordered_tableaux(shape_, max_entry)) {
  for (std::size_t i = 0; i < tableaux_.size(); ++i) {
    index_.emplace(tableaux_[i].flatten(), static_cast<int>(i));
  }
}

int TableauBasis::index_of(const StandardTableau& t) const {
  const auto it = index_.find(t.flatten());
  return it == index_.end() ? -1 : it->second;
}

SparseMatrix TableauBasis::transposition_action(int i) const {
  if (i < 2 || i > max_entry_) throw DimensionError("t_i needs 2 <= i <= n");
  SparseMatrix m(size());
  for (int col = 0; col < size(); ++col) {
    const auto& t = tableaux_[static_cast<std::size_t>(col)];
    const bool has_lo = t.contains(i - 1);
    const bool has_hi = t.contains(i);
    if (has_lo && has_hi) {
      const double inv = 1.0 / static_cast<double>(t.content(i) - t.content(i - 1));
      m.add(col, col, inv);
      const auto swapped = t.swapped(i - 1, i);
      if (swapped.is_standard()) m.add(index_of(swapped), col, 1.0 + inv);
    } else if (has_lo || has_hi) {
      m.add(index_of(t.swapped(i - 1, i)), col, 1.0);
    } else {
      m.add(col, col, 1.0);
    }
  }
  return m;
}

SparseMatrix TableauBasis::link_action() const {
  SparseMatrix m(size());
  for (int col = 0; col < size(); ++col) {
    if (!tableaux_[static_cast<std::size_t>(col)].contains(max_entry_)) m.add(col, col, 1.0);
  }
  return m;
}

// --- GroupRep --------------------------------------------------------------

GroupRep::GroupRep(Partition lambda)
    : label_(std::move(lambda)), degree_(label_.weight()) {
  TableauBasis basis(label_, degree_);
  dim_ = basis.size();
  basis_ = basis.tableaux();
  generators_.resize(static_cast<std::size_t>(std::max(degree_ + 1, 2)));
  for (int j = 2; j <= degree_; ++j) {
    generators_[static_cast<std::size_t>(j)] = basis.transposition_action(j);
  }
}

Matrix GroupRep::evaluate(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != degree_) throw DimensionError("permutation degree mismatch");
  // coset digits sigma = T_{i_k} T_{i_{k-1}} ... T_{i_2}
  std::vector<int> p(perm.begin(), perm.end());
  std::vector<int> digit(static_cast<std::size_t>(degree_) + 1, 0);
  for (int m = degree_; m >= 2; --m) {
    const int i = p.back();
    digit[static_cast<std::size_t>(m)] = i;
    p.pop_back();
    for (int& v : p) {
      if (v > i) --v;
    }
  }
  Matrix result = Matrix::Identity(dim_, dim_);
  OpCounter unused;
  for (int m = 2; m <= degree_; ++m) {
    for (int j = m; j > digit[static_cast<std::size_t>(m)]; --j) {
      left_multiply(generator(j), result, unused);
    }
  }
  return result;
}

GroupRep seminormal_rep(const Partition& lambda) { return GroupRep(lambda); }

std::vector<Partition> restrict_sn(const Partition& lambda) {
  std::vector<Partition> out;
  for (int row : lambda.corner_rows()) out.push_back(lambda.remove_corner(row));
  return out;
}

// --- SymmetricLevel --------------------------------------------------------

SymmetricLevel::SymmetricLevel(int degree) : degree_(degree), labels_(partitions_of(degree)) {
  for (const auto& lambda : labels_) reps_.emplace_back(lambda);
  if (degree_ == 0) {
    branching_.resize(labels_.size());
    return;
  }
  const auto below = partitions_of(degree_ - 1);
  for (const auto& lambda : labels_) {
    std::vector<Block> blocks;
    int offset = 0;
    for (const auto& mu : restrict_sn(lambda)) {
      const auto it = std::find(below.begin(), below.end(), mu);
      const int d = static_cast<int>(hook_length_dimension(mu));
      blocks.push_back({static_cast<std::size_t>(it - below.begin()), offset, d});
      offset += d;
    }
    branching_.push_back(std::move(blocks));
  }
}

std::size_t SymmetricLevel::index_of(const Partition& lambda) const {
  const auto it = std::find(labels_.begin(), labels_.end(), lambda);
  if (it == labels_.end()) throw DimensionError("no irreducible " + lambda.to_string() + " of S_" + std::to_string(degree_));
  return static_cast<std::size_t>(it - labels_.begin());
}

const SymmetricLevel& symmetric_level(int degree) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<SymmetricLevel>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[degree];
  if (!slot) slot = std::make_unique<SymmetricLevel>(degree);
  return *slot;
}

// --- transforms on S_k -----------------------------------------------------

namespace {

Matrix assemble(const std::vector<SymmetricLevel::Block>& blocks, const std::vector<Matrix>& sub, int dim) {
  Matrix a = Matrix::Zero(dim, dim);
  for (const auto& b : blocks) a.block(b.offset, b.offset, b.dim, b.dim) = sub[b.child];
  return a;
}

void check_input_size(std::span<const Complex> f, int k) {
  if (k < 0) throw DimensionError("negative degree");
  if (f.size() != factorial(k)) {
    throw DimensionError("function on S_" + std::to_string(k) + " needs " +
                         std::to_string(factorial(k)) + " values");
  }
}

std::vector<Matrix> sn_fft_rec(std::span<const Complex> f, int k, OpCounter& ops, bool parallel) {
  // S_0 and S_1 have one element with image [1]: a copy, no arithmetic
  if (k <= 1) return {Matrix::Constant(1, 1, f[0])};
  const auto& level = symmetric_level(k);
  const std::size_t sub_size = factorial(k - 1);
  std::vector<std::vector<Matrix>> subs(static_cast<std::size_t>(k));
  std::vector<OpCounter> sub_ops(static_cast<std::size_t>(k));
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int i = 0; i < k; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    subs[ui] = sn_fft_rec(f.subspan(ui * sub_size, sub_size), k - 1, sub_ops[ui], false);
  }
  for (const auto& o : sub_ops) ops += o.multiply_adds;

  std::vector<Matrix> out;
  out.reserve(level.labels().size());
  for (std::size_t l = 0; l < level.labels().size(); ++l) {
    const auto& rep = level.reps()[l];
    Matrix acc;
    for (int i = 1; i <= k; ++i) {
      Matrix a = assemble(level.branching(l), subs[static_cast<std::size_t>(i - 1)], rep.dim());
      for (int j = k; j > i; --j) left_multiply(rep.generator(j), a, ops);
      if (i == 1) {
        acc = std::move(a);
      } else {
        accumulate(acc, a, ops);
      }
    }
    out.push_back(std::move(acc));
  }
  return out;
}

}  // namespace

std::vector<Matrix> sn_fft(std::span<const Complex> f, int k, OpCounter& ops, Execution exec) {
  check_input_size(f, k);
  return sn_fft_rec(f, k, ops, exec == Execution::parallel);
}

std::vector<Matrix> sn_naive_transform(std::span<const Complex> f, int k, OpCounter& ops) {
  check_input_size(f, k);
  const auto& level = symmetric_level(k);
  std::vector<Matrix> out;
  for (const auto& rep : level.reps()) {
    Matrix acc = Matrix::Zero(rep.dim(), rep.dim());
    for (std::size_t idx = 0; idx < f.size(); ++idx) {
      if (f[idx] == Complex(0.0)) continue;
      acc += f[idx] * rep.evaluate(perm_from_coset_index(k, idx));
      ops += static_cast<std::uint64_t>(rep.dim()) * static_cast<std::uint64_t>(rep.dim());
    }
    out.push_back(std::move(acc));
  }
  return out;
}

std::vector<Complex> sn_ifft(std::span<const Matrix> blocks, int k) {
  if (k < 0) throw DimensionError("negative degree");
  const auto& level = symmetric_level(k);
  if (blocks.size() != level.labels().size()) {
    throw DimensionError("S_" + std::to_string(k) + " needs " + std::to_string(level.labels().size()) +
                         " blocks, got " + std::to_string(blocks.size()));
  }
  for (std::size_t l = 0; l < blocks.size(); ++l) {
    const int d = level.reps()[l].dim();
    if (blocks[l].rows() != d || blocks[l].cols() != d) {
      throw DimensionError("block for " + level.labels()[l].to_string() + " must be " +
                           std::to_string(d) + "x" + std::to_string(d));
    }
  }
  if (k <= 1) return {blocks[0](0, 0)};

  const auto& below = symmetric_level(k - 1);
  const std::size_t sub_size = factorial(k - 1);
  std::vector<Complex> f(factorial(k));
  OpCounter unused;
  for (int i = 1; i <= k; ++i) {
    std::vector<Matrix> h;
    for (const auto& rep : below.reps()) h.push_back(Matrix::Zero(rep.dim(), rep.dim()));
    for (std::size_t l = 0; l < blocks.size(); ++l) {
      const auto& rep = level.reps()[l];
      Matrix g = blocks[l];
      // rho(T_i^{-1}) = rho(t_k) ... rho(t_{i+1})
      for (int j = i + 1; j <= k; ++j) left_multiply(rep.generator(j), g, unused);
      for (const auto& b : level.branching(l)) {
        const double w = static_cast<double>(rep.dim()) / (static_cast<double>(k) * b.dim);
        h[b.child] += w * g.block(b.offset, b.offset, b.dim, b.dim);
      }
    }
    const auto sub = sn_ifft(h, k - 1);
    std::copy(sub.begin(), sub.end(), f.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(i - 1) * sub_size));
  }
  return f;
}

}  // namespace rookfft
