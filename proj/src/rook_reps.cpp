#include "rookfft/rook_reps.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "rookfft/combinatorics.hpp"
#include "rookfft/errors.hpp"

namespace rookfft {

std::vector<IrrepLabel> labels(int n) {
  if (n < 0) throw DimensionError("ambient size must be >= 0");
  std::vector<IrrepLabel> out;
  for (int k = 0; k <= n; ++k) {
    for (auto& lambda : partitions_of(k)) out.push_back({std::move(lambda), n});
  }
  return out;
}

std::uint64_t dim(const IrrepLabel& label) {
  return binomial(label.n, label.k()) * hook_length_dimension(label.lambda);
}

std::string to_string(Family f) { return f == Family::stein ? "stein" : "halverson"; }

Family family_from_string(const std::string& s) {
  if (s == "stein") return Family::stein;
  if (s == "halverson") return Family::halverson;
  throw ParseError("unknown representation family '" + s + "'");
}

// --- Stein -----------------------------------------------------------------

SteinRep::SteinRep(IrrepLabel label)
    : label_(std::move(label)),
      cells_(static_cast<int>(binomial(label_.n, label_.k()))),
      base_(label_.lambda) {
  if (label_.k() > label_.n) throw DimensionError("label weight exceeds n");
}

Matrix SteinRep::eval_groupoid(const PartialPermutation& s) const {
  if (s.n() != label_.n) throw DimensionError("element and representation sizes differ");
  Matrix m = Matrix::Zero(dim(), dim());
  if (s.rank() != label_.k()) return m;
  const auto f = factorize(s);
  const int d = base_.dim();
  const auto row = static_cast<Eigen::Index>(f.ran.colex_rank()) * d;
  const auto col = static_cast<Eigen::Index>(f.dom.colex_rank()) * d;
  m.block(row, col, d, d) = base_.evaluate(f.y);
  return m;
}

Matrix SteinRep::eval_semigroup(const PartialPermutation& s) const {
  Matrix m = Matrix::Zero(dim(), dim());
  for_each_restriction(s, [&](const PartialPermutation& t) {
    if (t.rank() == label_.k()) m += eval_groupoid(t);
  });
  return m;
}

// --- Halverson -------------------------------------------------------------

namespace {

// T_i at level m: m -> i, j -> j+1 for i <= j < m.
int coset_forward(int x, int m, int i) {
  if (x == m) return i;
  if (x >= i && x < m) return x + 1;
  return x;
}

// T_i^{-1}: i -> m, j -> j-1 for i < j <= m.
int coset_backward(int x, int m, int i) {
  if (x == i) return m;
  if (x > i && x <= m) return x - 1;
  return x;
}

}  // namespace

std::vector<PeelStep> peel(const PartialPermutation& s) {
  const int n = s.n();
  std::vector<int> img(s.image().begin(), s.image().end());
  auto at = [&img](int x) -> int& { return img[static_cast<std::size_t>(x - 1)]; };
  std::vector<PeelStep> steps;
  for (int m = n; m >= 1; --m) {
    if (at(m) != PartialPermutation::kUndefined) {
      const int i = at(m);
      steps.push_back({PeelStep::Kind::left_coset, m, i});
      for (int& v : img) {
        if (v != PartialPermutation::kUndefined) v = coset_backward(v, m, i);
      }
      continue;
    }
    int pre = PartialPermutation::kUndefined;
    for (int x = 1; x < m; ++x) {
      if (at(x) == m) pre = x;
    }
    if (pre != PartialPermutation::kUndefined) {
      steps.push_back({PeelStep::Kind::right_coset, m, pre});
      std::vector<int> next(img.size());
      for (int x = 1; x <= n; ++x) next[static_cast<std::size_t>(x - 1)] = at(coset_forward(x, m, pre));
      img = std::move(next);
    } else {
      steps.push_back({PeelStep::Kind::link, m, m});
      at(m) = m;
    }
  }
  return steps;
}

void apply_left_coset(const HalversonRep& rep, int level, int i, Matrix& m, OpCounter& ops) {
  for (int j = level; j > i; --j) left_multiply(rep.generator(j), m, ops);
}

void apply_right_coset(const HalversonRep& rep, int level, int i, Matrix& m, OpCounter& ops) {
  for (int j = level; j > i; --j) right_multiply(m, rep.generator(j), ops);
}

HalversonRep::HalversonRep(IrrepLabel label)
    : label_(std::move(label)), basis_(label_.lambda, label_.n) {
  if (label_.k() > label_.n) throw DimensionError("label weight exceeds n");
  const int n = label_.n;
  generators_.resize(static_cast<std::size_t>(std::max(n + 1, 2)));
  for (int j = 2; j <= n; ++j) generators_[static_cast<std::size_t>(j)] = basis_.transposition_action(j);
  links_.resize(static_cast<std::size_t>(n + 1));
  if (n == 0) return;
  links_[static_cast<std::size_t>(n)] = basis_.link_action();
  OpCounter unused;
  for (int m = 1; m < n; ++m) {
    Matrix c = links_[static_cast<std::size_t>(n)].dense();
    apply_left_coset(*this, n, m, c, unused);
    apply_right_coset(*this, n, m, c, unused);
    links_[static_cast<std::size_t>(m)] = SparseMatrix::from_dense(c);
  }
}

Matrix HalversonRep::evaluate(const PartialPermutation& s) const {
  if (s.n() != label_.n) throw DimensionError("element and representation sizes differ");
  const auto steps = peel(s);
  Matrix m = Matrix::Identity(dim(), dim());
  OpCounter unused;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    switch (it->kind) {
      case PeelStep::Kind::left_coset:
        apply_left_coset(*this, it->level, it->i, m, unused);
        break;
      case PeelStep::Kind::right_coset:
        apply_right_coset(*this, it->level, it->i, m, unused);
        break;
      case PeelStep::Kind::link:
        left_multiply(link(it->level), m, unused);
        break;
    }
  }
  return m;
}

Matrix HalversonRep::evaluate_groupoid(const PartialPermutation& s) const {
  Matrix m = Matrix::Zero(dim(), dim());
  const int rk = s.rank();
  for_each_restriction(s, [&](const PartialPermutation& t) {
    if ((rk - t.rank()) % 2 == 0) {
      m += evaluate(t);
    } else {
      m -= evaluate(t);
    }
  });
  return m;
}

// --- branching -------------------------------------------------------------

std::vector<IrrepLabel> branch_rn(const IrrepLabel& label) {
  if (label.n < 1) throw DimensionError("R_0 has no restriction");
  std::vector<IrrepLabel> out;
  if (label.k() < label.n) out.push_back({label.lambda, label.n - 1});
  for (const auto& mu : restrict_sn(label.lambda)) out.push_back({mu, label.n - 1});
  return out;
}

HalversonLevel::HalversonLevel(int n) : n_(n), labels_(rookfft::labels(n)) {
  for (const auto& l : labels_) reps_.emplace_back(l);
  if (n_ == 0) {
    branching_.resize(labels_.size());
    return;
  }
  const auto below = rookfft::labels(n_ - 1);
  for (const auto& l : labels_) {
    std::vector<Block> blocks;
    int offset = 0;
    for (const auto& mu : branch_rn(l)) {
      const auto it = std::find(below.begin(), below.end(), mu);
      const int d = static_cast<int>(rookfft::dim(mu));
      blocks.push_back({static_cast<std::size_t>(it - below.begin()), offset, d});
      offset += d;
    }
    branching_.push_back(std::move(blocks));
  }
}

std::size_t HalversonLevel::index_of(const IrrepLabel& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) {
    throw DimensionError("no irreducible " + label.to_string() + " of R_" + std::to_string(n_));
  }
  return static_cast<std::size_t>(it - labels_.begin());
}

const HalversonLevel& halverson_level(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<HalversonLevel>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<HalversonLevel>(n);
  return *slot;
}

const std::vector<std::vector<Matrix>>& halverson_images(int n) {
  if (n < 0 || n > 5) throw DimensionError("image tables are kept for n <= 5 only");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<std::vector<std::vector<Matrix>>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (slot) return *slot;
  const auto& level = halverson_level(n);
  const RookIndex index(n);
  auto table = std::make_unique<std::vector<std::vector<Matrix>>>(level.reps().size());
  for (std::size_t l = 0; l < level.reps().size(); ++l) {
    auto& images = (*table)[l];
    images.resize(index.size());
    const auto& rep = level.reps()[l];
    const auto count = static_cast<std::ptrdiff_t>(index.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      images[static_cast<std::size_t>(i)] = rep.evaluate(index.element(static_cast<std::size_t>(i)));
    }
  }
  slot = std::move(table);
  return *slot;
}

}  // namespace rookfft
