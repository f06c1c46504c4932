#include "rookfft/fft.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "rookfft/combinatorics.hpp"
#include "rookfft/errors.hpp"

namespace rookfft {

const Matrix& FourierCoefficients::block(const IrrepLabel& label) const {
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw DimensionError("no block for label " + label.to_string());
  return blocks[static_cast<std::size_t>(it - labels.begin())];
}

Matrix& FourierCoefficients::block(const IrrepLabel& label) {
  return const_cast<Matrix&>(static_cast<const FourierCoefficients&>(*this).block(label));
}

FourierCoefficients zero_coefficients(int n, Family family) {
  FourierCoefficients F;
  F.n = n;
  F.family = family;
  F.labels = labels(n);
  for (const auto& l : F.labels) {
    const auto d = static_cast<Eigen::Index>(dim(l));
    F.blocks.push_back(Matrix::Zero(d, d));
  }
  return F;
}

// --- naive -----------------------------------------------------------------

FourierCoefficients naive_transform(const AlgebraElement& f, Family family) {
  const Basis expected = family == Family::stein ? Basis::groupoid : Basis::semigroup;
  if (f.basis() != expected) {
    throw BasisError("the " + to_string(family) + " family is paired with " + to_string(expected) +
                     "-basis input; convert first");
  }
  const int n = f.n();
  FourierCoefficients F = zero_coefficients(n, family);
  const auto support = static_cast<std::uint64_t>(f.terms().size());
  if (family == Family::halverson && n <= 5) {
    const auto& images = halverson_images(n);
    const auto& index = rook_index(n);
    for (std::size_t l = 0; l < F.labels.size(); ++l) {
      for (const auto& [s, c] : f.terms()) F.blocks[l] += c * images[l][index.index_of(s)];
    }
  } else {
    for (std::size_t l = 0; l < F.labels.size(); ++l) {
      if (family == Family::stein) {
        const SteinRep rep(F.labels[l]);
        for (const auto& [s, c] : f.terms()) F.blocks[l] += c * rep.eval_groupoid(s);
      } else {
        const HalversonRep rep(F.labels[l]);
        for (const auto& [s, c] : f.terms()) F.blocks[l] += c * rep.evaluate(s);
      }
    }
  }
  for (const auto& b : F.blocks) F.ops += support * static_cast<std::uint64_t>(b.size());
  return F;
}

// --- Stein block FFT -------------------------------------------------------

namespace {

// Index in labels(n) of the first label of weight k.
std::size_t first_label_of_weight(int k) {
  std::size_t offset = 0;
  for (int j = 0; j < k; ++j) offset += partitions_of(j).size();
  return offset;
}

FourierCoefficients stein_dense(int n, const std::vector<Complex>& g, OpCounter ops, Execution exec) {
  FourierCoefficients F = zero_coefficients(n, Family::stein);
  const auto& index = rook_index(n);
  for (int k = 0; k <= n; ++k) {
    const auto& sym = symmetric_level(k);
    const std::size_t first = first_label_of_weight(k);
    const auto c = static_cast<std::ptrdiff_t>(binomial(n, k));
    const std::size_t kf = factorial(k);
    std::vector<OpCounter> cell_ops(static_cast<std::size_t>(c * c));
#pragma omp parallel for schedule(dynamic) if (exec == Execution::parallel)
    for (std::ptrdiff_t cell = 0; cell < c * c; ++cell) {
      const auto a = static_cast<std::uint64_t>(cell / c);
      const auto b = static_cast<std::uint64_t>(cell % c);
      const std::span<const Complex> slice(g.data() + index.cell_offset(k, a, b), kf);
      const auto sub = sn_fft(slice, k, cell_ops[static_cast<std::size_t>(cell)]);
      // cells of one block are disjoint, so concurrent writes never overlap
      for (std::size_t l = 0; l < sub.size(); ++l) {
        const int d = sym.reps()[l].dim();
        F.blocks[first + l].block(static_cast<Eigen::Index>(a) * d, static_cast<Eigen::Index>(b) * d, d, d) = sub[l];
      }
    }
    for (const auto& o : cell_ops) ops += o.multiply_adds;
  }
  F.ops = ops;
  return F;
}

}  // namespace

FourierCoefficients stein_fft(const AlgebraElement& f, Execution exec) {
  if (f.basis() != Basis::groupoid) {
    throw BasisError("stein_fft expects groupoid-basis input; use stein_fft_semigroup for the semigroup basis");
  }
  return stein_dense(f.n(), f.to_dense(), OpCounter{}, exec);
}

FourierCoefficients stein_fft_semigroup(const AlgebraElement& f, Execution exec) {
  if (f.basis() != Basis::semigroup) throw BasisError("stein_fft_semigroup expects semigroup-basis input");
  OpCounter ops;
  const auto g = zeta_transform(f.n(), f.to_dense(), ops, exec);
  return stein_dense(f.n(), g, ops, exec);
}

// --- recursive FFT ---------------------------------------------------------

namespace {

// T_i at level m inside R_m: m -> i, j -> j+1 for i <= j < m.
PartialPermutation left_coset_rep(int m, int i) {
  std::vector<int> img(static_cast<std::size_t>(m));
  for (int x = 1; x <= m; ++x) {
    int y = x;
    if (x == m) {
      y = i;
    } else if (x >= i) {
      y = x + 1;
    }
    img[static_cast<std::size_t>(x - 1)] = y;
  }
  return PartialPermutation(m, std::move(img));
}

// For each of the 2m subproblems of level m, the index in R_m of the
// element feeding each s' in R_{m-1}, or -1 when the subproblem is zero
// there.  Order: left cosets T_1..T_m, the link [m], right cosets T^1..T^{m-1}.
struct SplitMaps {
  std::vector<std::vector<std::ptrdiff_t>> gather;
};

SplitMaps build_split_maps(int m) {
  const auto& below = rook_index(m - 1);
  const auto& here = rook_index(m);
  PartialPermutation link = PartialPermutation::identity(m);
  {
    std::vector<int> img(link.image().begin(), link.image().end());
    img[static_cast<std::size_t>(m - 1)] = PartialPermutation::kUndefined;
    link = PartialPermutation(m, std::move(img));
  }
  std::vector<PartialPermutation> hats;
  for (const auto& s : below.elements()) {
    std::vector<int> img(s.image().begin(), s.image().end());
    img.push_back(m);
    hats.emplace_back(m, std::move(img));
  }
  SplitMaps maps;
  for (int i = 1; i <= m; ++i) {
    const auto t = left_coset_rep(m, i);
    std::vector<std::ptrdiff_t> g;
    for (const auto& h : hats) g.push_back(static_cast<std::ptrdiff_t>(here.index_of(t * h)));
    maps.gather.push_back(std::move(g));
  }
  {
    std::vector<std::ptrdiff_t> g;
    for (const auto& h : hats) g.push_back(static_cast<std::ptrdiff_t>(here.index_of(link * h)));
    maps.gather.push_back(std::move(g));
  }
  for (int i = 1; i < m; ++i) {
    const auto t_inv = inverse(left_coset_rep(m, i));
    std::vector<std::ptrdiff_t> g;
    for (std::size_t j = 0; j < hats.size(); ++j) {
      if (below.element(j).defined_at(m - 1)) {
        g.push_back(-1);
      } else {
        g.push_back(static_cast<std::ptrdiff_t>(here.index_of(hats[j] * t_inv)));
      }
    }
    maps.gather.push_back(std::move(g));
  }
  return maps;
}

const SplitMaps& split_maps(int m) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<SplitMaps>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[m];
  if (!slot) slot = std::make_unique<SplitMaps>(build_split_maps(m));
  return *slot;
}

std::vector<Matrix> naive_halverson_dense(int m, const std::vector<Complex>& f, OpCounter& ops) {
  const auto& level = halverson_level(m);
  const auto& images = halverson_images(m);
  std::vector<Matrix> out;
  for (std::size_t l = 0; l < level.reps().size(); ++l) {
    const int d = level.reps()[l].dim();
    Matrix acc = Matrix::Zero(d, d);
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i] == Complex(0.0)) continue;
      acc += f[i] * images[l][i];
      ops += static_cast<std::uint64_t>(d) * static_cast<std::uint64_t>(d);
    }
    out.push_back(std::move(acc));
  }
  return out;
}

std::vector<Matrix> recursive_dense(int m, const std::vector<Complex>& f, OpCounter& ops, bool parallel,
                                    bool top) {
  if (m <= 2) {
    auto out = naive_halverson_dense(m, f, ops);
    if (top) ops.max_subproblem = 0;
    return out;
  }
  const auto& maps = split_maps(m);
  const std::size_t parts = maps.gather.size();
  std::vector<std::vector<Matrix>> subs(parts);
  std::vector<OpCounter> sub_ops(parts);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::ptrdiff_t p = 0; p < static_cast<std::ptrdiff_t>(parts); ++p) {
    const auto& gather = maps.gather[static_cast<std::size_t>(p)];
    std::vector<Complex> sub(gather.size());
    for (std::size_t j = 0; j < gather.size(); ++j) {
      if (gather[j] >= 0) sub[j] = f[static_cast<std::size_t>(gather[j])];
    }
    subs[static_cast<std::size_t>(p)] = recursive_dense(m - 1, sub, sub_ops[static_cast<std::size_t>(p)], false, false);
  }
  std::uint64_t max_sub = 0;
  for (const auto& o : sub_ops) {
    ops += o.multiply_adds;
    max_sub = std::max(max_sub, o.multiply_adds);
  }

  const auto& level = halverson_level(m);
  const std::size_t nlabels = level.labels().size();
  std::vector<Matrix> out(nlabels);
  std::vector<OpCounter> label_ops(nlabels);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::ptrdiff_t li = 0; li < static_cast<std::ptrdiff_t>(nlabels); ++li) {
    const auto l = static_cast<std::size_t>(li);
    const auto& rep = level.reps()[l];
    OpCounter& lops = label_ops[l];
    Matrix acc;
    for (std::size_t p = 0; p < parts; ++p) {
      Matrix a = Matrix::Zero(rep.dim(), rep.dim());
      for (const auto& b : level.branching(l)) a.block(b.offset, b.offset, b.dim, b.dim) = subs[p][b.child];
      const int pi = static_cast<int>(p);
      if (pi < m) {
        apply_left_coset(rep, m, pi + 1, a, lops);
      } else if (pi == m) {
        left_multiply(rep.link(m), a, lops);
      } else {
        apply_right_coset(rep, m, pi - m, a, lops);
      }
      if (p == 0) {
        acc = std::move(a);
      } else {
        accumulate(acc, a, lops);
      }
    }
    out[l] = std::move(acc);
  }
  std::uint64_t combine = 0;
  for (const auto& o : label_ops) combine += o.multiply_adds;
  ops += combine;
  if (top) {
    ops.top_level_combine = combine;
    ops.max_subproblem = max_sub;
  }
  return out;
}

}  // namespace

FourierCoefficients recursive_fft(const AlgebraElement& f, Execution exec) {
  if (f.basis() != Basis::semigroup) {
    throw BasisError("recursive_fft works in the semigroup basis; convert groupoid input first");
  }
  const int n = f.n();
  if (n > 6) throw DimensionError("recursive_fft supports n <= 6");
  FourierCoefficients F;
  F.n = n;
  F.family = Family::halverson;
  F.labels = labels(n);
  F.blocks = recursive_dense(n, f.to_dense(), F.ops, exec == Execution::parallel, true);
  return F;
}

// --- inversion -------------------------------------------------------------

namespace {

void check_complete(const FourierCoefficients& F) {
  const auto expected = labels(F.n);
  if (F.labels != expected || F.blocks.size() != expected.size()) {
    throw DimensionError("incomplete block set: R_" + std::to_string(F.n) + " needs " +
                         std::to_string(expected.size()) + " labelled blocks");
  }
  for (std::size_t l = 0; l < expected.size(); ++l) {
    const auto d = static_cast<Eigen::Index>(dim(expected[l]));
    if (F.blocks[l].rows() != d || F.blocks[l].cols() != d) {
      throw DimensionError("block " + expected[l].to_string() + " must be " + std::to_string(d) + "x" +
                           std::to_string(d));
    }
  }
}

}  // namespace

AlgebraElement fourier_invert(const FourierCoefficients& F) {
  check_complete(F);
  const int n = F.n;
  const auto& index = rook_index(n);
  std::vector<Complex> g(index.size());
  if (F.family == Family::stein) {
    for (int k = 0; k <= n; ++k) {
      const auto& sym = symmetric_level(k);
      const std::size_t first = first_label_of_weight(k);
      const auto c = binomial(n, k);
      for (std::uint64_t a = 0; a < c; ++a) {
        for (std::uint64_t b = 0; b < c; ++b) {
          std::vector<Matrix> cell;
          for (std::size_t l = 0; l < sym.labels().size(); ++l) {
            const int d = sym.reps()[l].dim();
            cell.push_back(F.blocks[first + l].block(static_cast<Eigen::Index>(a) * d,
                                                     static_cast<Eigen::Index>(b) * d, d, d));
          }
          const auto values = sn_ifft(cell, k);
          std::copy(values.begin(), values.end(), g.begin() + static_cast<std::ptrdiff_t>(index.cell_offset(k, a, b)));
        }
      }
    }
  } else {
    const auto& level = halverson_level(n);
    for (std::size_t i = 0; i < index.size(); ++i) {
      const auto& x = index.element(i);
      const int k = x.rank();
      const auto x_inv = inverse(x);
      Complex acc = 0.0;
      for (std::size_t l = 0; l < level.labels().size(); ++l) {
        if (level.labels()[l].k() != k) continue;
        const auto d = static_cast<double>(hook_length_dimension(level.labels()[l].lambda));
        acc += d * (F.blocks[l] * level.reps()[l].evaluate_groupoid(x_inv)).trace();
      }
      g[i] = acc / static_cast<double>(factorial(k));
    }
  }
  return AlgebraElement::from_dense(n, Basis::groupoid, g);
}

// --- block utilities -------------------------------------------------------

FourierCoefficients multiply_blocks(const FourierCoefficients& a, const FourierCoefficients& b) {
  if (a.n != b.n || a.family != b.family || a.labels != b.labels) {
    throw DimensionError("blockwise product needs matching labels and family");
  }
  FourierCoefficients out = a;
  out.ops = OpCounter{};
  for (std::size_t l = 0; l < a.blocks.size(); ++l) out.blocks[l] = a.blocks[l] * b.blocks[l];
  return out;
}

double max_block_difference(const FourierCoefficients& a, const FourierCoefficients& b) {
  if (a.labels != b.labels) throw DimensionError("comparing block sets with different labels");
  double worst = 0.0;
  for (std::size_t l = 0; l < a.blocks.size(); ++l) {
    if (a.blocks[l].rows() != b.blocks[l].rows()) throw DimensionError("block shapes differ");
    if (a.blocks[l].size() > 0) worst = std::max(worst, (a.blocks[l] - b.blocks[l]).cwiseAbs().maxCoeff());
  }
  return worst;
}

FactorizationType factorization_type(const PartialPermutation& s) {
  const int n = s.n();
  if (n < 1) throw DimensionError("R_0 has no factorization");
  if (s.defined_at(n)) return FactorizationType::left_coset;
  if (s.in_range(n)) return FactorizationType::right_coset;
  return FactorizationType::link;
}

// --- bounds ----------------------------------------------------------------

std::uint64_t stein_bound_times3(int n) {
  std::uint64_t total = 0;
  for (int k = 0; k <= n; ++k) {
    const std::uint64_t c = binomial(n, k);
    const auto uk = static_cast<std::uint64_t>(k);
    total += c * c * 2 * uk * (uk + 1) * (uk + 1) * factorial(k);
  }
  return total;
}

bool within_stein_bound(std::uint64_t ops, int n) { return 3 * ops <= stein_bound_times3(n); }

std::uint64_t zeta_bound(int n) { return (std::uint64_t{1} << n) * rook_size(n); }

std::uint64_t recursive_bound(int n) {
  if (n <= 2) return rook_size(n) * rook_size(n);
  const auto un = static_cast<std::uint64_t>(n);
  return 2 * un * recursive_bound(n - 1) + 2 * un * un * rook_size(n);
}

std::uint64_t zeta_ones_by_rows(int n) {
  std::uint64_t total = 0;
  for (int k = 0; k <= n; ++k) {
    const std::uint64_t c = binomial(n, k);
    total += c * c * factorial(k) * rook_size(n - k);
  }
  return total;
}

std::uint64_t zeta_ones_by_columns(int n) {
  std::uint64_t total = 0;
  for (int k = 0; k <= n; ++k) {
    const std::uint64_t c = binomial(n, k);
    total += c * c * factorial(k) * (std::uint64_t{1} << k);
  }
  return total;
}

}  // namespace rookfft
