#include "rookfft/algebra.hpp"

#include <cmath>

#include "rookfft/errors.hpp"

namespace rookfft {

std::string to_string(Basis b) { return b == Basis::semigroup ? "semigroup" : "groupoid"; }

Basis basis_from_string(const std::string& s) {
  if (s == "semigroup") return Basis::semigroup;
  if (s == "groupoid") return Basis::groupoid;
  throw ParseError("unknown basis '" + s + "' (expected semigroup or groupoid)");
}

// --- AlgebraElement --------------------------------------------------------

AlgebraElement AlgebraElement::point_mass(const PartialPermutation& s, Basis basis, Complex c) {
  AlgebraElement e(s.n(), basis);
  e.add(s, c);
  return e;
}

AlgebraElement AlgebraElement::from_dense(int n, Basis basis, const std::vector<Complex>& values) {
  const auto& index = rook_index(n);
  if (values.size() != index.size()) {
    throw DimensionError("dense vector for R_" + std::to_string(n) + " needs " +
                         std::to_string(index.size()) + " entries");
  }
  AlgebraElement e(n, basis);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] != Complex(0.0)) e.terms_.emplace(index.element(i), values[i]);
  }
  e.normalize();
  return e;
}

Complex AlgebraElement::coeff(const PartialPermutation& s) const {
  const auto it = terms_.find(s);
  return it == terms_.end() ? Complex(0.0) : it->second;
}

void AlgebraElement::add(const PartialPermutation& s, Complex c) {
  if (s.n() != n_) {
    throw DimensionError("element of R_" + std::to_string(s.n()) + " added to an element of C R_" +
                         std::to_string(n_));
  }
  terms_[s] += c;
}

void AlgebraElement::normalize() {
  std::erase_if(terms_, [](const auto& kv) { return std::abs(kv.second) < 1e-14; });
}

std::vector<Complex> AlgebraElement::to_dense() const {
  const auto& index = rook_index(n_);
  std::vector<Complex> out(index.size());
  for (const auto& [s, c] : terms_) out[index.index_of(s)] = c;
  return out;
}

void AlgebraElement::check_compatible(const AlgebraElement& other) const {
  if (n_ != other.n_) throw DimensionError("elements of C R_" + std::to_string(n_) + " and C R_" + std::to_string(other.n_));
  if (basis_ != other.basis_) throw BasisError("mixed-basis arithmetic: " + to_string(basis_) + " and " + to_string(other.basis_));
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  check_compatible(other);
  for (const auto& [s, c] : other.terms_) terms_[s] += c;
  normalize();
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(Complex c) {
  for (auto& kv : terms_) kv.second *= c;
  normalize();
  return *this;
}

AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) {
  a += b;
  return a;
}

AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) {
  AlgebraElement neg = b;
  neg *= -1.0;
  a += neg;
  return a;
}

// --- convolution -----------------------------------------------------------

namespace {

void require(const AlgebraElement& f, const AlgebraElement& g, Basis basis) {
  if (f.n() != g.n()) throw DimensionError("convolution across different ambient sizes");
  if (f.basis() != basis || g.basis() != basis) {
    throw BasisError("convolution expects both operands in the " + to_string(basis) + " basis");
  }
}

}  // namespace

AlgebraElement convolve_semigroup(const AlgebraElement& f, const AlgebraElement& g) {
  require(f, g, Basis::semigroup);
  AlgebraElement out(f.n(), Basis::semigroup);
  for (const auto& [r, a] : f.terms()) {
    for (const auto& [t, b] : g.terms()) out.add(compose(r, t), a * b);
  }
  out.normalize();
  return out;
}

AlgebraElement convolve_groupoid(const AlgebraElement& f, const AlgebraElement& g) {
  require(f, g, Basis::groupoid);
  AlgebraElement out(f.n(), Basis::groupoid);
  for (const auto& [r, a] : f.terms()) {
    const auto dom = r.domain();
    for (const auto& [t, b] : g.terms()) {
      if (dom == t.range()) out.add(compose(r, t), a * b);
    }
  }
  out.normalize();
  return out;
}

// --- zeta / Moebius --------------------------------------------------------

namespace {

std::vector<Complex> gather_extensions(int n, const std::vector<Complex>& in, bool signed_sum,
                                       OpCounter& ops, Execution exec) {
  const auto& index = rook_index(n);
  if (in.size() != index.size()) throw DimensionError("dense vector has the wrong length for R_" + std::to_string(n));
  std::vector<Complex> out(in.size());
  const auto count = static_cast<std::ptrdiff_t>(in.size());
  std::uint64_t touched = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : touched) if (exec == Execution::parallel)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto& s = index.element(static_cast<std::size_t>(i));
    const int rk = s.rank();
    Complex acc = 0.0;
    for_each_extension(s, [&](const PartialPermutation& x) {
      const Complex v = in[index.index_of(x)];
      if (signed_sum && (x.rank() - rk) % 2 != 0) {
        acc -= v;
      } else {
        acc += v;
      }
      ++touched;
    });
    out[static_cast<std::size_t>(i)] = acc;
  }
  ops += touched;
  return out;
}

}  // namespace

std::vector<Complex> zeta_transform(int n, const std::vector<Complex>& f, OpCounter& ops, Execution exec) {
  return gather_extensions(n, f, false, ops, exec);
}

std::vector<Complex> mobius_transform(int n, const std::vector<Complex>& g, OpCounter& ops, Execution exec) {
  return gather_extensions(n, g, true, ops, exec);
}

AlgebraElement to_groupoid(const AlgebraElement& f, Execution exec) {
  if (f.basis() != Basis::semigroup) throw BasisError("to_groupoid expects a semigroup-basis element");
  OpCounter ops;
  return AlgebraElement::from_dense(f.n(), Basis::groupoid, zeta_transform(f.n(), f.to_dense(), ops, exec));
}

AlgebraElement to_semigroup(const AlgebraElement& g, Execution exec) {
  if (g.basis() != Basis::groupoid) throw BasisError("to_semigroup expects a groupoid-basis element");
  OpCounter ops;
  return AlgebraElement::from_dense(g.n(), Basis::semigroup, mobius_transform(g.n(), g.to_dense(), ops, exec));
}

AlgebraElement random_element(int n, Basis basis, std::mt19937_64& rng, double density) {
  const auto& index = rook_index(n);
  std::uniform_real_distribution<double> value(-1.0, 1.0);
  std::uniform_real_distribution<double> keep(0.0, 1.0);
  std::vector<Complex> dense(index.size());
  for (auto& c : dense) {
    if (keep(rng) < density) {
      const double re = value(rng);
      const double im = value(rng);
      c = Complex(re, im);
    }
  }
  return AlgebraElement::from_dense(n, basis, dense);
}

// --- inner products --------------------------------------------------------

namespace {

Complex inner(const AlgebraElement& f, const AlgebraElement& g, Basis basis, const char* name) {
  if (f.n() != g.n()) throw DimensionError(std::string(name) + " across different ambient sizes");
  if (f.basis() != basis || g.basis() != basis) {
    throw BasisError(std::string(name) + " is defined on " + to_string(basis) + "-basis coefficients");
  }
  Complex acc = 0.0;
  for (const auto& [s, c] : f.terms()) acc += c * std::conj(g.coeff(s));
  return acc;
}

}  // namespace

Complex inner1(const AlgebraElement& f, const AlgebraElement& g) {
  return inner(f, g, Basis::semigroup, "inner1");
}

Complex inner2(const AlgebraElement& f, const AlgebraElement& g) {
  return inner(f, g, Basis::groupoid, "inner2");
}

}  // namespace rookfft
