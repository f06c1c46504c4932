#ifndef ROOKFFT_ALGEBRA_HPP_
#define ROOKFFT_ALGEBRA_HPP_

#include <map>
#include <random>
#include <string>
#include <vector>

#include "rookfft/matrix.hpp"
#include "rookfft/parallel.hpp"
#include "rookfft/partial_permutation.hpp"

namespace rookfft {

// semigroup: coefficients of the elements s.  groupoid: coefficients of
// floor(s) = sum_{t <= s} mu(t, s) t.
enum class Basis { semigroup, groupoid };
std::string to_string(Basis b);
Basis basis_from_string(const std::string& s);

// Sparse element of the algebra C R_n, iterated in PartialPermutation order.
class AlgebraElement {
 public:
  using Terms = std::map<PartialPermutation, Complex>;

  AlgebraElement(int n, Basis basis) : n_(n), basis_(basis) {}

  static AlgebraElement point_mass(const PartialPermutation& s, Basis basis, Complex c = 1.0);
  // values[i] is the coefficient of RookIndex(n).element(i).
  static AlgebraElement from_dense(int n, Basis basis, const std::vector<Complex>& values);

  int n() const { return n_; }
  Basis basis() const { return basis_; }
  const Terms& terms() const { return terms_; }
  Complex coeff(const PartialPermutation& s) const;
  // Adds c to the coefficient of s.
  void add(const PartialPermutation& s, Complex c);
  // Drops coefficients with magnitude below 1e-14.
  void normalize();
  std::vector<Complex> to_dense() const;

  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator*=(Complex c);

 private:
  void check_compatible(const AlgebraElement& other) const;

  int n_;
  Basis basis_;
  Terms terms_;
};

AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b);
AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b);

// (f * g)(s) = sum_{rt = s} f(r) g(t).
AlgebraElement convolve_semigroup(const AlgebraElement& f, const AlgebraElement& g);
// floor(r) floor(t) = floor(rt) when dom r == ran t, else 0.
AlgebraElement convolve_groupoid(const AlgebraElement& f, const AlgebraElement& g);

// g(s) = sum_{x >= s} f(x).
AlgebraElement to_groupoid(const AlgebraElement& f, Execution exec = Execution::serial);
// f(t) = sum_{x >= t} mu(t, x) g(x).
AlgebraElement to_semigroup(const AlgebraElement& g, Execution exec = Execution::serial);

// Dense zeta and Moebius transforms over RookIndex(n) order.  Each output
// entry is a gather over the extensions of its element in a fixed order,
// so the parallel and serial paths agree bit for bit.  ops counts the
// nonzero entries of the zeta matrix that were touched.
std::vector<Complex> zeta_transform(int n, const std::vector<Complex>& f, OpCounter& ops,
                                    Execution exec = Execution::serial);
std::vector<Complex> mobius_transform(int n, const std::vector<Complex>& g, OpCounter& ops,
                                      Execution exec = Execution::serial);

// Every coefficient drawn independently: with probability density the real
// and imaginary parts are uniform on [-1, 1], otherwise the term is absent.
AlgebraElement random_element(int n, Basis basis, std::mt19937_64& rng, double density = 1.0);

// sum_s f(s) conj(g(s)); inner1 on semigroup coefficients, inner2 on
// groupoid coefficients.
Complex inner1(const AlgebraElement& f, const AlgebraElement& g);
Complex inner2(const AlgebraElement& f, const AlgebraElement& g);

}  // namespace rookfft

#endif  // ROOKFFT_ALGEBRA_HPP_
