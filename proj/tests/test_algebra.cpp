#include <doctest.h>

#include "oracles.hpp"
#include "rookfft/algebra.hpp"
#include "rookfft/combinatorics.hpp"
#include "rookfft/errors.hpp"
#include "rookfft/fft.hpp"

using namespace rookfft;

namespace {

PartialPermutation pp(int n, std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<std::pair<int, int>> v(pairs);
  return PartialPermutation::from_pairs(n, v);
}

}  // namespace

TEST_CASE("point masses multiply like the monoid") {
  const auto all = enumerate(2);
  for (const auto& r : all) {
    for (const auto& t : all) {
      const auto h = convolve_semigroup(AlgebraElement::point_mass(r, Basis::semigroup),
                                        AlgebraElement::point_mass(t, Basis::semigroup));
      CHECK(h.terms().size() == 1);
      CHECK(h.coeff(compose(r, t)) == Complex(1.0));
    }
  }
  std::mt19937_64 rng(3);
  const auto f = random_element(3, Basis::semigroup, rng);
  const auto e = AlgebraElement::point_mass(PartialPermutation::identity(3), Basis::semigroup);
  CHECK(oracle::max_coeff_difference(convolve_semigroup(e, f), f) < 1e-12);
}

TEST_CASE("semigroup convolution equals the all-pairs sum on R_3") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 3; ++trial) {
    const auto f = random_element(3, Basis::semigroup, rng, 0.5);
    const auto g = random_element(3, Basis::semigroup, rng, 0.5);
    CHECK(oracle::max_coeff_difference(convolve_semigroup(f, g), oracle::convolve_all_pairs(f, g)) < 1e-12);
  }
}

TEST_CASE("groupoid products") {
  const auto sigma = pp(4, {{1, 2}, {3, 1}});
  const auto pi = pp(4, {{1, 4}, {2, 3}});
  const auto fs = AlgebraElement::point_mass(sigma, Basis::groupoid);
  const auto fp = AlgebraElement::point_mass(pi, Basis::groupoid);
  CHECK(convolve_groupoid(fs, fp).terms().empty());
  const auto prod = convolve_groupoid(fp, fs);
  CHECK(prod.terms().size() == 1);
  CHECK(prod.coeff(pp(4, {{1, 3}, {3, 4}})) == Complex(1.0));
  const auto e = AlgebraElement::point_mass(PartialPermutation::idempotent_on(OrderedKSubset(4, {2, 3})), Basis::groupoid);
  CHECK(oracle::max_coeff_difference(convolve_groupoid(e, e), e) == 0.0);
  CHECK_THROWS_AS(convolve_groupoid(fs, AlgebraElement::point_mass(pi, Basis::semigroup)), BasisError);
}

TEST_CASE("groupoid basis elements multiply like their expansions") {
  // floor(r) floor(t) computed in the semigroup basis from the definition
  const auto all = enumerate(2);
  for (const auto& r : all) {
    for (const auto& t : all) {
      const auto lhs = convolve_semigroup(oracle::floor_as_semigroup(r), oracle::floor_as_semigroup(t));
      AlgebraElement rhs(2, Basis::semigroup);
      if (r.domain() == t.range()) rhs = oracle::floor_as_semigroup(compose(r, t));
      CHECK(oracle::max_coeff_difference(lhs, rhs) < 1e-12);
    }
  }
}

TEST_CASE("change of basis") {
  const auto id = PartialPermutation::identity(1);
  const auto zero = PartialPermutation::zero(1);
  AlgebraElement f(1, Basis::semigroup);
  f.add(id, 2.0);
  f.add(zero, 3.0);
  const auto g = to_groupoid(f);
  CHECK(g.coeff(id) == Complex(2.0));
  CHECK(g.coeff(zero) == Complex(5.0));

  const auto top = to_groupoid(AlgebraElement::point_mass(PartialPermutation::identity(3), Basis::semigroup));
  CHECK(top.terms().size() == 8);
  for (const auto& [s, c] : top.terms()) CHECK(c == Complex(1.0));

  const auto back = to_semigroup(AlgebraElement::point_mass(id, Basis::groupoid));
  CHECK(back.coeff(id) == Complex(1.0));
  CHECK(back.coeff(zero) == Complex(-1.0));
  CHECK(to_semigroup(AlgebraElement::point_mass(zero, Basis::groupoid)).coeff(zero) == Complex(1.0));

  for (int n = 0; n <= 4; ++n) {
    for (const auto& s : enumerate(n)) {
      const auto e = AlgebraElement::point_mass(s, Basis::semigroup);
      CHECK(oracle::max_coeff_difference(to_semigroup(to_groupoid(e)), e) < 1e-12);
      const auto b = AlgebraElement::point_mass(s, Basis::groupoid);
      CHECK(oracle::max_coeff_difference(to_groupoid(to_semigroup(b)), b) < 1e-12);
      // the groupoid element floor(s) is the Moebius expansion of its definition
      if (n <= 2) CHECK(oracle::max_coeff_difference(to_semigroup(b), oracle::floor_as_semigroup(s)) < 1e-12);
    }
  }
}

TEST_CASE("both convolutions compute the same product") {
  std::mt19937_64 rng(9);
  for (int n = 1; n <= 3; ++n) {
    const auto f = random_element(n, Basis::semigroup, rng);
    const auto g = random_element(n, Basis::semigroup, rng);
    const auto lhs = to_groupoid(convolve_semigroup(f, g));
    const auto rhs = convolve_groupoid(to_groupoid(f), to_groupoid(g));
    CHECK(oracle::max_coeff_difference(lhs, rhs) < 1e-10);
  }
}

TEST_CASE("convolution is associative") {
  std::mt19937_64 rng(13);
  for (int n = 1; n <= 3; ++n) {
    const auto f = random_element(n, Basis::semigroup, rng, 0.4);
    const auto g = random_element(n, Basis::semigroup, rng, 0.4);
    const auto h = random_element(n, Basis::semigroup, rng, 0.4);
    CHECK(oracle::max_coeff_difference(convolve_semigroup(convolve_semigroup(f, g), h),
                                       convolve_semigroup(f, convolve_semigroup(g, h))) < 1e-10);
    const auto fg = to_groupoid(f);
    const auto gg = to_groupoid(g);
    const auto hg = to_groupoid(h);
    CHECK(oracle::max_coeff_difference(convolve_groupoid(convolve_groupoid(fg, gg), hg),
                                       convolve_groupoid(fg, convolve_groupoid(gg, hg))) < 1e-10);
  }
}

TEST_CASE("zeta matrix counted by rows and by columns") {
  for (int n = 0; n <= 8; ++n) CHECK(zeta_ones_by_rows(n) == zeta_ones_by_columns(n));
  for (int n = 0; n <= 4; ++n) {
    OpCounter ops;
    zeta_transform(n, std::vector<Complex>(size(n)), ops);
    CHECK(ops.multiply_adds == zeta_ones_by_rows(n));
    CHECK(ops.multiply_adds <= zeta_bound(n));
  }
}

TEST_CASE("inner products") {
  const auto id = AlgebraElement::point_mass(PartialPermutation::identity(1), Basis::groupoid);
  const auto zero = AlgebraElement::point_mass(PartialPermutation::zero(1), Basis::groupoid);
  CHECK(inner1(to_semigroup(id), to_semigroup(zero)) == Complex(-1.0));
  CHECK(inner2(id, zero) == Complex(0.0));
  CHECK(inner2(id, id) == Complex(1.0));
  CHECK_THROWS_AS(inner1(id, zero), BasisError);
  CHECK_THROWS_AS(inner2(to_semigroup(id), zero), BasisError);
}

TEST_CASE("mixed-basis arithmetic is refused") {
  auto a = AlgebraElement::point_mass(PartialPermutation::identity(2), Basis::semigroup);
  const auto b = AlgebraElement::point_mass(PartialPermutation::identity(2), Basis::groupoid);
  CHECK_THROWS_AS(a += b, BasisError);
  CHECK_THROWS_AS(convolve_semigroup(a, b), BasisError);
  CHECK_THROWS_AS(to_semigroup(a), BasisError);
}

TEST_CASE("normalization drops tiny coefficients") {
  AlgebraElement a(2, Basis::semigroup);
  a.add(PartialPermutation::identity(2), 1e-15);
  a.add(PartialPermutation::zero(2), 1.0);
  a.normalize();
  CHECK(a.terms().size() == 1);
}
