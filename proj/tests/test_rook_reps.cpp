#include <doctest.h>

#include "oracles.hpp"
#include "rookfft/combinatorics.hpp"
#include "rookfft/rook_reps.hpp"

using namespace rookfft;

namespace {

PartialPermutation pp(int n, std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<std::pair<int, int>> v(pairs);
  return PartialPermutation::from_pairs(n, v);
}

IrrepLabel label(std::vector<int> parts, int n) { return {Partition(std::move(parts)), n}; }

// Rebuilds s from its peel steps by composing the factors directly.
PartialPermutation rebuild(int n, const std::vector<PeelStep>& steps) {
  auto coset = [n](int m, int i) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int x = 1; x <= n; ++x) {
      int y = x;
      if (x == m) {
        y = i;
      } else if (x >= i && x < m) {
        y = x + 1;
      }
      img[static_cast<std::size_t>(x - 1)] = y;
    }
    return PartialPermutation(n, img);
  };
  auto s = PartialPermutation::identity(n);
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    switch (it->kind) {
      case PeelStep::Kind::left_coset:
        s = compose(coset(it->level, it->i), s);
        break;
      case PeelStep::Kind::right_coset:
        s = compose(s, inverse(coset(it->level, it->i)));
        break;
      case PeelStep::Kind::link: {
        auto img = PartialPermutation::identity(n);
        std::vector<int> v(img.image().begin(), img.image().end());
        v[static_cast<std::size_t>(it->level - 1)] = 0;
        s = compose(PartialPermutation(n, v), s);
        break;
      }
    }
  }
  return s;
}

}  // namespace

TEST_CASE("label sets and dimensions") {
  const auto l2 = labels(2);
  REQUIRE(l2.size() == 4);
  std::vector<std::uint64_t> dims;
  for (const auto& l : l2) dims.push_back(dim(l));
  CHECK(dims == std::vector<std::uint64_t>{1, 2, 1, 1});
  CHECK(dim(label({}, 7)) == 1);
  CHECK(dim(label({2, 1, 1}, 5)) == 15);
  for (int n = 0; n <= 6; ++n) {
    std::uint64_t sum = 0;
    for (const auto& l : labels(n)) sum += dim(l) * dim(l);
    CHECK(sum == rook_size(n));
  }
}

TEST_CASE("generalized last-letter basis for (2,1,1), n = 5") {
  const HalversonRep rep(label({2, 1, 1}, 5));
  std::vector<std::string> got;
  for (const auto& t : rep.basis().tableaux()) got.push_back(t.to_string());
  const std::vector<std::string> expected{
      "1 4/2/3", "1 3/2/4", "1 2/3/4",                          // no 5
      "1 5/2/3", "1 5/2/4", "1 5/3/4", "2 5/3/4",               // 5 in the top corner
      "1 3/2/5", "1 2/3/5", "1 4/2/5", "1 4/3/5", "2 4/3/5",    // 5 in the bottom corner
      "1 2/4/5", "1 3/4/5", "2 3/4/5"};
  CHECK(got == expected);
}

TEST_CASE("small Halverson representations") {
  const HalversonRep one(label({1}, 1));
  CHECK(one.dim() == 1);
  CHECK(one.link(1).dense()(0, 0) == Complex(0.0));
  const HalversonRep sign(label({1, 1}, 2));
  CHECK(sign.generator(2).dense()(0, 0) == Complex(-1.0));
  const HalversonRep empty(label({}, 3));
  for (const auto& s : enumerate(3)) CHECK(oracle::max_abs(empty.evaluate(s) - Matrix::Identity(1, 1)) < 1e-12);
}

TEST_CASE("peeling reproduces every element") {
  for (int n = 0; n <= 4; ++n) {
    for (const auto& s : enumerate(n)) CHECK(rebuild(n, peel(s)) == s);
  }
}

TEST_CASE("Halverson representations are homomorphisms, n <= 3") {
  for (int n = 0; n <= 3; ++n) {
    const auto all = enumerate(n);
    for (const auto& l : labels(n)) {
      const HalversonRep rep(l);
      for (const auto& a : all) {
        const Matrix ra = rep.evaluate(a);
        for (const auto& b : all) CHECK(oracle::max_abs(rep.evaluate(compose(a, b)) - ra * rep.evaluate(b)) < 1e-9);
      }
    }
  }
}

TEST_CASE("Stein representations are homomorphisms on the semigroup basis, n <= 3") {
  for (int n = 0; n <= 3; ++n) {
    const auto all = enumerate(n);
    for (const auto& l : labels(n)) {
      const SteinRep rep(l);
      for (const auto& a : all) {
        const Matrix ra = rep.eval_semigroup(a);
        for (const auto& b : all) {
          CHECK(oracle::max_abs(rep.eval_semigroup(compose(a, b)) - ra * rep.eval_semigroup(b)) < 1e-9);
        }
      }
    }
  }
}

TEST_CASE("Stein images of groupoid basis elements") {
  const SteinRep r1(label({1}, 1));
  CHECK(r1.eval_groupoid(PartialPermutation::identity(1))(0, 0) == Complex(1.0));
  CHECK(r1.eval_groupoid(PartialPermutation::zero(1))(0, 0) == Complex(0.0));
  const SteinRep r0(label({}, 1));
  CHECK(r0.eval_groupoid(PartialPermutation::zero(1))(0, 0) == Complex(1.0));
  CHECK(r0.eval_groupoid(PartialPermutation::identity(1))(0, 0) == Complex(0.0));
  const SteinRep r2(label({1}, 2));
  Matrix expected = Matrix::Zero(2, 2);
  expected(0, 1) = 1.0;  // range {1} is row cell 0, domain {2} is column cell 1
  CHECK(oracle::max_abs(r2.eval_groupoid(pp(2, {{2, 1}})) - expected) < 1e-12);
}

TEST_CASE("the two families have the same characters, n <= 3") {
  for (int n = 0; n <= 3; ++n) {
    for (const auto& l : labels(n)) {
      const SteinRep stein(l);
      const HalversonRep halverson(l);
      CHECK(stein.dim() == halverson.dim());
      for (const auto& s : enumerate(n)) {
        CHECK(std::abs(stein.eval_semigroup(s).trace() - halverson.evaluate(s).trace()) < 1e-9);
      }
    }
  }
}

TEST_CASE("Schur sparsity of generator images, n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& rep : halverson_level(n).reps()) {
      for (int j = 2; j <= n; ++j) {
        CHECK(rep.generator(j).max_row_nonzeros() <= 2);
        CHECK(rep.generator(j).max_col_nonzeros() <= 2);
      }
      CHECK(rep.link(n).max_row_nonzeros() <= 1);
    }
  }
}

TEST_CASE("branching order") {
  CHECK(branch_rn(label({1}, 2)) == std::vector<IrrepLabel>{label({1}, 1), label({}, 1)});
  CHECK(branch_rn(label({3}, 3)) == std::vector<IrrepLabel>{label({2}, 2)});
  CHECK(branch_rn(label({2, 1, 1}, 5)) ==
        std::vector<IrrepLabel>{label({2, 1, 1}, 4), label({1, 1, 1}, 4), label({2, 1}, 4)});
  std::vector<int> sizes;
  for (const auto& b : halverson_level(5).branching(halverson_level(5).index_of(label({2, 1, 1}, 5)))) {
    sizes.push_back(b.dim);
  }
  CHECK(sizes == std::vector<int>{3, 4, 8});
}

TEST_CASE("restriction to R_{n-1} is exactly block diagonal, n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    const auto& level = halverson_level(n);
    const auto& below = halverson_level(n - 1);
    for (std::size_t l = 0; l < level.labels().size(); ++l) {
      const auto& rep = level.reps()[l];
      for (const auto& s : enumerate(n - 1)) {
        std::vector<int> img(s.image().begin(), s.image().end());
        img.push_back(n);
        const Matrix big = rep.evaluate(PartialPermutation(n, img));
        Matrix expected = Matrix::Zero(rep.dim(), rep.dim());
        for (const auto& b : level.branching(l)) {
          expected.block(b.offset, b.offset, b.dim, b.dim) = below.reps()[b.child].evaluate(s);
        }
        CHECK(oracle::max_abs(big - expected) < 1e-12);
      }
    }
  }
}
