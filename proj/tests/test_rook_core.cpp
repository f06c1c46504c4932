#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "rookfft/combinatorics.hpp"
#include "rookfft/errors.hpp"
#include "rookfft/partial_permutation.hpp"

using namespace rookfft;

namespace {

PartialPermutation pp(int n, std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<std::pair<int, int>> v(pairs);
  return PartialPermutation::from_pairs(n, v);
}

}  // namespace

TEST_CASE("composition follows g(f(x))") {
  const auto pi = pp(4, {{1, 4}, {2, 3}});
  const auto sigma = pp(4, {{1, 2}, {3, 1}});
  CHECK(compose(pi, sigma) == pp(4, {{1, 3}, {3, 4}}));
  CHECK(compose(sigma, pi) == pp(4, {{2, 1}}));
  CHECK(compose(PartialPermutation::identity(4), sigma) == sigma);
  CHECK_THROWS_AS(compose(pi, PartialPermutation::identity(3)), DimensionError);
}

TEST_CASE("inverse, rank and idempotents") {
  const auto s = pp(4, {{2, 1}, {4, 4}});
  CHECK(inverse(s) == pp(4, {{1, 2}, {4, 4}}));
  CHECK(inverse(PartialPermutation::identity(3)) == PartialPermutation::identity(3));
  CHECK(inverse(PartialPermutation::zero(3)) == PartialPermutation::zero(3));
  CHECK(s.rank() == 2);
  CHECK(PartialPermutation::identity(5).rank() == 5);
  const auto e = PartialPermutation::idempotent_on(OrderedKSubset(4, {1, 3}));
  CHECK(compose(e, e) == e);
}

TEST_CASE("inverse semigroup law holds on R_n, n <= 4") {
  for (int n = 0; n <= 4; ++n) {
    for (const auto& s : enumerate(n)) {
      const auto g = inverse(s);
      CHECK(compose(compose(s, g), s) == s);
      CHECK(compose(compose(g, s), g) == g);
      CHECK(g.domain() == s.range());
    }
  }
}

TEST_CASE("inverses are unique in R_3") {
  const auto all = enumerate(3);
  for (const auto& s : all) {
    int found = 0;
    for (const auto& g : all) {
      if (compose(compose(s, g), s) == s && compose(compose(g, s), g) == g) ++found;
    }
    CHECK(found == 1);
  }
}

TEST_CASE("natural order matches the idempotent definition") {
  const auto s = pp(4, {{2, 1}, {4, 4}});
  CHECK(leq(pp(4, {{2, 1}}), s));
  CHECK_FALSE(leq(pp(4, {{2, 3}}), s));
  for (int n = 0; n <= 3; ++n) {
    const auto all = enumerate(n);
    for (const auto& a : all) {
      CHECK(leq(PartialPermutation::zero(n), a));
      CHECK(leq(a, a));
      for (const auto& b : all) {
        CHECK(leq(a, b) == oracle::leq_by_idempotents(a, b));
        if (leq(a, b) && leq(b, a)) CHECK(a == b);
      }
    }
  }
}

TEST_CASE("Moebius function") {
  CHECK(mobius(PartialPermutation::zero(2), PartialPermutation::identity(2)) == 1);
  const auto all = enumerate(3);
  for (const auto& s : all) {
    CHECK(mobius(s, s) == 1);
    for (const auto& t : all) {
      if (!leq(s, t) || s == t) continue;
      int sum = 0;
      for (const auto& x : all) {
        if (leq(s, x) && leq(x, t)) sum += mobius(s, x);
      }
      CHECK(sum == 0);
    }
  }
  // against the recursive definition on R_2
  const auto r2 = enumerate(2);
  for (const auto& s : r2) {
    for (const auto& t : r2) CHECK(mobius(s, t) == oracle::mobius_recursive(r2, s, t));
  }
}

TEST_CASE("counting formulas") {
  const std::uint64_t expected[] = {1, 2, 7, 34, 209, 1546, 13327};
  for (int n = 0; n <= 6; ++n) CHECK(size(n) == expected[n]);
  for (int n = 3; n <= 8; ++n) CHECK(size(n) == size_recursive(n));
  for (int n = 0; n <= 5; ++n) {
    const auto all = enumerate(n);
    CHECK(all.size() == size(n));
    CHECK(std::set<PartialPermutation>(all.begin(), all.end()).size() == all.size());
  }
}

TEST_CASE("cycle-link notation") {
  CHECK(parse_cycle_link("[1,3,2](4)", 4) == pp(4, {{1, 3}, {3, 2}, {4, 4}}));
  CHECK(parse_cycle_link("(1)(2)(3)[4]", 4) == pp(4, {{1, 1}, {2, 2}, {3, 3}}));
  CHECK_THROWS_AS(parse_cycle_link("", 2), ParseError);
  CHECK_THROWS_AS(parse_cycle_link("(1,1)", 2), ParseError);
  CHECK_THROWS_AS(parse_cycle_link("(1,3)(2)", 2), ParseError);
  CHECK(print_cycle_link(pp(4, {{1, 3}, {3, 2}, {4, 4}})) == "(4)[1,3,2]");
  for (int n = 0; n <= 4; ++n) {
    for (const auto& s : enumerate(n)) {
      const auto text = print_cycle_link(s);
      CHECK(parse_cycle_link(text, n) == s);
      CHECK(print_cycle_link(parse_cycle_link(text, n)) == text);
    }
  }
}

TEST_CASE("flat notation") {
  const auto s = pp(4, {{2, 1}, {4, 4}});
  CHECK(print_flat(s) == "2->1;4->4");
  CHECK(parse_flat("2->1;4->4", 4) == s);
  CHECK(parse_flat("", 3) == PartialPermutation::zero(3));
  CHECK_THROWS_AS(parse_flat("2->1;3->1", 4), ParseError);
  CHECK_THROWS_AS(parse_flat("2->7", 4), ParseError);
}

TEST_CASE("order preserving maps and canonical factorization") {
  CHECK(order_preserving(OrderedKSubset(5, {2, 5}), OrderedKSubset(5, {1, 3})) == pp(5, {{2, 1}, {5, 3}}));
  CHECK_THROWS_AS(order_preserving(OrderedKSubset(5, {2}), OrderedKSubset(5, {1, 3})), DimensionError);

  const auto id = factorize(PartialPermutation::identity(3));
  CHECK(id.ran == OrderedKSubset(3, {1, 2, 3}));
  CHECK(id.dom == OrderedKSubset(3, {1, 2, 3}));
  CHECK(id.y == std::vector<int>{1, 2, 3});

  const auto f = factorize(pp(4, {{2, 1}, {4, 4}}));
  CHECK(f.ran == OrderedKSubset(4, {1, 4}));
  CHECK(f.dom == OrderedKSubset(4, {2, 4}));
  CHECK(f.y == std::vector<int>{1, 2});

  for (int n = 0; n <= 4; ++n) {
    for (const auto& s : enumerate(n)) CHECK(reassemble(factorize(s)) == s);
  }
}

TEST_CASE("RookIndex puts each (rank, range, domain) cell in one slice") {
  for (int n = 0; n <= 4; ++n) {
    const RookIndex index(n);
    for (std::size_t i = 0; i < index.size(); ++i) {
      const auto& s = index.element(i);
      CHECK(index.index_of(s) == i);
      const auto f = factorize(s);
      const auto start = index.cell_offset(s.rank(), f.ran.colex_rank(), f.dom.colex_rank());
      CHECK(i >= start);
      CHECK(i < start + factorial(s.rank()));
    }
  }
}

TEST_CASE("coset index orders S_m by sigma(m)") {
  for (int m = 0; m <= 5; ++m) {
    for (std::uint64_t i = 0; i < factorial(m); ++i) {
      const auto p = perm_from_coset_index(m, i);
      CHECK(coset_index(p) == i);
      if (m >= 1) CHECK(static_cast<std::uint64_t>(p.back() - 1) == i / factorial(m - 1));
    }
  }
}

TEST_CASE("order ideals and filters") {
  const auto s = pp(3, {{1, 2}, {3, 3}});
  int restrictions = 0;
  for_each_restriction(s, [&](const PartialPermutation& t) {
    CHECK(leq(t, s));
    ++restrictions;
  });
  CHECK(restrictions == 4);
  int extensions = 0;
  for_each_extension(s, [&](const PartialPermutation& x) {
    CHECK(leq(s, x));
    ++extensions;
  });
  CHECK(extensions == 2);  // 2 undefined or 2 -> 1
}
