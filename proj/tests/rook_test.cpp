#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>

#include "cellrook/enumerate.hpp"
#include "cellrook/errors.hpp"
#include "cellrook/rook.hpp"
#include "helpers.hpp"

using namespace cellrook;
using test::C;
using test::shape;

namespace {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

CellCollection square(int n) {
  std::string grid;
  for (int y = 0; y < n; ++y) grid += std::string(n, '#') + "\n";
  return shape(grid);
}

// Multiset of occupied run ids; invariant under switches.
std::pair<std::set<int>, std::set<int>> run_sets(const CellCollection& P,
                                                 const RookConfig& f) {
  std::set<int> h, v;
  for (const Cell& c : f) {
    h.insert(P.hrun_of(c));
    v.insert(P.vrun_of(c));
  }
  return {h, v};
}

}  // namespace

TEST_CASE("attacking respects runs, not coordinates") {
  const CellCollection bar = shape("###\n");
  CHECK(attacking(bar, C(1, 1), C(3, 1)));

  const CellCollection gap = shape("#.#\n");
  CHECK_FALSE(attacking(gap, C(1, 1), C(3, 1)));

  const CellCollection sq = square(2);
  CHECK_FALSE(attacking(sq, C(1, 1), C(2, 2)));
  CHECK(attacking(sq, C(1, 1), C(2, 1)));

  CHECK_THROWS_AS(attacking(sq, C(1, 1), C(5, 5)), CellNotInCollectionError);
}

TEST_CASE("rook number of squares, bars and the plus pentomino") {
  for (int n = 1; n <= 5; ++n) CHECK(rook_number(square(n)) == n);
  CHECK(rook_number(shape("####\n")) == 1);
  const CellCollection plus = shape(".#.\n###\n.#.\n");
  CHECK(rook_number(plus) == 2);
  CHECK(test::brute_force_rook_number(plus) == 2);
}

TEST_CASE("rook number agrees with brute force on every small shape") {
  for (const Universe u : {Universe::Polyomino, Universe::Collection}) {
    enumerate_shapes(6, u, [](CellCollection&& P) {
      CHECK(rook_number(P) == test::brute_force_rook_number(P));
    });
  }
}

TEST_CASE("configs stream in lexicographic order") {
  const CellCollection sq = square(2);
  const auto two = configs(sq, 2);
  REQUIRE(two.size() == 2);
  CHECK(two[0] == RookConfig{{1, 1}, {2, 2}});
  CHECK(two[1] == RookConfig{{1, 2}, {2, 1}});

  CHECK(configs(sq, 0) == std::vector<RookConfig>{{}});
  CHECK(configs(square(3), 1).size() == 9);

  CHECK_THROWS_AS(configs(sq, 3), KOutOfRangeError);
  CHECK_THROWS_AS(configs(sq, -1), KOutOfRangeError);

  const auto all = configs(square(3), 2);
  CHECK(std::is_sorted(all.begin(), all.end()));
}

TEST_CASE("switch neighbors of the spec configurations") {
  const CellCollection sq = square(2);
  CHECK(switch_neighbors(sq, {{1, 1}, {2, 2}}) ==
        std::vector<RookConfig>{{{1, 2}, {2, 1}}});

  const CellCollection ell = shape("#.\n##\n");
  CHECK(switch_neighbors(ell, {{2, 1}, {1, 2}}).empty());

  CHECK(switch_neighbors(sq, {{1, 1}}).empty());
  CHECK(switch_neighbors(sq, {}).empty());

  CHECK_THROWS_AS(switch_neighbors(sq, {{1, 1}, {2, 1}}),
                  InvalidConfigError);
}

TEST_CASE("switches are symmetric and preserve size, validity and runs") {
  std::mt19937 rng(7);
  enumerate_shapes(5, Universe::Collection, [&rng](CellCollection&& P) {
    const int d = rook_number(P);
    for (int k = 1; k <= d; ++k) {
      const auto all = configs(P, k);
      std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
      const RookConfig& f = all[pick(rng)];
      for (const RookConfig& g : switch_neighbors(P, f)) {
        CHECK(g.size() == f.size());
        CHECK(is_valid_config(P, g));
        CHECK(run_sets(P, g) == run_sets(P, f));
        const auto back = switch_neighbors(P, g);
        CHECK(std::find(back.begin(), back.end(), f) != back.end());
      }
    }
  });
}

TEST_CASE("class counts of rectangles follow the product formula") {
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n <= 4; ++n) {
      std::string grid;
      for (int y = 0; y < n; ++y) grid += std::string(m, '#') + "\n";
      const CellCollection rect = shape(grid);
      const int d = rook_number(rect);
      CHECK(d == std::min(m, n));
      for (int k = 0; k <= d; ++k)
        CHECK(class_count(rect, k) == binomial(m, k) * binomial(n, k));
    }
  }
}

TEST_CASE("class count edge cases") {
  const CellCollection sq = square(2);
  CHECK(class_count(sq, 2) == 1);
  enumerate_shapes(5, Universe::Polyomino, [](CellCollection&& P) {
    CHECK(class_count(P, 1) == static_cast<std::uint64_t>(P.rank()));
    CHECK(class_count(P, 0) == 1);
  });
  CHECK_THROWS_AS(class_count(sq, 5), KOutOfRangeError);
}

TEST_CASE("switching polynomials of small squares") {
  CHECK(switching_polynomial(square(2)).coeffs ==
        std::vector<std::uint64_t>{1, 4, 1});
  CHECK(switching_polynomial(square(3)).coeffs ==
        std::vector<std::uint64_t>{1, 9, 9, 1});
}

TEST_CASE("polynomial coefficient invariants across the corpus") {
  enumerate_shapes(6, Universe::Polyomino, [](CellCollection&& P) {
    const SwitchingPolynomial poly = switching_polynomial(P);
    CHECK(poly.coeffs[0] == 1);
    CHECK(poly.coeffs[1] == static_cast<std::uint64_t>(P.rank()));
    for (const std::uint64_t c : poly.coeffs) CHECK(c >= 1);
    CHECK(poly.degree() == rook_number(P));
  });
}

TEST_CASE("polynomial rendering") {
  CHECK(to_string(SwitchingPolynomial{{1, 4, 1}}) == "1 + 4t + t^2");
  CHECK(to_string(SwitchingPolynomial{{1, 8, 19, 14, 3}}) ==
        "1 + 8t + 19t^2 + 14t^3 + 3t^4");
  CHECK(to_string(SwitchingPolynomial{{1}}) == "1");
  CHECK(to_string(SwitchingPolynomial{{1, 1}}) == "1 + t");
}

TEST_CASE("canonical form inside a rectangle") {
  const CellRect r2{{1, 1}, {2, 2}};
  CHECK(canonical_in_rectangle(r2, {{1, 2}, {2, 1}}) ==
        RookConfig{{1, 1}, {2, 2}});
  CHECK(canonical_in_rectangle(r2, {{1, 1}, {2, 2}}) ==
        RookConfig{{1, 1}, {2, 2}});

  const CellRect r3{{1, 1}, {3, 3}};
  CHECK(canonical_in_rectangle(r3, {{1, 3}, {2, 1}, {3, 2}}) ==
        RookConfig{{1, 1}, {2, 2}, {3, 3}});

  CHECK_THROWS_AS(canonical_in_rectangle(r2, {{5, 5}}), InvalidConfigError);
}

TEST_CASE("canonicalize stays within the switch class and is idempotent") {
  std::mt19937 rng(11);
  enumerate_shapes(5, Universe::Polyomino, [&rng](CellCollection&& P) {
    const int d = rook_number(P);
    for (int k = 1; k <= d; ++k) {
      const auto all = configs(P, k);
      std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
      const RookConfig f = all[pick(rng)];
      const RookConfig canon = canonicalize(P, f);
      CHECK(is_valid_config(P, canon));
      CHECK(canonicalize(P, canon) == canon);
      const auto closure = test::switch_closure(P, f);
      CHECK(closure.count(canon) == 1);
    }
  });

  const CellCollection sq = square(3);
  CHECK(canonicalize(sq, {{1, 3}, {2, 1}, {3, 2}}) ==
        RookConfig{{1, 1}, {2, 2}, {3, 3}});
  CHECK_THROWS_AS(canonicalize(sq, {{1, 1}, {1, 2}}), InvalidConfigError);
}

TEST_CASE("square complement fixed example and small boards") {
  // 8x8 board: {A12, A64, A76} -> {A21, A33, A45, A57, A88}.
  const RookConfig f{{1, 2}, {6, 4}, {7, 6}};
  const RookConfig expected{{2, 1}, {3, 3}, {4, 5}, {5, 7}, {8, 8}};
  CHECK(square_complement(8, f) == expected);

  CHECK(square_complement(2, {}) == RookConfig{{1, 1}, {2, 2}});
  CHECK(square_complement(2, {{1, 1}, {2, 2}}) == RookConfig{});

  CHECK_THROWS_AS(square_complement(2, {{1, 2}, {2, 1}}), NotCanonicalError);
  CHECK_THROWS_AS(square_complement(2, {{3, 1}}), NotSquareBoardError);
}

TEST_CASE("square complement is an involution on canonical configs") {
  for (int n = 1; n <= 4; ++n) {
    const CellCollection sq = square(n);
    for (int k = 0; k <= n; ++k) {
      CHECK(class_count(sq, k) == class_count(sq, n - k));
      for (const RookConfig& f : configs(sq, k)) {
        RookConfig xs = f;
        const bool canonical = [&] {
          for (std::size_t i = 1; i < xs.size(); ++i)
            if (xs[i].y <= xs[i - 1].y) return false;
          return true;
        }();
        if (!canonical) continue;
        CHECK(square_complement(n, square_complement(n, f)) == f);
      }
    }
  }
}

TEST_CASE("top configuration of domino-stable shapes") {
  const CellCollection sq = square(3);
  CHECK(top_config(sq) == RookConfig{{1, 1}, {2, 2}, {3, 3}});

  // Two 1x1 stable squares: the L-tromino's residue cells carry the rooks.
  const CellCollection ell = shape("#.\n##\n");
  CHECK(top_config(ell) == RookConfig{{1, 2}, {2, 1}});

  CHECK_THROWS_AS(top_config(shape("##\n")), NotDominoStableError);

  enumerate_shapes(6, Universe::Polyomino, [](CellCollection&& P) {
    if (!is_domino_stable(P).stable) return;
    const RookConfig T = top_config(P);
    CHECK(static_cast<int>(T.size()) == rook_number(P));
    CHECK(is_valid_config(P, T));
  });
}
