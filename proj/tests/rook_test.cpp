#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <stdexcept>
#include <vector>

#include "mahonian/insertion.hpp"
#include "mahonian/perm.hpp"
#include "mahonian/qanalog.hpp"
#include "mahonian/rook.hpp"
#include "mahonian/starred.hpp"

using namespace mahonian;

namespace {
Permutation pm(std::vector<int> v) { return Permutation(std::move(v)); }

const DescentStarred kRunning{pm({7, 3, 2, 6, 4, 1, 5}), {1, 2, 5}};

Rook fr(int col, int row) { return Rook{col, row, RookKind::file}; }
Rook nr(int col, int row) { return Rook{col, row, RookKind::na}; }

Laurent dist_unc(int n, int k, CancelRule rule,
                 void (*enumerate)(int, int,
                                   const std::function<void(const RookPlacement&)>&)) {
  Laurent d;
  enumerate(n, k, [&](const RookPlacement& p) {
    d += Laurent::monomial(1, static_cast<int>(unc(p, rule)));
  });
  return d;
}
}  // namespace

TEST_CASE("boards") {
  CHECK(Board::staircase_b(4).heights() == std::vector<int>{0, 1, 2, 3});
  CHECK(Board::staircase_st(4).heights() == std::vector<int>{1, 2, 3, 4});
  CHECK(Board::staircase_st(4).height(3) == 3);
  CHECK(Board::staircase_st(4).max_height() == 4);
  CHECK(Board({2, 0, 1}).max_height() == 2);
  CHECK_THROWS_AS(Board({1, -1}), std::invalid_argument);
  CHECK_THROWS_AS(Board::staircase_st(2).height(3), std::out_of_range);
}

TEST_CASE("placement validation") {
  const Board st3 = Board::staircase_st(3);
  CHECK_NOTHROW(RookPlacement(st3, {fr(1, 1), nr(2, 2), fr(3, 2)}));
  // rooks are stored sorted by column even if given out of order
  RookPlacement p(st3, {fr(3, 2), fr(1, 1)});
  CHECK(p.rooks() == std::vector<Rook>{fr(1, 1), fr(3, 2)});
  CHECK(p.rook_count() == 2);
  CHECK(p.na_count() == 0);
  CHECK(p.rook_in_col(2) == nullptr);
  REQUIRE(p.rook_in_col(3) != nullptr);
  CHECK(*p.rook_in_col(3) == fr(3, 2));

  CHECK_THROWS_AS(RookPlacement(st3, {fr(1, 2)}), std::invalid_argument);
  CHECK_THROWS_AS(RookPlacement(st3, {fr(2, 1), fr(2, 2)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(RookPlacement(st3, {nr(2, 2), nr(3, 2)}),
                  std::invalid_argument);
  // file rooks may share rows with anything
  CHECK_NOTHROW(RookPlacement(st3, {fr(1, 1), fr(2, 1), nr(3, 1)}));
  CHECK_THROWS_AS(RookPlacement(st3, {fr(4, 1)}), std::invalid_argument);
}

TEST_CASE("self-consistency under a rule") {
  // a non-attacking rook sweeps its row rightward; standing there is illegal
  const Board st2 = Board::staircase_st(2);
  RookPlacement bad(st2, {nr(1, 1), fr(2, 1)});
  CHECK_FALSE(placement_self_consistent(bad, CancelRule::classic));
  RookPlacement ok(st2, {nr(1, 1), fr(2, 2)});
  CHECK(placement_self_consistent(ok, CancelRule::classic));
  // the mixed rule also takes the bottom cell of the rook's own column
  RookPlacement bottom(st2, {nr(2, 2)});
  CHECK(cancellation(bottom, CancelRule::mixed).count({2, 1}) == 1);
  CHECK(cancellation(bottom, CancelRule::classic).count({2, 1}) == 0);
  CHECK(cancellation(bottom, CancelRule::wachs_white).count({2, 2}) == 1);
}

TEST_CASE("permutations as full file placements") {
  const RookPlacement enc = alpha_inverse(pm({5, 2, 1, 4, 3}));
  CHECK(enc.board() == Board::staircase_st(5));
  CHECK(enc.rooks() ==
        std::vector<Rook>{fr(1, 1), fr(2, 2), fr(3, 1), fr(4, 2), fr(5, 5)});
  CHECK(alpha(enc) == pm({5, 2, 1, 4, 3}));
  CHECK(beta(enc) == pm({2, 4, 1, 5, 3}));  // = psi of the alpha word
  CHECK(unc(enc, CancelRule::classic) == inv(pm({5, 2, 1, 4, 3})));
  CHECK(unc_prime(enc) == unc(enc, CancelRule::classic));

  // rows all 1 means every letter is appended: the identity both ways
  const Board st4 = Board::staircase_st(4);
  RookPlacement ones(st4, {fr(1, 1), fr(2, 1), fr(3, 1), fr(4, 1)});
  CHECK(alpha(ones) == Permutation::identity(4));
  CHECK(beta(ones) == Permutation::identity(4));

  for (int n = 0; n <= 5; ++n) {
    std::set<Permutation> a_img, b_img;
    long cnt = 0;
    enumerate_file(Board::staircase_st(n), [&](const RookPlacement& p) {
      ++cnt;
      const Permutation a = alpha(p);
      const Permutation b = beta(p);
      CHECK(inv(a) == unc(p, CancelRule::classic));
      CHECK(maj(b) == unc(p, CancelRule::classic));
      CHECK(alpha_inverse(a) == p);
      CHECK(beta_inverse(b) == p);
      CHECK(b == psi(a));
      a_img.insert(a);
      b_img.insert(b);
    });
    long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    CHECK(cnt == fact);
    CHECK(static_cast<long>(a_img.size()) == fact);
    CHECK(static_cast<long>(b_img.size()) == fact);
  }
}

TEST_CASE("starred words as mixed placements") {
  const RookPlacement g = gamma(kRunning);
  CHECK(g.board() == Board::staircase_st(7));
  CHECK(g.rooks() == std::vector<Rook>{fr(1, 1), fr(2, 2), nr(3, 3), nr(4, 2),
                                       fr(5, 1), fr(6, 5), nr(7, 7)});
  CHECK(unc(g, CancelRule::mixed) == op_inv(kRunning));
  CHECK(gamma_inverse(g) == kRunning);
  CHECK(placement_self_consistent(g, CancelRule::mixed));
  CHECK(osp_of_mixed(g) == parse_osp("23|67|14|5"));

  const RookPlacement d = delta(kRunning);
  CHECK(unc(d, CancelRule::mixed) == op_maj(kRunning));
  CHECK(delta_inverse(d) == kRunning);

  for (int n = 1; n <= 5; ++n) {
    for (int k = 0; k <= n - 1; ++k) {
      std::set<std::vector<Rook>> g_img, d_img;
      enumerate_starred_descent(n, k, [&](const DescentStarred& s) {
        const RookPlacement gp = gamma(s);
        CHECK(gp.na_count() == k);
        CHECK(gp.rook_count() == n);
        CHECK(unc(gp, CancelRule::mixed) == op_inv(s));
        CHECK(gamma_inverse(gp) == s);
        g_img.insert(gp.rooks());

        const RookPlacement dp = delta(s);
        CHECK(unc(dp, CancelRule::mixed) == op_maj(s));
        CHECK(delta_inverse(dp) == s);
        CHECK(dp == gamma(psi_osp_inverse(s)));
        d_img.insert(dp.rooks());
      });
      // both hit every element of the mixed family exactly once
      long cnt = 0;
      enumerate_mixed(n, k, [&](const RookPlacement& p) {
        ++cnt;
        CHECK(g_img.count(p.rooks()) == 1);
        CHECK(d_img.count(p.rooks()) == 1);
      });
      CHECK(static_cast<long>(g_img.size()) == cnt);
      CHECK(static_cast<long>(d_img.size()) == cnt);
    }
  }
}

TEST_CASE("mixed enumeration order and counts") {
  std::vector<std::vector<Rook>> got;
  enumerate_mixed(3, 1, [&](const RookPlacement& p) { got.push_back(p.rooks()); });
  const std::vector<std::vector<Rook>> want = {
      {fr(1, 1), fr(2, 1), nr(3, 2)}, {fr(1, 1), fr(2, 1), nr(3, 3)},
      {fr(1, 1), fr(2, 2), nr(3, 2)}, {fr(1, 1), fr(2, 2), nr(3, 3)},
      {fr(1, 1), nr(2, 2), fr(3, 1)}, {fr(1, 1), nr(2, 2), fr(3, 3)}};
  CHECK(got == want);

  const std::vector<long> m4 = {24, 36, 14, 1, 0};
  for (int k = 0; k <= 4; ++k) {
    long cnt = 0;
    enumerate_mixed(4, k, [&](const RookPlacement&) { ++cnt; });
    CHECK(cnt == m4[static_cast<size_t>(k)]);
  }
  const std::vector<long> m4p = {24, 60, 50, 15, 1};
  for (int k = 0; k <= 4; ++k) {
    long cnt = 0;
    enumerate_mixed_prime(4, k, [&](const RookPlacement&) { ++cnt; });
    CHECK(cnt == m4p[static_cast<size_t>(k)]);
  }

  CHECK(dist_unc(3, 1, CancelRule::mixed, enumerate_mixed) ==
        2 + 3 * Laurent::monomial(1, 1) + Laurent::monomial(1, 2));
}

TEST_CASE("non-attacking placements count Stirling numbers") {
  for (int n = 0; n <= 6; ++n) {
    for (int k = 0; k <= n; ++k) {
      long cnt = 0;
      enumerate_na(Board::staircase_b(n), n - k,
                   [&](const RookPlacement& p) {
                     CHECK(p.na_count() == n - k);
                     ++cnt;
                   });
      CHECK(Laurent(cnt) == stirling_q(n, k).at_one(0));
    }
  }
}

TEST_CASE("staircase recursion for the mixed distribution") {
  for (int n = 2; n <= 6; ++n) {
    for (int k = 1; k < n; ++k) {
      CHECK(dist_unc(n, k, CancelRule::mixed, enumerate_mixed) ==
            q_int(n - k) * (dist_unc(n - 1, k - 1, CancelRule::mixed,
                                     enumerate_mixed) +
                            dist_unc(n - 1, k, CancelRule::mixed,
                                     enumerate_mixed)));
    }
  }
  // the primed family splits the factor across the two summands
  for (int n = 2; n <= 5; ++n) {
    for (int k = 1; k < n; ++k) {
      CHECK(dist_unc(n, k, CancelRule::classic, enumerate_mixed_prime) ==
            q_int(n - k + 1) * dist_unc(n - 1, k - 1, CancelRule::classic,
                                        enumerate_mixed_prime) +
                q_int(n - k) * dist_unc(n - 1, k, CancelRule::classic,
                                        enumerate_mixed_prime));
    }
  }
}

TEST_CASE("embedded staircase columns") {
  // shift a non-attacking placement up one row onto the taller staircase:
  // the empty columns expose 1, 2, ..., n-k uncanceled cells left to right
  for (int n = 1; n <= 5; ++n) {
    for (int k = 0; k <= n; ++k) {
      enumerate_na(Board::staircase_b(n), k, [&](const RookPlacement& p) {
        std::vector<Rook> shifted;
        for (const Rook& r : p.rooks()) {
          shifted.push_back(nr(r.col, r.row + 1));
        }
        RookPlacement q(Board::staircase_st(n), shifted);
        const CellSet gone = cancellation(q, CancelRule::classic);
        int expect = 0;
        for (int c = 1; c <= n; ++c) {
          if (q.rook_in_col(c) != nullptr) continue;
          int open = 0;
          for (int r = 1; r <= c; ++r) {
            if (gone.count({c, r}) == 0) ++open;
          }
          CHECK(open == ++expect);
        }
        CHECK(expect == n - k);
      });
    }
  }
}

TEST_CASE("pq weights") {
  const RookPlacement g = gamma(kRunning);
  const auto [below, above] = unc_below_above(g, CancelRule::mixed);
  CHECK(below == 7);
  CHECK(w_pq(g, CancelRule::mixed) ==
        Laurent::monomial(1, static_cast<int>(below),
                          static_cast<int>(above)));
  CHECK(w_pq(g, CancelRule::mixed).at_one(1) ==
        Laurent::monomial(1, 7));

  // summed over the small mixed family the weights give a p,q-product
  Laurent sum;
  enumerate_mixed(3, 1, [&](const RookPlacement& p) {
    sum += w_pq(p, CancelRule::wachs_white_mixed);
  });
  CHECK(sum == pq_fact(2) * stirling_pq(3, 2));

  // the capital weight absorbs the canceled cells into the p exponent
  enumerate_mixed(3, 1, [&](const RookPlacement& p) {
    const auto [b, a] = unc_below_above(p, CancelRule::wachs_white_mixed);
    const long canceled =
        static_cast<long>(cancellation(p, CancelRule::wachs_white_mixed).size());
    CHECK(W_pq(p, CancelRule::wachs_white_mixed) ==
          Laurent::monomial(1, static_cast<int>(b),
                            static_cast<int>(a + canceled)));
  });
}

TEST_CASE("render and JSON") {
  const RookPlacement g = gamma(kRunning);
  const std::string want =
      "            X\n"
      "          .\n"
      "        . O\n"
      "      . .\n"
      "    X . . . .\n"
      "  O   X . . .\n"
      "O   . . O   .";
  CHECK(render(g, CancelRule::mixed) == want);

  const nlohmann::json expect = nlohmann::json::parse(R"({
    "heights": [1, 2, 3, 4, 5, 6, 7],
    "rooks": [
      {"col": 1, "kind": "file", "row": 1},
      {"col": 2, "kind": "file", "row": 2},
      {"col": 3, "kind": "na", "row": 3},
      {"col": 4, "kind": "na", "row": 2},
      {"col": 5, "kind": "file", "row": 1},
      {"col": 6, "kind": "file", "row": 5},
      {"col": 7, "kind": "na", "row": 7}
    ]
  })");
  CHECK(to_json(g) == expect);
  CHECK(placement_from_json(expect) == g);
  CHECK_THROWS_AS(
      placement_from_json(nlohmann::json::parse(R"({"heights": [1]})")),
      std::invalid_argument);
  CHECK_THROWS_AS(placement_from_json(nlohmann::json::parse(
                      R"({"heights": [1], "rooks": [{"col": 1, "kind":
                      "file", "row": 2}]})")),
                  std::invalid_argument);
}
