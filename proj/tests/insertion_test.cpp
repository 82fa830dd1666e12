#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "mahonian/insertion.hpp"
#include "mahonian/perm.hpp"
#include "mahonian/starred.hpp"

using namespace mahonian;

namespace {
Permutation pm(std::vector<int> v) { return Permutation(std::move(v)); }

const DescentStarred kRunning{pm({7, 3, 2, 6, 4, 1, 5}), {1, 2, 5}};
const DescentStarred kSection42{pm({5, 2, 1, 4, 7, 6, 3}), {2, 5, 6}};

// Check that a labeling is total: exactly `count` gaps carry 0..count-1
// bijectively and the rest carry -1.
void check_total(const Labeling& lab, int n) {
  REQUIRE(static_cast<int>(lab.label_of_gap.size()) == n + 1);
  std::set<int> seen;
  for (int g = 0; g <= n; ++g) {
    const int l = lab.label_of_gap[static_cast<size_t>(g)];
    if (l == -1) continue;
    CHECK(0 <= l);
    CHECK(l < lab.count);
    CHECK(seen.insert(l).second);
    CHECK(lab.gap_of_label(l) == g);
  }
  CHECK(static_cast<int>(seen.size()) == lab.count);
}
}  // namespace

TEST_CASE("plain gap labelings") {
  const Permutation p = pm({1, 4, 3, 5, 2});
  CHECK(inv_labeling(p).label_of_gap == std::vector<int>{5, 4, 3, 2, 1, 0});
  CHECK(maj_labeling(p).label_of_gap == std::vector<int>{3, 4, 2, 5, 1, 0});
  CHECK(inv_labeling(p).count == 6);
  CHECK(maj_labeling(p).count == 6);
  CHECK(maj_labeling(p).gap_of_label(0) == 5);
  CHECK(maj_labeling(p).gap_of_label(5) == 3);
  CHECK_THROWS_AS(maj_labeling(p).gap_of_label(6), std::out_of_range);
  CHECK_THROWS_AS(maj_labeling(p).gap_of_label(-1), std::out_of_range);

  // the empty word has a single gap, labeled 0 by both schemes
  CHECK(inv_labeling(Permutation()).label_of_gap == std::vector<int>{0});
  CHECK(maj_labeling(Permutation()).label_of_gap == std::vector<int>{0});

  for (int n = 0; n <= 6; ++n) {
    enumerate_sn(n, [&](const Permutation& s) {
      check_total(inv_labeling(s), n);
      check_total(maj_labeling(s), n);
    });
  }
}

TEST_CASE("plain insertions grow their statistic by the label") {
  CHECK(phi_inv(2, pm({1, 4, 3, 5, 2})) == pm({1, 4, 3, 6, 5, 2}));
  CHECK(phi_maj(2, pm({1, 4, 3, 5, 2})) == pm({1, 4, 6, 3, 5, 2}));
  CHECK(phi_inv(0, Permutation()) == pm({1}));
  CHECK(phi_maj(0, Permutation()) == pm({1}));

  for (int m = 0; m <= 5; ++m) {
    enumerate_sn(m, [&](const Permutation& s) {
      for (int label = 0; label <= m; ++label) {
        const Permutation a = phi_inv(label, s);
        CHECK(inv(a) == inv(s) + label);
        const auto [la, ra] = phi_inv_inverse(a);
        CHECK(la == label);
        CHECK(ra == s);

        const Permutation b = phi_maj(label, s);
        CHECK(maj(b) == maj(s) + label);
        const auto [lb, rb] = phi_maj_inverse(b);
        CHECK(lb == label);
        CHECK(rb == s);
      }
      CHECK_THROWS_AS(phi_inv(m + 1, s), std::out_of_range);
      CHECK_THROWS_AS(phi_maj(-1, s), std::out_of_range);
    });
  }
}

TEST_CASE("psi trades inv for maj and fixes right-to-left minima") {
  CHECK(psi(pm({5, 2, 1, 4, 3})) == pm({2, 4, 1, 5, 3}));
  CHECK(psi_inverse(pm({2, 4, 1, 5, 3})) == pm({5, 2, 1, 4, 3}));

  const std::set<Permutation> fixed = {pm({1, 2, 3}), pm({2, 1, 3}),
                                       pm({2, 3, 1}), pm({3, 2, 1})};
  enumerate_sn(3, [&](const Permutation& s) {
    CHECK((psi(s) == s) == (fixed.count(s) == 1));
  });

  for (int n = 0; n <= 6; ++n) {
    std::set<Permutation> images;
    enumerate_sn(n, [&](const Permutation& s) {
      const Permutation t = psi(s);
      CHECK(maj(t) == inv(s));
      CHECK(right_to_left_minima(t) == right_to_left_minima(s));
      CHECK(psi_inverse(t) == s);
      images.insert(t);
    });
    long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    CHECK(static_cast<long>(images.size()) == fact);
  }
}

TEST_CASE("psi trace matches the peel levels") {
  const std::vector<TraceStep> tr = psi_trace(pm({5, 2, 1, 4, 3}));
  REQUIRE(tr.size() == 4);
  CHECK(tr[0].removed_value == 5);
  CHECK(tr[0].label == 4);
  CHECK(tr[0].intermediate == "2143");
  CHECK(tr[1].removed_value == 4);
  CHECK(tr[1].label == 1);
  CHECK(tr[1].intermediate == "213");
  CHECK(tr[2].removed_value == 3);
  CHECK(tr[2].label == 0);
  CHECK(tr[2].intermediate == "21");
  CHECK(tr[3].removed_value == 2);
  CHECK(tr[3].label == 1);
  CHECK(tr[3].intermediate == "1");
}

TEST_CASE("starred labelings on the worked seven-letter example") {
  const Labeling bar_inv = starred_inv_labeling(kSection42, InsertKind::bar);
  CHECK(bar_inv.label_of_gap ==
        std::vector<int>{4, 3, -1, 2, 1, -1, -1, 0});
  const Labeling star_inv = starred_inv_labeling(kSection42, InsertKind::star);
  CHECK(star_inv.label_of_gap ==
        std::vector<int>{3, 2, -1, 1, 0, -1, -1, -1});
  const Labeling bar_maj = starred_maj_labeling(kSection42, InsertKind::bar);
  CHECK(bar_maj.label_of_gap ==
        std::vector<int>{2, 1, -1, 3, 4, -1, -1, 0});
  const Labeling star_maj = starred_maj_labeling(kSection42, InsertKind::star);
  CHECK(star_maj.label_of_gap ==
        std::vector<int>{1, 0, -1, 2, 3, -1, -1, -1});

  CHECK(phi_bar_inv(2, kSection42) ==
        parse_descent_starred("5 2*1 8 4 7*6*3"));
  CHECK(phi_star_inv(2, kSection42) ==
        parse_descent_starred("5 8*2*1 4 7*6*3"));
  CHECK(phi_bar_maj(3, kSection42) ==
        parse_descent_starred("5 2*1 8*4 7*6 3"));
  CHECK(phi_star_maj(3, kSection42) ==
        parse_descent_starred("5 2*1 4 8*7*6*3"));
}

TEST_CASE("starred labelings are total with the right counts") {
  for (int n = 0; n <= 5; ++n) {
    for (int k = 0; k <= std::max(n - 1, 0); ++k) {
      enumerate_starred_descent(n, k, [&](const DescentStarred& d) {
        const Labeling bi = starred_inv_labeling(d, InsertKind::bar);
        const Labeling si = starred_inv_labeling(d, InsertKind::star);
        const Labeling bm = starred_maj_labeling(d, InsertKind::bar);
        const Labeling sm = starred_maj_labeling(d, InsertKind::star);
        CHECK(bi.count == n + 1 - k);
        CHECK(si.count == n - k);
        CHECK(bm.count == n + 1 - k);
        CHECK(sm.count == n - k);
        check_total(bi, n);
        check_total(si, n);
        check_total(bm, n);
        check_total(sm, n);
      });
    }
  }
}

TEST_CASE("starred insertions: increments, classes, round trips") {
  for (int n = 0; n <= 4; ++n) {
    for (int k = 0; k <= std::max(n - 1, 0); ++k) {
      enumerate_starred_descent(n, k, [&](const DescentStarred& d) {
        for (int i = 0; i <= n - k; ++i) {
          const DescentStarred e = phi_bar_inv(i, d);
          CHECK(e.star_count() == k);
          CHECK(op_inv(e) == op_inv(d) + i);
          CHECK_FALSE(max_is_starred(e));
          const auto [li, ri] = phi_bar_inv_inverse(e);
          CHECK(li == i);
          CHECK(ri == d);
          CHECK_THROWS_AS(phi_star_inv_inverse(e), std::invalid_argument);

          const DescentStarred f = phi_bar_maj(i, d);
          CHECK(f.star_count() == k);
          CHECK(op_maj(f) == op_maj(d) + i);
          CHECK_FALSE(maj_kind_is_star(f));
          const auto [lj, rj] = phi_bar_maj_inverse(f);
          CHECK(lj == i);
          CHECK(rj == d);
          CHECK_THROWS_AS(phi_star_maj_inverse(f), std::invalid_argument);

          // companion increment at the maj peel
          CHECK(overline_maj(f) - overline_maj(d) == (n + 1) - k - 1 - i);
        }
        for (int i = 0; i <= n - k - 1; ++i) {
          const DescentStarred e = phi_star_inv(i, d);
          CHECK(e.star_count() == k + 1);
          CHECK(op_inv(e) == op_inv(d) + i);
          CHECK(max_is_starred(e));
          const auto [li, ri] = phi_star_inv_inverse(e);
          CHECK(li == i);
          CHECK(ri == d);
          CHECK_THROWS_AS(phi_bar_inv_inverse(e), std::invalid_argument);

          const DescentStarred f = phi_star_maj(i, d);
          CHECK(f.star_count() == k + 1);
          CHECK(op_maj(f) == op_maj(d) + i);
          CHECK(maj_kind_is_star(f));
          const auto [lj, rj] = phi_star_maj_inverse(f);
          CHECK(lj == i);
          CHECK(rj == d);
          CHECK_THROWS_AS(phi_bar_maj_inverse(f), std::invalid_argument);

          CHECK(overline_maj(f) - overline_maj(d) ==
                (n + 1) - (k + 1) - 1 - i);
        }
        CHECK_THROWS_AS(phi_bar_inv(n - k + 1, d), std::out_of_range);
        CHECK_THROWS_AS(phi_star_inv(n - k, d), std::out_of_range);
      });
    }
  }
}

TEST_CASE("every starred word is in exactly one image class per side") {
  for (int n = 1; n <= 5; ++n) {
    for (int k = 0; k <= n - 1; ++k) {
      enumerate_starred_descent(n, k, [&](const DescentStarred& d) {
        if (max_is_starred(d)) {
          CHECK_NOTHROW(phi_star_inv_inverse(d));
        } else {
          CHECK_NOTHROW(phi_bar_inv_inverse(d));
        }
        if (maj_kind_is_star(d)) {
          CHECK_NOTHROW(phi_star_maj_inverse(d));
        } else {
          CHECK_NOTHROW(phi_bar_maj_inverse(d));
        }
      });
    }
  }
}

TEST_CASE("psi_osp on the running example, with trace") {
  const DescentStarred image = psi_osp(kRunning);
  CHECK(image == parse_descent_starred("3 6*4*2 1 7*5"));
  CHECK(psi_osp_inverse(image) == kRunning);
  CHECK(op_maj(image) == op_inv(kRunning));

  const std::vector<TraceStep> tr = psi_osp_trace(kRunning);
  REQUIRE(tr.size() == 6);
  const std::vector<int> values = {7, 6, 5, 4, 3, 2};
  const std::vector<int> labels = {3, 2, 0, 0, 1, 1};
  const std::vector<std::string> inter = {"3*2 6 4*1 5", "3*2 4*1 5",
                                          "3*2 4*1",     "3*2 1",
                                          "2 1",         "1"};
  for (size_t i = 0; i < tr.size(); ++i) {
    CHECK(tr[i].removed_value == values[i]);
    CHECK(tr[i].label == labels[i]);
    CHECK(tr[i].intermediate == inter[i]);
  }
}

TEST_CASE("psi_osp is a star-count-preserving bijection trading the stats") {
  for (int n = 1; n <= 5; ++n) {
    for (int k = 0; k <= n - 1; ++k) {
      std::set<DescentStarred> images;
      enumerate_starred_descent(n, k, [&](const DescentStarred& d) {
        const DescentStarred e = psi_osp(d);
        CHECK(e.star_count() == k);
        CHECK(op_maj(e) == op_inv(d));
        CHECK(right_to_left_minima(e) == right_to_left_minima(d));
        CHECK(psi_osp_inverse(e) == d);
        images.insert(e);
      });
      long cnt = 0;
      enumerate_starred_descent(n, k, [&](const DescentStarred&) { ++cnt; });
      CHECK(static_cast<long>(images.size()) == cnt);
    }
  }
}

TEST_CASE("primed maps are embedding conjugates") {
  CHECK(embed_primed(PrimedStarred(pm({2, 1}), {2})) ==
        DescentStarred(pm({3, 2, 1}), {2}));
  CHECK(embed_primed(PrimedStarred(pm({2, 1}), {1})) ==
        DescentStarred(pm({3, 2, 1}), {1}));

  for (int n = 0; n <= 4; ++n) {
    for (int k = 0; k <= n; ++k) {
      enumerate_starred_primed(n, k, [&](const PrimedStarred& x) {
        const DescentStarred d = embed_primed(x);
        CHECK(d.size() == n + 1);
        CHECK(d.base().at(n + 1) == 1);
        CHECK(unembed_primed(d) == x);
        // the appended minimum contributes n - k to both statistics
        CHECK(op_inv(d) == inv_prime(x) + n - k);
        CHECK(op_maj(d) == maj_prime(x) + n - k);
        // bar maps skip the embedded label 0 (appending past the minimum)
        for (int i = 0; i <= n - k; ++i) {
          CHECK(embed_primed(primed_bar_inv(i, x)) == phi_bar_inv(i + 1, d));
          CHECK(embed_primed(primed_bar_maj(i, x)) == phi_bar_maj(i + 1, d));
          CHECK(embed_primed(primed_star_inv(i, x)) == phi_star_inv(i, d));
          CHECK(embed_primed(primed_star_maj(i, x)) == phi_star_maj(i, d));
        }
      });
    }
  }
}

TEST_CASE("primed insertions: increments, classes, round trips") {
  for (int n = 0; n <= 4; ++n) {
    for (int k = 0; k <= n; ++k) {
      enumerate_starred_primed(n, k, [&](const PrimedStarred& x) {
        for (int i = 0; i <= n - k; ++i) {
          const PrimedStarred yb = primed_bar_inv(i, x);
          CHECK(yb.star_count() == k);
          CHECK(inv_prime(yb) == inv_prime(x) + i);
          CHECK_FALSE(primed_inv_peel_is_star(yb));
          const auto [li, ri] = primed_bar_inv_inverse(yb);
          CHECK(li == i);
          CHECK(ri == x);

          const PrimedStarred ys = primed_star_inv(i, x);
          CHECK(ys.star_count() == k + 1);
          CHECK(inv_prime(ys) == inv_prime(x) + i);
          CHECK(primed_inv_peel_is_star(ys));
          const auto [ls, rs] = primed_star_inv_inverse(ys);
          CHECK(ls == i);
          CHECK(rs == x);

          const PrimedStarred mb = primed_bar_maj(i, x);
          CHECK(mb.star_count() == k);
          CHECK(maj_prime(mb) == maj_prime(x) + i);
          CHECK_FALSE(primed_maj_peel_is_star(mb));
          const auto [lm, rm] = primed_bar_maj_inverse(mb);
          CHECK(lm == i);
          CHECK(rm == x);

          const PrimedStarred ms = primed_star_maj(i, x);
          CHECK(ms.star_count() == k + 1);
          CHECK(maj_prime(ms) == maj_prime(x) + i);
          CHECK(primed_maj_peel_is_star(ms));
          const auto [lt, rt] = primed_star_maj_inverse(ms);
          CHECK(lt == i);
          CHECK(rt == x);
        }
      });
    }
  }
}

TEST_CASE("psi_primed trades the primed statistics") {
  CHECK(psi_primed(parse_primed_starred("2 1*")) ==
        parse_primed_starred("2*1"));
  CHECK(psi_primed(parse_primed_starred("2*1")) ==
        parse_primed_starred("2 1*"));
  CHECK(psi_primed(parse_primed_starred("1 2*")) ==
        parse_primed_starred("1 2*"));

  for (int n = 0; n <= 4; ++n) {
    for (int k = 0; k <= n; ++k) {
      std::set<std::string> images;
      long cnt = 0;
      enumerate_starred_primed(n, k, [&](const PrimedStarred& x) {
        ++cnt;
        const PrimedStarred y = psi_primed(x);
        CHECK(y.star_count() == k);
        CHECK(maj_prime(y) == inv_prime(x));
        CHECK(psi_primed_inverse(y) == x);
        images.insert(format(y));
      });
      CHECK(static_cast<long>(images.size()) == cnt);
    }
  }
}

TEST_CASE("companion statistic values") {
  const std::map<std::string, long> s3 = {{"123", 3}, {"132", 1}, {"213", 2},
                                          {"231", 1}, {"312", 2}, {"321", 0}};
  enumerate_sn(3, [&](const Permutation& s) {
    CHECK(overline_maj(DescentStarred(s, {})) ==
          s3.at(format_permutation(s)));
  });
  CHECK(overline_maj(kRunning) == 6);

  for (int n = 0; n <= 5; ++n) {
    for (int k = 0; k <= std::max(n - 1, 0); ++k) {
      enumerate_starred_descent(n, k, [&](const DescentStarred& d) {
        CHECK(overline_maj(d) >= 0);
      });
    }
  }
}
