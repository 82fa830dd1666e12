#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "mahonian/perm.hpp"
#include "mahonian/qanalog.hpp"

using namespace mahonian;

namespace {
Laurent q(int e = 1) { return Laurent::monomial(1, e); }
Laurent p(int e = 1) { return Laurent::monomial(1, 0, e); }

long integer_stirling2(int n, int k) {
  if (n == 0 && k == 0) return 1;
  if (n <= 0 || k <= 0 || k > n) return 0;
  return integer_stirling2(n - 1, k - 1) + k * integer_stirling2(n - 1, k);
}

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }
}  // namespace

TEST_CASE("q-integers and factorials") {
  CHECK(q_int(0).is_zero());
  CHECK(q_int(1) == Laurent(1));
  CHECK(q_int(3) == 1 + q(1) + q(2));
  CHECK(q_fact(0) == Laurent(1));
  CHECK(q_fact(3).str() == "1 + 2*q + 2*q^2 + q^3");
  CHECK(q_fact(4) == q_fact(3) * q_int(4));
}

TEST_CASE("Gaussian binomials") {
  CHECK(q_binom(2, 1) == 1 + q(1));
  CHECK(q_binom(5, 2).str() ==
        "1 + q + 2*q^2 + 2*q^3 + 2*q^4 + q^5 + q^6");
  CHECK(q_binom(4, 0) == Laurent(1));
  CHECK(q_binom(4, 4) == Laurent(1));
  CHECK_THROWS_AS(q_binom(3, 4), std::out_of_range);
  CHECK_THROWS_AS(q_binom(3, -1), std::out_of_range);
  // symmetry and Pascal consistency
  for (int n = 0; n <= 8; ++n) {
    for (int k = 0; k <= n; ++k) {
      CHECK(q_binom(n, k) == q_binom(n, n - k));
    }
  }
}

TEST_CASE("p,q-integers") {
  CHECK(pq_int(3) == p(2) + q(1) * p(1) + q(2));
  CHECK(pq_int(1) == Laurent(1));
  CHECK(pq_fact(2) == p(1) + q(1));
  // at p = 1 they collapse to the q-versions
  for (int n = 0; n <= 6; ++n) {
    CHECK(pq_int(n).at_one(1) == q_int(n));
    CHECK(pq_fact(n).at_one(1) == q_fact(n));
  }
}

TEST_CASE("q-Stirling numbers") {
  CHECK(stirling_q(3, 2) == 2 + q(1));
  CHECK(stirling_q(4, 2).str() == "3 + 3*q + q^2");
  CHECK(stirling_q(5, 3).str() == "6 + 8*q + 7*q^2 + 3*q^3 + q^4");
  CHECK(stirling_q(0, 0) == Laurent(1));
  CHECK(stirling_q(4, 0).is_zero());
  CHECK(stirling_q(3, 4).is_zero());
  CHECK(stirling_q(-1, 0).is_zero());
  for (int n = 0; n <= 8; ++n) CHECK(stirling_q(n, n) == Laurent(1));
}

TEST_CASE("q-Stirling at q = 1 matches the integer recursion") {
  for (int n = 0; n <= 8; ++n) {
    for (int k = 0; k <= n; ++k) {
      CHECK(stirling_q(n, k).at_one(0) ==
            Laurent(integer_stirling2(n, k)));
      CHECK((q_fact(k) * stirling_q(n, k)).at_one(0) ==
            Laurent(factorial(k) * integer_stirling2(n, k)));
    }
  }
}

TEST_CASE("p,q-Stirling numbers") {
  CHECK(stirling_pq(4, 2) ==
        1 + p(1) + p(2) + q(1) + 2 * q(1) * p(1) + q(2));
  for (int n = 0; n <= 6; ++n) {
    for (int k = 0; k <= n; ++k) {
      CHECK(stirling_pq(n, k).at_one(1) == stirling_q(n, k));
    }
  }
}

TEST_CASE("twisted p,q-Stirling numbers") {
  CHECK(stirling_tilde_pq(3, 1) == p(3));
  CHECK(stirling_tilde_pq(4, 2) ==
        3 * p(5) + 3 * q(1) * p(4) + q(2) * p(3));
  // tilde-S_{n,k}(p,q) = p^{C(n,2)-C(k,2)} S_{n,k}(q/p)
  for (int n = 0; n <= 6; ++n) {
    for (int k = 0; k <= n; ++k) {
      const int shift = n * (n - 1) / 2 - k * (k - 1) / 2;
      CHECK(stirling_tilde_pq(n, k) ==
            stirling_q(n, k).substitute_q_over_p().times_monomial(0, shift));
    }
  }
}

TEST_CASE("q-Eulerian coefficients") {
  CHECK(eulerian_q(3, 0) == Laurent(1));
  CHECK(eulerian_q(3, 1) == 2 * q(1) + 2 * q(2));
  CHECK(eulerian_q(3, 2) == q(3));
  CHECK(eulerian_q(4, 1) == 3 * q(1) + 5 * q(2) + 3 * q(3));
  CHECK(eulerian_q(4, 2) == 3 * q(3) + 5 * q(4) + 3 * q(5));
  CHECK(eulerian_q(4, 3) == q(6));
  CHECK_THROWS_AS(eulerian_q(3, 3), std::out_of_range);
  CHECK_THROWS_AS(eulerian_q(3, -1), std::out_of_range);
  CHECK_THROWS_AS(eulerian_q(0, 0), std::out_of_range);

  for (int n = 1; n <= 7; ++n) {
    const std::vector<Laurent> table = eulerian_table(n);
    REQUIRE(static_cast<int>(table.size()) == n);
    CHECK(table[0] == Laurent(1));
    Laurent sum;
    for (const Laurent& a : table) sum += a;
    CHECK(sum == q_fact(n));
  }
}

TEST_CASE("Eulerian coefficients match the joint distribution directly") {
  // coefficient of t^k in sum q^maj t^des over S_n
  for (int n = 1; n <= 6; ++n) {
    Laurent joint;
    enumerate_sn(n, [&](const Permutation& s) {
      joint += Laurent::monomial(1, static_cast<int>(maj(s)), 0, 0,
                                 static_cast<int>(des(s)));
    });
    for (int k = 0; k <= n - 1; ++k) {
      CHECK(joint.coeff_of_t(k) == eulerian_q(n, k));
    }
  }
}
