#include "mahonian/qanalog.hpp"

#include <stdexcept>

#include "mahonian/perm.hpp"

namespace mahonian {

Laurent q_int(int n) {
  if (n < 0) throw std::invalid_argument("q_int: n must be >= 0");
  Laurent r;
  for (int a = 0; a < n; ++a) r += Laurent::monomial(1, a);
  return r;
}

Laurent q_fact(int n) {
  if (n < 0) throw std::invalid_argument("q_fact: n must be >= 0");
  Laurent r = 1;
  for (int m = 1; m <= n; ++m) r *= q_int(m);
  return r;
}

Laurent q_binom(int n, int k) {
  if (k < 0 || k > n) throw std::out_of_range("q_binom: k out of range");
  if (k == 0 || k == n) return 1;
  return q_binom(n - 1, k - 1) + q_binom(n - 1, k).times_monomial(k);
}

Laurent pq_int(int n) {
  if (n < 0) throw std::invalid_argument("pq_int: n must be >= 0");
  Laurent r;
  for (int a = 0; a < n; ++a) r += Laurent::monomial(1, a, n - 1 - a);
  return r;
}

Laurent pq_fact(int n) {
  if (n < 0) throw std::invalid_argument("pq_fact: n must be >= 0");
  Laurent r = 1;
  for (int m = 1; m <= n; ++m) r *= pq_int(m);
  return r;
}

Laurent stirling_q(int n, int k) {
  if (n == 0 && k == 0) return 1;
  if (n <= 0 || k <= 0 || k > n) return 0;
  return stirling_q(n - 1, k - 1) + q_int(k) * stirling_q(n - 1, k);
}

Laurent stirling_pq(int n, int k) {
  if (n == 0 && k == 0) return 1;
  if (n <= 0 || k <= 0 || k > n) return 0;
  return stirling_pq(n - 1, k - 1) + pq_int(k) * stirling_pq(n - 1, k);
}

Laurent stirling_tilde_pq(int n, int k) {
  if (n == 0 && k == 0) return 1;
  if (n <= 0 || k <= 0 || k > n) return 0;
  Laurent inner = stirling_tilde_pq(n - 1, k - 1) +
                  pq_int(k) * stirling_tilde_pq(n - 1, k);
  return inner.times_monomial(0, n - k);
}

Laurent eulerian_q(int n, int k) {
  if (n < 1 || k < 0 || k > n - 1) {
    throw std::out_of_range("eulerian_q: need n >= 1 and 0 <= k <= n-1");
  }
  return eulerian_table(n)[k];
}

std::vector<Laurent> eulerian_table(int n) {
  if (n < 1) throw std::out_of_range("eulerian_table: need n >= 1");
  std::vector<Laurent> table(n);
  enumerate_sn(n, [&](const Permutation& p) {
    table[des(p)] += Laurent::monomial(1, static_cast<int>(maj(p)));
  });
  return table;
}

}  // namespace mahonian
