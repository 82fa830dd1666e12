// q- and (p,q)-integers, factorials, Gaussian binomials, the three Stirling
// families, and the q-Eulerian coefficients by direct enumeration.
#pragma once

#include <vector>

#include "mahonian/laurent.hpp"

namespace mahonian {

Laurent q_int(int n);   // [n]_q = 1 + q + ... + q^{n-1}, n >= 0
Laurent q_fact(int n);  // [n]_q!
// Gaussian binomial via the division-free Pascal recursion
// C(n,k) = C(n-1,k-1) + q^k C(n-1,k).  Throws if k < 0 or k > n.
Laurent q_binom(int n, int k);

Laurent pq_int(int n);   // [n]_{p,q} = sum_{a=0}^{n-1} q^a p^{n-1-a}
Laurent pq_fact(int n);  // [n]_{p,q}!

// q-Stirling numbers of the second kind:
//   S_{n+1,k} = S_{n,k-1} + [k]_q S_{n,k},  S_{0,0} = 1, zero outside.
Laurent stirling_q(int n, int k);
// Same recursion with [k]_{p,q}.
Laurent stirling_pq(int n, int k);
// Twisted form: tilde-S_{n+1,k} = p^{n+1-k} (tilde-S_{n,k-1}
//   + [k]_{p,q} tilde-S_{n,k}); equals p^{C(n,2)-C(k,2)} S_{n,k}(q/p).
Laurent stirling_tilde_pq(int n, int k);

// Coefficient of t^k in the joint (maj, des) distribution over S_n, computed
// by enumerating S_n.  Requires 0 <= k <= n-1.
Laurent eulerian_q(int n, int k);
// All of A_{n,0..n-1} from a single sweep over S_n.
std::vector<Laurent> eulerian_table(int n);

}  // namespace mahonian
