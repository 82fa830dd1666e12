// Joint distributions of statistics over the enumerable families, as exact
// polynomials: each object contributes one monomial whose exponents are its
// statistic values under the requested variable bindings.
#pragma once

#include <string>
#include <vector>

#include "mahonian/laurent.hpp"

namespace mahonian {

// sn          permutations of 1..n
// sgt         descent-starred words, k stars
// slt         ascent-starred words, k stars
// sgt_prime   primed starred words, k stars
// file        full file placements on the staircase with heights 1..n
// na          k non-attacking rooks on the staircase with heights 0..n-1
// mixed       full mixed placements, k non-attacking rooks off the bottom row
// mixed_prime full mixed placements, bottom row open to non-attacking rooks
enum class Family { sn, sgt, slt, sgt_prime, file, na, mixed, mixed_prime };
Family family_from_name(const std::string& name);
std::string family_name(Family f);
bool family_takes_k(Family f);

// One statistic bound to an output variable (one of q, p, z, t).
struct StatBinding {
  std::string stat;
  char var = 'q';
};

// Per-family statistic names:
//   sn:          inv maj des asc coinv comaj rlmaj rlcomaj
//   sgt:         op_inv op_maj op_coinv op_rlmaj overline_maj
//   slt:         op_inv op_coinv op_comaj op_rlcomaj
//   sgt_prime:   inv_prime maj_prime
//   file:        unc (classic rule), uncb unca (wachs_white rule)
//   na:          unc (classic), uncb unca can unca_can (wachs_white)
//   mixed:       unc (mixed), uncb unca unca_can (wachs_white_mixed)
//   mixed_prime: unc (classic; also named unc_prime)
// Unknown pairings throw std::invalid_argument.
Laurent distribution(Family family, int n, int k,
                     const std::vector<StatBinding>& stats);

// Object count of the family (same enumeration).
long long family_count(Family family, int n, int k);

}  // namespace mahonian
