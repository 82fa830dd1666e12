// Gap labelings and the insertion maps they drive: the plain inv/maj
// insertions and the recursive bijection built from them, their starred
// (bar/star) versions on descent-starred words, and the primed versions
// obtained by embedding behind a trailing minimum.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mahonian/starred.hpp"

namespace mahonian {

// Labels over the gaps 0..n of an n-letter word.  Labeled gaps carry exactly
// the values 0..count-1; unlabeled gaps carry -1.
struct Labeling {
  std::vector<int> label_of_gap;
  int count = 0;
  int gap_of_label(int label) const;  // throws std::out_of_range
};

Labeling inv_labeling(const Permutation& p);
Labeling maj_labeling(const Permutation& p);

enum class InsertKind { bar, star };

Labeling starred_inv_labeling(const DescentStarred& d, InsertKind kind);
Labeling starred_maj_labeling(const DescentStarred& d, InsertKind kind);

// Insert the next letter m+1 into an m-letter word at the gap carrying the
// given label; the statistic named by the map grows by exactly that label.
Permutation phi_inv(int label, const Permutation& p);
Permutation phi_maj(int label, const Permutation& p);
std::pair<int, Permutation> phi_inv_inverse(const Permutation& p);
std::pair<int, Permutation> phi_maj_inverse(const Permutation& p);

// Peel by inv, rebuild by maj: trades inv for maj and fixes right-to-left
// minima.
Permutation psi(const Permutation& p);
Permutation psi_inverse(const Permutation& p);

// Starred insertions.  bar keeps the star count; star adds one star.
DescentStarred phi_bar_inv(int label, const DescentStarred& d);
DescentStarred phi_star_inv(int label, const DescentStarred& d);
DescentStarred phi_bar_maj(int label, const DescentStarred& d);
DescentStarred phi_star_maj(int label, const DescentStarred& d);

// Image-class membership: the inv-side maps split on whether the maximum is
// glued to its right neighbour; the maj-side maps split on whether the
// rightmost descent is starred while the maximum is not last.
bool max_is_starred(const DescentStarred& d);
bool maj_kind_is_star(const DescentStarred& d);

// Inverses recompute the labeling on the reduced word and report the label;
// calling one on the other kind's image throws std::invalid_argument.
std::pair<int, DescentStarred> phi_bar_inv_inverse(const DescentStarred& d);
std::pair<int, DescentStarred> phi_star_inv_inverse(const DescentStarred& d);
std::pair<int, DescentStarred> phi_bar_maj_inverse(const DescentStarred& d);
std::pair<int, DescentStarred> phi_star_maj_inverse(const DescentStarred& d);

DescentStarred psi_osp(const DescentStarred& d);
DescentStarred psi_osp_inverse(const DescentStarred& d);

// Primed maps: conjugates of the starred maps by the embedding that appends
// a smallest letter ((s_1+1 .. s_n+1, 1), same stars).
PrimedStarred primed_bar_inv(int label, const PrimedStarred& x);
PrimedStarred primed_star_inv(int label, const PrimedStarred& x);
PrimedStarred primed_bar_maj(int label, const PrimedStarred& x);
PrimedStarred primed_star_maj(int label, const PrimedStarred& x);
std::pair<int, PrimedStarred> primed_bar_inv_inverse(const PrimedStarred& x);
std::pair<int, PrimedStarred> primed_star_inv_inverse(const PrimedStarred& x);
std::pair<int, PrimedStarred> primed_bar_maj_inverse(const PrimedStarred& x);
std::pair<int, PrimedStarred> primed_star_maj_inverse(const PrimedStarred& x);
bool primed_inv_peel_is_star(const PrimedStarred& x);
bool primed_maj_peel_is_star(const PrimedStarred& x);
PrimedStarred psi_primed(const PrimedStarred& x);
PrimedStarred psi_primed_inverse(const PrimedStarred& x);

DescentStarred embed_primed(const PrimedStarred& x);
PrimedStarred unembed_primed(const DescentStarred& d);

// Companion statistic defined by the maj-side peel: each level removing the
// top letter at label i from an object with n letters and k stars adds
// n - k - 1 - i.  Cached per value.
long overline_maj(const DescentStarred& d);

// One line per peel level for the CLI: the removed letter, its label on the
// reduced word, and the reduced word itself.
struct TraceStep {
  int removed_value;
  int label;
  std::string intermediate;
};
std::vector<TraceStep> psi_trace(const Permutation& p);
std::vector<TraceStep> psi_inverse_trace(const Permutation& p);
std::vector<TraceStep> psi_osp_trace(const DescentStarred& d);
std::vector<TraceStep> psi_osp_inverse_trace(const DescentStarred& d);
std::vector<TraceStep> psi_primed_trace(const PrimedStarred& x);
std::vector<TraceStep> psi_primed_inverse_trace(const PrimedStarred& x);

}  // namespace mahonian
