#include "mahonian/insertion.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>
#include <stdexcept>

namespace mahonian {

int Labeling::gap_of_label(int label) const {
  if (label < 0 || label >= count) {
    throw std::out_of_range("label out of range");
  }
  for (int g = 0; g < static_cast<int>(label_of_gap.size()); ++g) {
    if (label_of_gap[g] == label) return g;
  }
  throw std::out_of_range("label not present");  // unreachable by invariant
}

Labeling inv_labeling(const Permutation& p) {
  const int n = p.size();
  Labeling lab;
  lab.label_of_gap.assign(n + 1, -1);
  for (int g = 0; g <= n; ++g) lab.label_of_gap[g] = n - g;
  lab.count = n + 1;
  return lab;
}

Labeling maj_labeling(const Permutation& p) {
  const int n = p.size();
  Labeling lab;
  lab.label_of_gap.assign(n + 1, -1);
  int next = 0;
  lab.label_of_gap[n] = next++;
  const PositionSet ds = des_set(p);
  for (auto it = ds.rbegin(); it != ds.rend(); ++it) {
    lab.label_of_gap[*it] = next++;
  }
  if (n > 0) lab.label_of_gap[0] = next++;  // gap 0 is gap n when empty
  for (int i : asc_set(p)) lab.label_of_gap[i] = next++;
  lab.count = next;
  assert(lab.count == n + 1);
  return lab;
}

Labeling starred_inv_labeling(const DescentStarred& d, InsertKind kind) {
  const int n = d.size();
  Labeling lab;
  lab.label_of_gap.assign(n + 1, -1);
  int next = 0;
  const int top = (kind == InsertKind::star) ? n - 1 : n;
  for (int g = top; g >= 0; --g) {
    if (!position_set_contains(d.stars(), g)) lab.label_of_gap[g] = next++;
  }
  lab.count = next;
  return lab;
}

Labeling starred_maj_labeling(const DescentStarred& d, InsertKind kind) {
  const int n = d.size();
  Labeling lab;
  lab.label_of_gap.assign(n + 1, -1);
  int next = 0;
  if (kind == InsertKind::bar) lab.label_of_gap[n] = next++;
  const PositionSet ds = des_set(d.base());
  for (auto it = ds.rbegin(); it != ds.rend(); ++it) {
    if (!position_set_contains(d.stars(), *it)) {
      lab.label_of_gap[*it] = next++;
    }
  }
  if (n > 0) lab.label_of_gap[0] = next++;  // gap 0 is gap n when empty
  for (int i : asc_set(d.base())) {
    if (!position_set_contains(d.stars(), i)) lab.label_of_gap[i] = next++;
  }
  lab.count = next;
  return lab;
}

namespace {

std::vector<int> insert_at_gap(const std::vector<int>& word, int gap, int v) {
  std::vector<int> out;
  out.reserve(word.size() + 1);
  out.insert(out.end(), word.begin(), word.begin() + gap);
  out.push_back(v);
  out.insert(out.end(), word.begin() + gap, word.end());
  return out;
}

PositionSet shift_stars(const PositionSet& stars, int gap) {
  PositionSet out;
  out.reserve(stars.size());
  for (int s : stars) out.push_back(s < gap ? s : s + 1);
  return out;
}

int position_of_max(const Permutation& p) {
  for (int i = 1; i <= p.size(); ++i) {
    if (p.at(i) == p.size()) return i;
  }
  throw std::logic_error("empty permutation has no maximum");
}

}  // namespace

Permutation phi_inv(int label, const Permutation& p) {
  const int gap = inv_labeling(p).gap_of_label(label);
  return Permutation(insert_at_gap(p.entries(), gap, p.size() + 1));
}

Permutation phi_maj(int label, const Permutation& p) {
  const int gap = maj_labeling(p).gap_of_label(label);
  return Permutation(insert_at_gap(p.entries(), gap, p.size() + 1));
}

std::pair<int, Permutation> phi_inv_inverse(const Permutation& p) {
  if (p.size() < 1) throw std::invalid_argument("cannot peel the empty word");
  const int pos = position_of_max(p);
  std::vector<int> rest = p.entries();
  rest.erase(rest.begin() + (pos - 1));
  Permutation reduced(std::move(rest));
  return {inv_labeling(reduced).label_of_gap[pos - 1], std::move(reduced)};
}

std::pair<int, Permutation> phi_maj_inverse(const Permutation& p) {
  if (p.size() < 1) throw std::invalid_argument("cannot peel the empty word");
  const int pos = position_of_max(p);
  std::vector<int> rest = p.entries();
  rest.erase(rest.begin() + (pos - 1));
  Permutation reduced(std::move(rest));
  return {maj_labeling(reduced).label_of_gap[pos - 1], std::move(reduced)};
}

Permutation psi(const Permutation& p) {
  if (p.size() <= 1) return p;
  auto [label, reduced] = phi_inv_inverse(p);
  return phi_maj(label, psi(reduced));
}

Permutation psi_inverse(const Permutation& p) {
  if (p.size() <= 1) return p;
  auto [label, reduced] = phi_maj_inverse(p);
  return phi_inv(label, psi_inverse(reduced));
}

DescentStarred phi_bar_inv(int label, const DescentStarred& d) {
  const int gap = starred_inv_labeling(d, InsertKind::bar).gap_of_label(label);
  return DescentStarred(
      Permutation(insert_at_gap(d.base().entries(), gap, d.size() + 1)),
      shift_stars(d.stars(), gap));
}

DescentStarred phi_star_inv(int label, const DescentStarred& d) {
  const int gap =
      starred_inv_labeling(d, InsertKind::star).gap_of_label(label);
  PositionSet stars = shift_stars(d.stars(), gap);
  stars.push_back(gap + 1);  // glue the new maximum to its right neighbour
  return DescentStarred(
      Permutation(insert_at_gap(d.base().entries(), gap, d.size() + 1)),
      std::move(stars));
}

namespace {

// Shared body of the maj-side insertions: insert at the labeled gap, then
// simultaneously slide every star strictly right of the new maximum onto the
// nearest descent to its left.  The slide targets are distinct because each
// moved star keeps the descents of the new word on its left separated.
DescentStarred maj_insert(int gap, const DescentStarred& d) {
  Permutation t(insert_at_gap(d.base().entries(), gap, d.size() + 1));
  const PositionSet ds = des_set(t);
  PositionSet stars;
  stars.reserve(d.stars().size());
  for (int x : d.stars()) {
    int xx = x < gap ? x : x + 1;
    if (xx > gap) {
      int best = -1;
      for (int c : ds) {
        if (c < xx) best = c;
      }
      assert(best >= 0 && "slide target must exist");
      xx = best;
    }
    stars.push_back(xx);
  }
  return DescentStarred(std::move(t), std::move(stars));
}

}  // namespace

DescentStarred phi_bar_maj(int label, const DescentStarred& d) {
  const int gap = starred_maj_labeling(d, InsertKind::bar).gap_of_label(label);
  return maj_insert(gap, d);
}

DescentStarred phi_star_maj(int label, const DescentStarred& d) {
  const int gap =
      starred_maj_labeling(d, InsertKind::star).gap_of_label(label);
  DescentStarred t = maj_insert(gap, d);
  const PositionSet ds = des_set(t.base());
  assert(!ds.empty());
  PositionSet stars = t.stars();
  stars.push_back(ds.back());  // star the rightmost descent
  return DescentStarred(t.base(), std::move(stars));
}

bool max_is_starred(const DescentStarred& d) {
  return position_set_contains(d.stars(), position_of_max(d.base()));
}

bool maj_kind_is_star(const DescentStarred& d) {
  const int pos = position_of_max(d.base());
  if (pos == d.size()) return false;  // appended maximum is always bar
  const PositionSet ds = des_set(d.base());
  return !ds.empty() && position_set_contains(d.stars(), ds.back());
}

namespace {

// Remove the maximum letter; stars are reindexed across the removed slot.
std::pair<int, DescentStarred> remove_max(const Permutation& p,
                                          const PositionSet& stars) {
  const int pos = position_of_max(p);
  std::vector<int> rest = p.entries();
  rest.erase(rest.begin() + (pos - 1));
  PositionSet out;
  out.reserve(stars.size());
  for (int x : stars) out.push_back(x < pos ? x : x - 1);
  return {pos, DescentStarred(Permutation(std::move(rest)), std::move(out))};
}

}  // namespace

std::pair<int, DescentStarred> phi_bar_inv_inverse(const DescentStarred& d) {
  if (d.size() < 1) throw std::invalid_argument("cannot peel the empty word");
  if (max_is_starred(d)) {
    throw std::invalid_argument("maximum is glued: not a bar-inv image");
  }
  auto [pos, reduced] = remove_max(d.base(), d.stars());
  const int label =
      starred_inv_labeling(reduced, InsertKind::bar).label_of_gap[pos - 1];
  assert(label >= 0);
  return {label, std::move(reduced)};
}

std::pair<int, DescentStarred> phi_star_inv_inverse(const DescentStarred& d) {
  if (d.size() < 1) throw std::invalid_argument("cannot peel the empty word");
  if (!max_is_starred(d)) {
    throw std::invalid_argument("maximum is free: not a star-inv image");
  }
  const int pos = position_of_max(d.base());
  PositionSet stars;
  for (int x : d.stars()) {
    if (x != pos) stars.push_back(x);
  }
  auto [pos2, reduced] = remove_max(d.base(), stars);
  const int label =
      starred_inv_labeling(reduced, InsertKind::star).label_of_gap[pos2 - 1];
  assert(label >= 0);
  return {label, std::move(reduced)};
}

namespace {

// Shared body of the maj-side inverses: slide stars weakly right of the
// maximum onto the nearest descent to their right, then remove the maximum.
std::pair<int, DescentStarred> maj_peel(const Permutation& p,
                                        const PositionSet& stars,
                                        InsertKind kind) {
  const int pos = position_of_max(p);
  const PositionSet ds = des_set(p);
  PositionSet slid;
  slid.reserve(stars.size());
  for (int x : stars) {
    if (x >= pos) {
      int best = -1;
      for (auto it = ds.rbegin(); it != ds.rend(); ++it) {
        if (*it > x) best = *it;
      }
      if (best < 0) throw std::invalid_argument("not a maj-side image");
      x = best;
    }
    slid.push_back(x);
  }
  auto [pos2, reduced] = remove_max(p, slid);
  const int label =
      starred_maj_labeling(reduced, kind).label_of_gap[pos2 - 1];
  if (label < 0) throw std::invalid_argument("not a maj-side image");
  return {label, std::move(reduced)};
}

}  // namespace

std::pair<int, DescentStarred> phi_bar_maj_inverse(const DescentStarred& d) {
  if (d.size() < 1) throw std::invalid_argument("cannot peel the empty word");
  if (maj_kind_is_star(d)) {
    throw std::invalid_argument(
        "rightmost descent is starred: not a bar-maj image");
  }
  return maj_peel(d.base(), d.stars(), InsertKind::bar);
}

std::pair<int, DescentStarred> phi_star_maj_inverse(const DescentStarred& d) {
  if (d.size() < 1) throw std::invalid_argument("cannot peel the empty word");
  if (!maj_kind_is_star(d)) {
    throw std::invalid_argument(
        "rightmost descent is free: not a star-maj image");
  }
  const PositionSet ds = des_set(d.base());
  PositionSet stars;
  for (int x : d.stars()) {
    if (x != ds.back()) stars.push_back(x);
  }
  return maj_peel(d.base(), stars, InsertKind::star);
}

DescentStarred psi_osp(const DescentStarred& d) {
  if (d.size() <= 1) return d;
  if (max_is_starred(d)) {
    auto [label, reduced] = phi_star_inv_inverse(d);
    return phi_star_maj(label, psi_osp(reduced));
  }
  auto [label, reduced] = phi_bar_inv_inverse(d);
  return phi_bar_maj(label, psi_osp(reduced));
}

DescentStarred psi_osp_inverse(const DescentStarred& d) {
  if (d.size() <= 1) return d;
  if (maj_kind_is_star(d)) {
    auto [label, reduced] = phi_star_maj_inverse(d);
    return phi_star_inv(label, psi_osp_inverse(reduced));
  }
  auto [label, reduced] = phi_bar_maj_inverse(d);
  return phi_bar_inv(label, psi_osp_inverse(reduced));
}

DescentStarred embed_primed(const PrimedStarred& x) {
  std::vector<int> word;
  word.reserve(x.size() + 1);
  for (int v : x.base().entries()) word.push_back(v + 1);
  word.push_back(1);
  return DescentStarred(Permutation(std::move(word)), x.stars());
}

PrimedStarred unembed_primed(const DescentStarred& d) {
  const auto& word = d.base().entries();
  if (word.empty() || word.back() != 1) {
    throw std::invalid_argument("embedded word must end in 1");
  }
  std::vector<int> out;
  out.reserve(word.size() - 1);
  for (std::size_t i = 0; i + 1 < word.size(); ++i) out.push_back(word[i] - 1);
  return PrimedStarred(Permutation(std::move(out)), d.stars());
}

PrimedStarred primed_bar_inv(int label, const PrimedStarred& x) {
  return unembed_primed(phi_bar_inv(label + 1, embed_primed(x)));
}

PrimedStarred primed_star_inv(int label, const PrimedStarred& x) {
  return unembed_primed(phi_star_inv(label, embed_primed(x)));
}

PrimedStarred primed_bar_maj(int label, const PrimedStarred& x) {
  return unembed_primed(phi_bar_maj(label + 1, embed_primed(x)));
}

PrimedStarred primed_star_maj(int label, const PrimedStarred& x) {
  return unembed_primed(phi_star_maj(label, embed_primed(x)));
}

std::pair<int, PrimedStarred> primed_bar_inv_inverse(const PrimedStarred& x) {
  auto [label, reduced] = phi_bar_inv_inverse(embed_primed(x));
  assert(label >= 1);
  return {label - 1, unembed_primed(reduced)};
}

std::pair<int, PrimedStarred> primed_star_inv_inverse(const PrimedStarred& x) {
  auto [label, reduced] = phi_star_inv_inverse(embed_primed(x));
  return {label, unembed_primed(reduced)};
}

std::pair<int, PrimedStarred> primed_bar_maj_inverse(const PrimedStarred& x) {
  auto [label, reduced] = phi_bar_maj_inverse(embed_primed(x));
  if (label < 1) throw std::invalid_argument("not a primed bar-maj image");
  return {label - 1, unembed_primed(reduced)};
}

std::pair<int, PrimedStarred> primed_star_maj_inverse(const PrimedStarred& x) {
  auto [label, reduced] = phi_star_maj_inverse(embed_primed(x));
  return {label, unembed_primed(reduced)};
}

bool primed_inv_peel_is_star(const PrimedStarred& x) {
  return max_is_starred(embed_primed(x));
}

bool primed_maj_peel_is_star(const PrimedStarred& x) {
  return maj_kind_is_star(embed_primed(x));
}

PrimedStarred psi_primed(const PrimedStarred& x) {
  return unembed_primed(psi_osp(embed_primed(x)));
}

PrimedStarred psi_primed_inverse(const PrimedStarred& x) {
  return unembed_primed(psi_osp_inverse(embed_primed(x)));
}

long overline_maj(const DescentStarred& d) {
  if (d.size() <= 1) return 0;
  thread_local std::map<DescentStarred, long> cache;
  auto hit = cache.find(d);
  if (hit != cache.end()) return hit->second;
  const long n = d.size();
  const long k = d.star_count();
  std::pair<int, DescentStarred> peel =
      maj_kind_is_star(d) ? phi_star_maj_inverse(d) : phi_bar_maj_inverse(d);
  const long value = overline_maj(peel.second) + (n - k - 1 - peel.first);
  cache.emplace(d, value);
  return value;
}

namespace {

template <class Obj, class Peel, class Fmt>
std::vector<TraceStep> make_trace(Obj obj, int size, Peel peel, Fmt fmt) {
  std::vector<TraceStep> steps;
  int v = size;
  while (v >= 2) {
    auto [label, reduced] = peel(obj);
    steps.push_back({v, label, fmt(reduced)});
    obj = reduced;
    --v;
  }
  return steps;
}

std::pair<int, DescentStarred> inv_peel_dispatch(const DescentStarred& d) {
  return max_is_starred(d) ? phi_star_inv_inverse(d) : phi_bar_inv_inverse(d);
}

std::pair<int, DescentStarred> maj_peel_dispatch(const DescentStarred& d) {
  return maj_kind_is_star(d) ? phi_star_maj_inverse(d)
                             : phi_bar_maj_inverse(d);
}

}  // namespace

std::vector<TraceStep> psi_trace(const Permutation& p) {
  return make_trace(p, p.size(), phi_inv_inverse,
                    [](const Permutation& r) { return format_permutation(r); });
}

std::vector<TraceStep> psi_inverse_trace(const Permutation& p) {
  return make_trace(p, p.size(), phi_maj_inverse,
                    [](const Permutation& r) { return format_permutation(r); });
}

std::vector<TraceStep> psi_osp_trace(const DescentStarred& d) {
  return make_trace(d, d.size(), inv_peel_dispatch,
                    [](const DescentStarred& r) { return format(r); });
}

std::vector<TraceStep> psi_osp_inverse_trace(const DescentStarred& d) {
  return make_trace(d, d.size(), maj_peel_dispatch,
                    [](const DescentStarred& r) { return format(r); });
}

std::vector<TraceStep> psi_primed_trace(const PrimedStarred& x) {
  std::vector<TraceStep> steps;
  PrimedStarred cur = x;
  while (cur.size() >= 1) {
    auto [label, reduced] = primed_inv_peel_is_star(cur)
                                ? primed_star_inv_inverse(cur)
                                : primed_bar_inv_inverse(cur);
    steps.push_back({cur.size(), label, format(reduced)});
    cur = reduced;
  }
  return steps;
}

std::vector<TraceStep> psi_primed_inverse_trace(const PrimedStarred& x) {
  std::vector<TraceStep> steps;
  PrimedStarred cur = x;
  while (cur.size() >= 1) {
    auto [label, reduced] = primed_maj_peel_is_star(cur)
                                ? primed_star_maj_inverse(cur)
                                : primed_bar_maj_inverse(cur);
    steps.push_back({cur.size(), label, format(reduced)});
    cur = reduced;
  }
  return steps;
}

}  // namespace mahonian
