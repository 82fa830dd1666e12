// Permutations of {1..n} with the eight classical statistics, positional
// inversion counts, and the reverse/complement symmetries.  Positions and
// values are 1-based throughout.
#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace mahonian {

// Sorted ascending, duplicate-free set of 1-based positions.
using PositionSet = std::vector<int>;

bool position_set_contains(const PositionSet& s, int pos);

class Permutation {
 public:
  Permutation() = default;  // the empty permutation
  explicit Permutation(std::vector<int> entries);  // validates, throws
  static Permutation identity(int n);

  int size() const { return static_cast<int>(entries_.size()); }
  int at(int pos) const;  // 1-based, bounds-checked
  const std::vector<int>& entries() const { return entries_; }

  bool operator==(const Permutation& o) const = default;
  bool operator<(const Permutation& o) const { return entries_ < o.entries_; }

 private:
  struct unchecked_tag {};
  Permutation(unchecked_tag, std::vector<int> entries)
      : entries_(std::move(entries)) {}
  std::vector<int> entries_;

  template <class F>
  friend void enumerate_sn(int n, F&& f);
};

enum class PermStat { inv, maj, des, asc, coinv, comaj, rlmaj, rlcomaj };

PermStat perm_stat_from_name(const std::string& name);
std::string perm_stat_name(PermStat s);

PositionSet des_set(const Permutation& p);
PositionSet asc_set(const Permutation& p);
// All inversion pairs (i, j), i < j, p(i) > p(j), in lex order.
std::vector<std::pair<int, int>> inv_set(const Permutation& p);

// Inversions with a pinned endpoint; positions are validated.
long inv_end_at(const Permutation& p, int j);     // #{i < j : p(i) > p(j)}
long inv_start_at(const Permutation& p, int i);   // #{j > i : p(i) > p(j)}
long coinv_start_at(const Permutation& p, int i); // #{j > i : p(i) < p(j)}

long inv(const Permutation& p);
long maj(const Permutation& p);
long des(const Permutation& p);
long asc(const Permutation& p);
long coinv(const Permutation& p);
long comaj(const Permutation& p);
long rlmaj(const Permutation& p);
long rlcomaj(const Permutation& p);
long stat(const Permutation& p, PermStat which);

enum class TrivialBijection { reverse, complement, reverse_complement };
TrivialBijection trivial_bijection_from_name(const std::string& name);
Permutation trivial_bijection(const Permutation& p, TrivialBijection which);

// Values that are smaller than everything to their right; ascending.
std::vector<int> right_to_left_minima(const Permutation& p);

// Visit all of S_n in lexicographic order (n = 0 visits the empty word).
template <class F>
void enumerate_sn(int n, F&& f) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  do {
    f(Permutation(Permutation::unchecked_tag{}, v));
  } while (std::next_permutation(v.begin(), v.end()));
}

// Text forms.  Emission is compact digits for n <= 9 ("7326415"), otherwise
// space-separated.  parse_word accepts both, plus '*' gap markers after a
// value; it returns (values, starred gap positions).
std::pair<std::vector<int>, PositionSet> parse_word(const std::string& text);
Permutation parse_permutation(const std::string& text);
std::string format_permutation(const Permutation& p);

}  // namespace mahonian
