// Ordered set partitions and their starred-permutation encodings: descent-
// starred, ascent-starred, and the primed variant whose stars may also sit
// in the sentinel gap after the last letter.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mahonian/perm.hpp"

namespace mahonian {

enum class Flavor { descent, ascent, primed };
Flavor flavor_from_name(const std::string& name);
std::string flavor_name(Flavor f);

// Blocks in their given left-to-right order; each block sorted ascending.
class OrderedSetPartition {
 public:
  explicit OrderedSetPartition(std::vector<std::vector<int>> blocks);
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int n() const;
  int block_count() const { return static_cast<int>(blocks_.size()); }
  bool operator==(const OrderedSetPartition& o) const = default;

 private:
  std::vector<std::vector<int>> blocks_;
};

// sigma with stars on a subset of its descent gaps; a starred gap i glues
// sigma_i and sigma_{i+1} into one decreasing block.
class DescentStarred {
 public:
  DescentStarred(Permutation base, PositionSet stars);
  const Permutation& base() const { return base_; }
  const PositionSet& stars() const { return stars_; }
  int size() const { return base_.size(); }
  int star_count() const { return static_cast<int>(stars_.size()); }
  bool operator==(const DescentStarred& o) const = default;
  bool operator<(const DescentStarred& o) const;

 private:
  Permutation base_;
  PositionSet stars_;
};

// Stars on ascent gaps; blocks read increasing.
class AscentStarred {
 public:
  AscentStarred(Permutation base, PositionSet stars);
  const Permutation& base() const { return base_; }
  const PositionSet& stars() const { return stars_; }
  int size() const { return base_.size(); }
  int star_count() const { return static_cast<int>(stars_.size()); }
  bool operator==(const AscentStarred& o) const = default;
  bool operator<(const AscentStarred& o) const;

 private:
  Permutation base_;
  PositionSet stars_;
};

// Stars on descent gaps or the sentinel gap n (written as a trailing '*').
class PrimedStarred {
 public:
  PrimedStarred(Permutation base, PositionSet stars);
  const Permutation& base() const { return base_; }
  const PositionSet& stars() const { return stars_; }
  int size() const { return base_.size(); }
  int star_count() const { return static_cast<int>(stars_.size()); }
  bool has_sentinel_star() const;
  bool operator==(const PrimedStarred& o) const = default;
  bool operator<(const PrimedStarred& o) const;

 private:
  Permutation base_;
  PositionSet stars_;
};

// Block <-> star conversions.  Reading an OSP with decreasing blocks gives
// the descent form; increasing blocks give the ascent form.
DescentStarred osp_to_descent_starred(const OrderedSetPartition& o);
OrderedSetPartition descent_starred_to_osp(const DescentStarred& d);
AscentStarred osp_to_ascent_starred(const OrderedSetPartition& o);
OrderedSetPartition ascent_starred_to_osp(const AscentStarred& a);

// Inversion pairs that survive starring: (i, j) with i < j, sigma_i >
// sigma_j, j unstarred, and {i..j-1} not all starred.
std::vector<std::pair<int, int>> op_inv_set(const DescentStarred& d);
long op_inv(const DescentStarred& d);
long op_inv_ascent(const AscentStarred& a);
// Star-gap form: maj - sum_{i in S} |Des cap {i..n-1}|.
long op_maj(const DescentStarred& d);
// Descent-sum form: sum over unstarred descents i of (i - |S cap {1..i}|);
// must agree with op_maj pointwise.
long op_maj_by_descents(const DescentStarred& d);

enum class ExtStat { op_coinv, op_comaj, op_rlmaj, op_rlcomaj };
ExtStat ext_stat_from_name(const std::string& name);
// op_coinv and op_rlmaj live on the descent flavor; op_coinv, op_comaj and
// op_rlcomaj on the ascent flavor.  Flavor mismatches throw.
long extended_stat(const DescentStarred& d, ExtStat which);
long extended_stat(const AscentStarred& a, ExtStat which);

long inv_prime(const PrimedStarred& x);
long maj_prime(const PrimedStarred& x);

// Block-minimum inversion statistics on ordered set partitions; op_inv and
// op_coinv are their starred-word shadows.
long ros(const OrderedSetPartition& o);
long los(const OrderedSetPartition& o);

std::vector<int> right_to_left_minima(const DescentStarred& d);
std::vector<int> right_to_left_minima(const AscentStarred& a);
std::vector<int> right_to_left_minima(const PrimedStarred& x);

// Enumeration in lex order on the base word, then lex on the star set.
// descent/ascent: 0 <= k <= max(n-1, 0); primed: 0 <= k <= n.
void enumerate_starred_descent(int n, int k,
                               const std::function<void(const DescentStarred&)>& f);
void enumerate_starred_ascent(int n, int k,
                              const std::function<void(const AscentStarred&)>& f);
void enumerate_starred_primed(int n, int k,
                              const std::function<void(const PrimedStarred&)>& f);

// Text forms: values joined by '*' at starred gaps and ' ' otherwise
// ("7*3*2 6 4*1 5"); OSPs as "237|6|14|5" (spaces inside blocks once any
// value exceeds 9).
std::string format(const DescentStarred& d);
std::string format(const AscentStarred& a);
std::string format(const PrimedStarred& x);
std::string format(const OrderedSetPartition& o);
DescentStarred parse_descent_starred(const std::string& text);
AscentStarred parse_ascent_starred(const std::string& text);
PrimedStarred parse_primed_starred(const std::string& text);
OrderedSetPartition parse_osp(const std::string& text);

nlohmann::json to_json(const DescentStarred& d);
nlohmann::json to_json(const AscentStarred& a);
nlohmann::json to_json(const PrimedStarred& x);
// Reads {"base": [...], "stars": [...], "flavor": "..."}.
Flavor starred_json_flavor(const nlohmann::json& j);
DescentStarred descent_starred_from_json(const nlohmann::json& j);
AscentStarred ascent_starred_from_json(const nlohmann::json& j);
PrimedStarred primed_starred_from_json(const nlohmann::json& j);

}  // namespace mahonian
