#include "mahonian/starred.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mahonian {

namespace {

PositionSet normalize_stars(PositionSet stars) {
  std::sort(stars.begin(), stars.end());
  if (std::adjacent_find(stars.begin(), stars.end()) != stars.end()) {
    throw std::invalid_argument("duplicate star position");
  }
  return stars;
}

void require_subset(const PositionSet& stars, const PositionSet& allowed,
                    const char* what) {
  for (int s : stars) {
    if (!position_set_contains(allowed, s)) {
      throw std::invalid_argument(what);
    }
  }
}

}  // namespace

Flavor flavor_from_name(const std::string& name) {
  if (name == "descent") return Flavor::descent;
  if (name == "ascent") return Flavor::ascent;
  if (name == "primed") return Flavor::primed;
  throw std::invalid_argument("unknown flavor: " + name);
}

std::string flavor_name(Flavor f) {
  switch (f) {
    case Flavor::descent: return "descent";
    case Flavor::ascent: return "ascent";
    case Flavor::primed: return "primed";
  }
  return "?";
}

OrderedSetPartition::OrderedSetPartition(std::vector<std::vector<int>> blocks)
    : blocks_(std::move(blocks)) {
  std::vector<int> all;
  for (auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("empty block");
    std::sort(b.begin(), b.end());
    all.insert(all.end(), b.begin(), b.end());
  }
  std::sort(all.begin(), all.end());
  for (int i = 0; i < static_cast<int>(all.size()); ++i) {
    if (all[i] != i + 1) {
      throw std::invalid_argument("blocks must partition 1..n");
    }
  }
}

int OrderedSetPartition::n() const {
  int total = 0;
  for (const auto& b : blocks_) total += static_cast<int>(b.size());
  return total;
}

DescentStarred::DescentStarred(Permutation base, PositionSet stars)
    : base_(std::move(base)), stars_(normalize_stars(std::move(stars))) {
  require_subset(stars_, des_set(base_), "stars must sit on descent gaps");
}

bool DescentStarred::operator<(const DescentStarred& o) const {
  if (base_ < o.base_) return true;
  if (o.base_ < base_) return false;
  return stars_ < o.stars_;
}

AscentStarred::AscentStarred(Permutation base, PositionSet stars)
    : base_(std::move(base)), stars_(normalize_stars(std::move(stars))) {
  require_subset(stars_, asc_set(base_), "stars must sit on ascent gaps");
}

bool AscentStarred::operator<(const AscentStarred& o) const {
  if (base_ < o.base_) return true;
  if (o.base_ < base_) return false;
  return stars_ < o.stars_;
}

PrimedStarred::PrimedStarred(Permutation base, PositionSet stars)
    : base_(std::move(base)), stars_(normalize_stars(std::move(stars))) {
  PositionSet allowed = des_set(base_);
  if (base_.size() >= 1) allowed.push_back(base_.size());
  require_subset(stars_, allowed,
                 "stars must sit on descent gaps or the sentinel gap");
}

bool PrimedStarred::has_sentinel_star() const {
  return !stars_.empty() && stars_.back() == base_.size() && base_.size() > 0;
}

bool PrimedStarred::operator<(const PrimedStarred& o) const {
  if (base_ < o.base_) return true;
  if (o.base_ < base_) return false;
  return stars_ < o.stars_;
}

DescentStarred osp_to_descent_starred(const OrderedSetPartition& o) {
  std::vector<int> word;
  PositionSet stars;
  for (const auto& b : o.blocks()) {
    for (int i = static_cast<int>(b.size()) - 1; i >= 0; --i) {
      word.push_back(b[i]);
      if (i > 0) stars.push_back(static_cast<int>(word.size()));
    }
  }
  return DescentStarred(Permutation(std::move(word)), std::move(stars));
}

OrderedSetPartition descent_starred_to_osp(const DescentStarred& d) {
  std::vector<std::vector<int>> blocks;
  std::vector<int> cur;
  for (int i = 1; i <= d.size(); ++i) {
    cur.push_back(d.base().at(i));
    if (!position_set_contains(d.stars(), i)) {
      blocks.push_back(cur);
      cur.clear();
    }
  }
  assert(cur.empty());
  return OrderedSetPartition(std::move(blocks));
}

AscentStarred osp_to_ascent_starred(const OrderedSetPartition& o) {
  std::vector<int> word;
  PositionSet stars;
  for (const auto& b : o.blocks()) {
    for (int i = 0; i < static_cast<int>(b.size()); ++i) {
      word.push_back(b[i]);
      if (i + 1 < static_cast<int>(b.size())) {
        stars.push_back(static_cast<int>(word.size()));
      }
    }
  }
  return AscentStarred(Permutation(std::move(word)), std::move(stars));
}

OrderedSetPartition ascent_starred_to_osp(const AscentStarred& a) {
  std::vector<std::vector<int>> blocks;
  std::vector<int> cur;
  for (int i = 1; i <= a.size(); ++i) {
    cur.push_back(a.base().at(i));
    if (!position_set_contains(a.stars(), i)) {
      blocks.push_back(cur);
      cur.clear();
    }
  }
  assert(cur.empty());
  return OrderedSetPartition(std::move(blocks));
}

std::vector<std::pair<int, int>> op_inv_set(const DescentStarred& d) {
  const Permutation& p = d.base();
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= p.size(); ++i) {
    for (int j = i + 1; j <= p.size(); ++j) {
      if (p.at(i) <= p.at(j)) continue;
      if (position_set_contains(d.stars(), j)) continue;
      bool all_starred = true;
      for (int g = i; g < j; ++g) {
        if (!position_set_contains(d.stars(), g)) {
          all_starred = false;
          break;
        }
      }
      if (!all_starred) out.emplace_back(i, j);
    }
  }
  return out;
}

long op_inv(const DescentStarred& d) {
  long r = inv(d.base());
  for (int i : d.stars()) r -= 1 + inv_end_at(d.base(), i);
  return r;
}

long op_inv_ascent(const AscentStarred& a) {
  long r = inv(a.base());
  for (int i : a.stars()) r -= inv_end_at(a.base(), i + 1);
  return r;
}

long op_maj(const DescentStarred& d) {
  const PositionSet ds = des_set(d.base());
  long r = maj(d.base());
  for (int i : d.stars()) {
    for (int x : ds) {
      if (x >= i) --r;
    }
  }
  return r;
}

long op_maj_by_descents(const DescentStarred& d) {
  long r = 0;
  for (int i : des_set(d.base())) {
    long stars_left = 0;
    for (int s : d.stars()) {
      if (s <= i) ++stars_left;
    }
    r += i - stars_left;
  }
  return r;
}

ExtStat ext_stat_from_name(const std::string& name) {
  if (name == "op_coinv") return ExtStat::op_coinv;
  if (name == "op_comaj") return ExtStat::op_comaj;
  if (name == "op_rlmaj") return ExtStat::op_rlmaj;
  if (name == "op_rlcomaj") return ExtStat::op_rlcomaj;
  throw std::invalid_argument("unknown extended statistic: " + name);
}

long extended_stat(const DescentStarred& d, ExtStat which) {
  const Permutation& p = d.base();
  switch (which) {
    case ExtStat::op_coinv: {
      long r = coinv(p);
      for (int i : d.stars()) r -= coinv_start_at(p, i);
      return r;
    }
    case ExtStat::op_rlmaj: {
      const PositionSet ds = des_set(p);
      long r = rlmaj(p);
      for (int i : d.stars()) {
        for (int x : ds) {
          if (x <= i) --r;
        }
      }
      return r;
    }
    default:
      throw std::invalid_argument(
          "statistic requires the ascent flavor, got descent");
  }
}

long extended_stat(const AscentStarred& a, ExtStat which) {
  const Permutation& p = a.base();
  switch (which) {
    case ExtStat::op_coinv: {
      long r = coinv(p);
      for (int i : a.stars()) r -= 1 + coinv_start_at(p, i + 1);
      return r;
    }
    case ExtStat::op_comaj: {
      const PositionSet as = asc_set(p);
      long r = comaj(p);
      for (int i : a.stars()) {
        for (int x : as) {
          if (x >= i) --r;
        }
      }
      return r;
    }
    case ExtStat::op_rlcomaj: {
      const PositionSet as = asc_set(p);
      long r = rlcomaj(p);
      for (int i : a.stars()) {
        for (int x : as) {
          if (x <= i) --r;
        }
      }
      return r;
    }
    default:
      throw std::invalid_argument(
          "statistic requires the descent flavor, got ascent");
  }
}

long inv_prime(const PrimedStarred& x) {
  long r = inv(x.base());
  for (int i : x.stars()) r -= inv_end_at(x.base(), i);
  return r;
}

long maj_prime(const PrimedStarred& x) {
  const PositionSet ds = des_set(x.base());
  long r = maj(x.base());
  for (int i : x.stars()) {
    for (int d : ds) {
      if (d >= i) --r;
    }
  }
  return r;
}

long ros(const OrderedSetPartition& o) {
  long r = 0;
  const auto& blocks = o.blocks();
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    const int opener = blocks[bi].front();
    for (std::size_t aj = 0; aj < bi; ++aj) {
      for (int a : blocks[aj]) {
        if (a > opener) ++r;
      }
    }
  }
  return r;
}

long los(const OrderedSetPartition& o) {
  long r = 0;
  const auto& blocks = o.blocks();
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    const int opener = blocks[bi].front();
    for (std::size_t bj = bi + 1; bj < blocks.size(); ++bj) {
      for (int b : blocks[bj]) {
        if (b > opener) ++r;
      }
    }
  }
  return r;
}

std::vector<int> right_to_left_minima(const DescentStarred& d) {
  return right_to_left_minima(d.base());
}

std::vector<int> right_to_left_minima(const AscentStarred& a) {
  return right_to_left_minima(a.base());
}

std::vector<int> right_to_left_minima(const PrimedStarred& x) {
  return right_to_left_minima(x.base());
}

namespace {

// Visit all k-subsets of pool (sorted) in lex order.
void for_each_subset(const PositionSet& pool, int k,
                     const std::function<void(const PositionSet&)>& f) {
  const int m = static_cast<int>(pool.size());
  if (k < 0 || k > m) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    PositionSet s(k);
    for (int i = 0; i < k; ++i) s[i] = pool[idx[i]];
    f(s);
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

void enumerate_starred_descent(
    int n, int k, const std::function<void(const DescentStarred&)>& f) {
  if (n < 0 || k < 0) throw std::invalid_argument("need n, k >= 0");
  enumerate_sn(n, [&](const Permutation& p) {
    for_each_subset(des_set(p), k, [&](const PositionSet& s) {
      f(DescentStarred(p, s));
    });
  });
}

void enumerate_starred_ascent(
    int n, int k, const std::function<void(const AscentStarred&)>& f) {
  if (n < 0 || k < 0) throw std::invalid_argument("need n, k >= 0");
  enumerate_sn(n, [&](const Permutation& p) {
    for_each_subset(asc_set(p), k, [&](const PositionSet& s) {
      f(AscentStarred(p, s));
    });
  });
}

void enumerate_starred_primed(
    int n, int k, const std::function<void(const PrimedStarred&)>& f) {
  if (n < 0 || k < 0) throw std::invalid_argument("need n, k >= 0");
  enumerate_sn(n, [&](const Permutation& p) {
    PositionSet pool = des_set(p);
    if (n >= 1) pool.push_back(n);
    for_each_subset(pool, k, [&](const PositionSet& s) {
      f(PrimedStarred(p, s));
    });
  });
}

namespace {

std::string format_word(const Permutation& p, const PositionSet& stars) {
  std::ostringstream os;
  for (int i = 1; i <= p.size(); ++i) {
    os << p.at(i);
    if (position_set_contains(stars, i)) {
      os << '*';
    } else if (i < p.size()) {
      os << ' ';
    }
  }
  return os.str();
}

}  // namespace

std::string format(const DescentStarred& d) {
  return format_word(d.base(), d.stars());
}

std::string format(const AscentStarred& a) {
  return format_word(a.base(), a.stars());
}

std::string format(const PrimedStarred& x) {
  return format_word(x.base(), x.stars());
}

std::string format(const OrderedSetPartition& o) {
  const bool compact = o.n() <= 9;
  std::ostringstream os;
  bool first_block = true;
  for (const auto& b : o.blocks()) {
    if (!first_block) os << '|';
    first_block = false;
    bool first = true;
    for (int v : b) {
      if (!first && !compact) os << ' ';
      first = false;
      os << v;
    }
  }
  return os.str();
}

DescentStarred parse_descent_starred(const std::string& text) {
  auto [values, stars] = parse_word(text);
  return DescentStarred(Permutation(std::move(values)), std::move(stars));
}

AscentStarred parse_ascent_starred(const std::string& text) {
  auto [values, stars] = parse_word(text);
  return AscentStarred(Permutation(std::move(values)), std::move(stars));
}

PrimedStarred parse_primed_starred(const std::string& text) {
  auto [values, stars] = parse_word(text);
  return PrimedStarred(Permutation(std::move(values)), std::move(stars));
}

OrderedSetPartition parse_osp(const std::string& text) {
  bool has_space = false;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) has_space = true;
  }
  std::vector<std::vector<int>> blocks;
  std::vector<int> cur;
  std::size_t i = 0;
  auto flush = [&]() {
    if (cur.empty()) throw std::invalid_argument("empty block in partition");
    blocks.push_back(cur);
    cur.clear();
  };
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == '|') {
      flush();
      ++i;
    } else if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      if (has_space) {
        int v = 0;
        while (i < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[i]))) {
          v = v * 10 + (text[i] - '0');
          ++i;
        }
        cur.push_back(v);
      } else {
        cur.push_back(ch - '0');
        ++i;
      }
    } else {
      throw std::invalid_argument(std::string("unexpected character '") + ch +
                                  "' in partition");
    }
  }
  flush();
  return OrderedSetPartition(std::move(blocks));
}

namespace {

nlohmann::json starred_json(const Permutation& base, const PositionSet& stars,
                            Flavor flavor) {
  return {{"base", base.entries()},
          {"stars", stars},
          {"flavor", flavor_name(flavor)}};
}

std::pair<Permutation, PositionSet> starred_json_parts(
    const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("base") || !j.contains("stars")) {
    throw std::invalid_argument(
        "starred JSON needs \"base\" and \"stars\" arrays");
  }
  return {Permutation(j["base"].get<std::vector<int>>()),
          j["stars"].get<PositionSet>()};
}

}  // namespace

nlohmann::json to_json(const DescentStarred& d) {
  return starred_json(d.base(), d.stars(), Flavor::descent);
}

nlohmann::json to_json(const AscentStarred& a) {
  return starred_json(a.base(), a.stars(), Flavor::ascent);
}

nlohmann::json to_json(const PrimedStarred& x) {
  return starred_json(x.base(), x.stars(), Flavor::primed);
}

Flavor starred_json_flavor(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("flavor")) {
    throw std::invalid_argument("starred JSON needs a \"flavor\" field");
  }
  return flavor_from_name(j["flavor"].get<std::string>());
}

DescentStarred descent_starred_from_json(const nlohmann::json& j) {
  auto [base, stars] = starred_json_parts(j);
  return DescentStarred(std::move(base), std::move(stars));
}

AscentStarred ascent_starred_from_json(const nlohmann::json& j) {
  auto [base, stars] = starred_json_parts(j);
  return AscentStarred(std::move(base), std::move(stars));
}

PrimedStarred primed_starred_from_json(const nlohmann::json& j) {
  auto [base, stars] = starred_json_parts(j);
  return PrimedStarred(std::move(base), std::move(stars));
}

}  // namespace mahonian
