#include "mahonian/perm.hpp"

#include <cassert>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace mahonian {

bool position_set_contains(const PositionSet& s, int pos) {
  return std::binary_search(s.begin(), s.end(), pos);
}

Permutation::Permutation(std::vector<int> entries)
    : entries_(std::move(entries)) {
  std::vector<int> sorted = entries_;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < static_cast<int>(sorted.size()); ++i) {
    if (sorted[i] != i + 1) {
      throw std::invalid_argument("not a permutation of 1..n");
    }
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("permutation size must be >= 0");
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  return Permutation(unchecked_tag{}, std::move(v));
}

int Permutation::at(int pos) const {
  if (pos < 1 || pos > size()) {
    throw std::out_of_range("permutation position out of range");
  }
  return entries_[pos - 1];
}

PermStat perm_stat_from_name(const std::string& name) {
  if (name == "inv") return PermStat::inv;
  if (name == "maj") return PermStat::maj;
  if (name == "des") return PermStat::des;
  if (name == "asc") return PermStat::asc;
  if (name == "coinv") return PermStat::coinv;
  if (name == "comaj") return PermStat::comaj;
  if (name == "rlmaj") return PermStat::rlmaj;
  if (name == "rlcomaj") return PermStat::rlcomaj;
  throw std::invalid_argument("unknown permutation statistic: " + name);
}

std::string perm_stat_name(PermStat s) {
  switch (s) {
    case PermStat::inv: return "inv";
    case PermStat::maj: return "maj";
    case PermStat::des: return "des";
    case PermStat::asc: return "asc";
    case PermStat::coinv: return "coinv";
    case PermStat::comaj: return "comaj";
    case PermStat::rlmaj: return "rlmaj";
    case PermStat::rlcomaj: return "rlcomaj";
  }
  return "?";
}

PositionSet des_set(const Permutation& p) {
  PositionSet s;
  for (int i = 1; i < p.size(); ++i) {
    if (p.at(i) > p.at(i + 1)) s.push_back(i);
  }
  return s;
}

PositionSet asc_set(const Permutation& p) {
  PositionSet s;
  for (int i = 1; i < p.size(); ++i) {
    if (p.at(i) < p.at(i + 1)) s.push_back(i);
  }
  return s;
}

std::vector<std::pair<int, int>> inv_set(const Permutation& p) {
  std::vector<std::pair<int, int>> s;
  for (int i = 1; i <= p.size(); ++i) {
    for (int j = i + 1; j <= p.size(); ++j) {
      if (p.at(i) > p.at(j)) s.emplace_back(i, j);
    }
  }
  return s;
}

long inv_end_at(const Permutation& p, int j) {
  if (j < 1 || j > p.size()) {
    throw std::out_of_range("inv_end_at: position out of range");
  }
  long c = 0;
  for (int i = 1; i < j; ++i) {
    if (p.at(i) > p.at(j)) ++c;
  }
  return c;
}

long inv_start_at(const Permutation& p, int i) {
  if (i < 1 || i > p.size()) {
    throw std::out_of_range("inv_start_at: position out of range");
  }
  long c = 0;
  for (int j = i + 1; j <= p.size(); ++j) {
    if (p.at(i) > p.at(j)) ++c;
  }
  return c;
}

long coinv_start_at(const Permutation& p, int i) {
  if (i < 1 || i > p.size()) {
    throw std::out_of_range("coinv_start_at: position out of range");
  }
  long c = 0;
  for (int j = i + 1; j <= p.size(); ++j) {
    if (p.at(i) < p.at(j)) ++c;
  }
  return c;
}

long inv(const Permutation& p) {
  long c = 0;
  for (int j = 2; j <= p.size(); ++j) c += inv_end_at(p, j);
  return c;
}

long maj(const Permutation& p) {
  long c = 0;
  for (int i : des_set(p)) c += i;
  return c;
}

long des(const Permutation& p) {
  return static_cast<long>(des_set(p).size());
}

long asc(const Permutation& p) {
  return static_cast<long>(asc_set(p).size());
}

long coinv(const Permutation& p) {
  const long n = p.size();
  return n * (n - 1) / 2 - inv(p);
}

long comaj(const Permutation& p) {
  long c = 0;
  for (int i : asc_set(p)) c += i;
  return c;
}

long rlmaj(const Permutation& p) {
  long c = 0;
  for (int i : des_set(p)) c += p.size() - i;
  return c;
}

long rlcomaj(const Permutation& p) {
  long c = 0;
  for (int i : asc_set(p)) c += p.size() - i;
  return c;
}

long stat(const Permutation& p, PermStat which) {
  switch (which) {
    case PermStat::inv: return inv(p);
    case PermStat::maj: return maj(p);
    case PermStat::des: return des(p);
    case PermStat::asc: return asc(p);
    case PermStat::coinv: return coinv(p);
    case PermStat::comaj: return comaj(p);
    case PermStat::rlmaj: return rlmaj(p);
    case PermStat::rlcomaj: return rlcomaj(p);
  }
  throw std::invalid_argument("unknown permutation statistic");
}

TrivialBijection trivial_bijection_from_name(const std::string& name) {
  if (name == "reverse") return TrivialBijection::reverse;
  if (name == "complement") return TrivialBijection::complement;
  if (name == "reverse_complement") {
    return TrivialBijection::reverse_complement;
  }
  throw std::invalid_argument("unknown trivial bijection: " + name);
}

Permutation trivial_bijection(const Permutation& p, TrivialBijection which) {
  const int n = p.size();
  std::vector<int> v(n);
  for (int i = 1; i <= n; ++i) {
    switch (which) {
      case TrivialBijection::reverse:
        v[i - 1] = p.at(n + 1 - i);
        break;
      case TrivialBijection::complement:
        v[i - 1] = n + 1 - p.at(i);
        break;
      case TrivialBijection::reverse_complement:
        v[i - 1] = n + 1 - p.at(n + 1 - i);
        break;
    }
  }
  return Permutation(std::move(v));
}

std::vector<int> right_to_left_minima(const Permutation& p) {
  std::vector<int> mins;
  int best = p.size() + 1;
  for (int i = p.size(); i >= 1; --i) {
    if (p.at(i) < best) {
      best = p.at(i);
      mins.push_back(best);
    }
  }
  std::sort(mins.begin(), mins.end());
  return mins;
}

std::pair<std::vector<int>, PositionSet> parse_word(const std::string& text) {
  bool has_space = false;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) has_space = true;
  }
  std::vector<int> values;
  PositionSet stars;
  // Compact form: every digit is a value.  Spaced form: digit runs are
  // values.  Either way '*' stars the gap after the value it follows.
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (ch == '*') {
      if (values.empty()) {
        throw std::invalid_argument("'*' must follow a value");
      }
      const int gap = static_cast<int>(values.size());
      if (!stars.empty() && stars.back() == gap) {
        throw std::invalid_argument("repeated '*' at one gap");
      }
      stars.push_back(gap);
      ++i;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw std::invalid_argument(std::string("unexpected character '") + ch +
                                  "' in word");
    }
    if (has_space) {
      int v = 0;
      while (i < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      values.push_back(v);
    } else {
      values.push_back(ch - '0');
      ++i;
    }
  }
  if (values.empty()) throw std::invalid_argument("empty word");
  return {std::move(values), std::move(stars)};
}

Permutation parse_permutation(const std::string& text) {
  auto [values, stars] = parse_word(text);
  if (!stars.empty()) {
    throw std::invalid_argument("plain permutation cannot carry stars");
  }
  return Permutation(std::move(values));
}

std::string format_permutation(const Permutation& p) {
  std::ostringstream os;
  const bool compact = p.size() <= 9;
  for (int i = 1; i <= p.size(); ++i) {
    if (i > 1 && !compact) os << ' ';
    os << p.at(i);
  }
  return os.str();
}

}  // namespace mahonian
