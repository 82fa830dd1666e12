#include "mahonian/rook.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>
#include <stdexcept>

namespace mahonian {

Board::Board(std::vector<int> heights) : heights_(std::move(heights)) {
  for (int h : heights_) {
    if (h < 0) throw std::invalid_argument("column height must be >= 0");
  }
}

Board Board::staircase_b(int n) {
  if (n < 0) throw std::invalid_argument("board size must be >= 0");
  std::vector<int> h(n);
  for (int i = 0; i < n; ++i) h[i] = i;
  return Board(std::move(h));
}

Board Board::staircase_st(int n) {
  if (n < 0) throw std::invalid_argument("board size must be >= 0");
  std::vector<int> h(n);
  for (int i = 0; i < n; ++i) h[i] = i + 1;
  return Board(std::move(h));
}

int Board::height(int col) const {
  if (col < 1 || col > cols()) {
    throw std::out_of_range("column out of range");
  }
  return heights_[col - 1];
}

int Board::max_height() const {
  int m = 0;
  for (int h : heights_) m = std::max(m, h);
  return m;
}

RookKind rook_kind_from_name(const std::string& name) {
  if (name == "file") return RookKind::file;
  if (name == "na") return RookKind::na;
  throw std::invalid_argument("unknown rook kind: " + name);
}

std::string rook_kind_name(RookKind k) {
  return k == RookKind::file ? "file" : "na";
}

RookPlacement::RookPlacement(Board board, std::vector<Rook> rooks)
    : board_(std::move(board)), rooks_(std::move(rooks)) {
  std::sort(rooks_.begin(), rooks_.end(),
            [](const Rook& a, const Rook& b) { return a.col < b.col; });
  std::set<int> na_rows;
  int prev_col = 0;
  for (const Rook& r : rooks_) {
    if (r.col == prev_col) {
      throw std::invalid_argument("two rooks in one column");
    }
    prev_col = r.col;
    if (r.col < 1 || r.col > board_.cols() || r.row < 1 ||
        r.row > board_.height(r.col)) {
      throw std::invalid_argument("rook outside the board");
    }
    if (r.kind == RookKind::na && !na_rows.insert(r.row).second) {
      throw std::invalid_argument("two non-attacking rooks share a row");
    }
  }
}

int RookPlacement::na_count() const {
  int k = 0;
  for (const Rook& r : rooks_) {
    if (r.kind == RookKind::na) ++k;
  }
  return k;
}

const Rook* RookPlacement::rook_in_col(int col) const {
  for (const Rook& r : rooks_) {
    if (r.col == col) return &r;
  }
  return nullptr;
}

CancelRule cancel_rule_from_name(const std::string& name) {
  if (name == "classic") return CancelRule::classic;
  if (name == "mixed") return CancelRule::mixed;
  if (name == "wachs_white") return CancelRule::wachs_white;
  if (name == "wachs_white_mixed") return CancelRule::wachs_white_mixed;
  throw std::invalid_argument("unknown cancellation rule: " + name);
}

std::string cancel_rule_name(CancelRule r) {
  switch (r) {
    case CancelRule::classic: return "classic";
    case CancelRule::mixed: return "mixed";
    case CancelRule::wachs_white: return "wachs_white";
    case CancelRule::wachs_white_mixed: return "wachs_white_mixed";
  }
  return "?";
}

namespace {

void cancel_for_rook(const Board& b, const Rook& r, CancelRule rule,
                     CellSet& out) {
  const bool upward =
      rule == CancelRule::classic || rule == CancelRule::mixed;
  const bool bottom =
      rule == CancelRule::mixed || rule == CancelRule::wachs_white_mixed;
  out.insert({r.col, r.row});
  if (upward) {
    for (int rr = r.row + 1; rr <= b.height(r.col); ++rr) {
      out.insert({r.col, rr});
    }
  }
  if (r.kind == RookKind::na) {
    for (int cc = r.col + 1; cc <= b.cols(); ++cc) {
      if (b.height(cc) >= r.row) out.insert({cc, r.row});
    }
    if (bottom && b.height(r.col) >= 1) out.insert({r.col, 1});
  }
}

}  // namespace

CellSet cancellation(const RookPlacement& p, CancelRule rule) {
  CellSet out;
  for (const Rook& r : p.rooks()) {
    cancel_for_rook(p.board(), r, rule, out);
  }
  return out;
}

bool placement_self_consistent(const RookPlacement& p, CancelRule rule) {
  for (const Rook& r : p.rooks()) {
    CellSet others;
    for (const Rook& o : p.rooks()) {
      if (!(o == r)) cancel_for_rook(p.board(), o, rule, others);
    }
    if (others.count({r.col, r.row})) return false;
  }
  return true;
}

long unc(const RookPlacement& p, CancelRule rule) {
  return unc_below_above(p, rule).first;
}

long unc_prime(const RookPlacement& p) {
  return unc(p, CancelRule::classic);
}

std::pair<long, long> unc_below_above(const RookPlacement& p,
                                      CancelRule rule) {
  const CellSet mask = cancellation(p, rule);
  long below = 0;
  long above = 0;
  for (const Rook& r : p.rooks()) {
    for (int rr = 1; rr < r.row; ++rr) {
      if (!mask.count({r.col, rr})) ++below;
    }
    for (int rr = r.row + 1; rr <= p.board().height(r.col); ++rr) {
      if (!mask.count({r.col, rr})) ++above;
    }
  }
  return {below, above};
}

Laurent w_pq(const RookPlacement& p, CancelRule rule) {
  auto [below, above] = unc_below_above(p, rule);
  return Laurent::monomial(1, static_cast<int>(below),
                           static_cast<int>(above));
}

Laurent W_pq(const RookPlacement& p, CancelRule rule) {
  auto [below, above] = unc_below_above(p, rule);
  const long canceled = static_cast<long>(cancellation(p, rule).size());
  return Laurent::monomial(1, static_cast<int>(below),
                           static_cast<int>(above + canceled));
}

namespace {

void require_full_file_staircase(const RookPlacement& p) {
  const int n = p.board().cols();
  if (!(p.board() == Board::staircase_st(n))) {
    throw std::invalid_argument("expected the staircase with heights 1..n");
  }
  if (p.rook_count() != n) {
    throw std::invalid_argument("expected one rook in every column");
  }
  for (const Rook& r : p.rooks()) {
    if (r.kind != RookKind::file) {
      throw std::invalid_argument("expected file rooks only");
    }
  }
}

}  // namespace

Permutation alpha(const RookPlacement& p) {
  require_full_file_staircase(p);
  Permutation s;
  for (const Rook& r : p.rooks()) {
    s = phi_inv(r.row - 1, s);
  }
  return s;
}

Permutation beta(const RookPlacement& p) {
  require_full_file_staircase(p);
  Permutation s;
  for (const Rook& r : p.rooks()) {
    s = phi_maj(r.row - 1, s);
  }
  return s;
}

namespace {

RookPlacement file_encoding(const Permutation& p,
                            std::pair<int, Permutation> (*peel)(
                                const Permutation&)) {
  const int n = p.size();
  std::vector<Rook> rooks(n);
  Permutation cur = p;
  for (int c = n; c >= 1; --c) {
    auto [label, reduced] = peel(cur);
    rooks[c - 1] = Rook{c, label + 1, RookKind::file};
    cur = reduced;
  }
  return RookPlacement(Board::staircase_st(n), std::move(rooks));
}

}  // namespace

RookPlacement alpha_inverse(const Permutation& p) {
  return file_encoding(p, phi_inv_inverse);
}

RookPlacement beta_inverse(const Permutation& p) {
  return file_encoding(p, phi_maj_inverse);
}

namespace {

// Rows of non-attacking rooks placed so far (they cancel rightward).
std::set<int> na_rows_of(const std::vector<Rook>& rooks) {
  std::set<int> rows;
  for (const Rook& r : rooks) {
    if (r.kind == RookKind::na) rows.insert(r.row);
  }
  return rows;
}

// Place the rook of column col so that exactly `want` uncanceled cells of
// that column lie below it under the mixed rule.  min_row is 2 for the
// non-attacking rooks of a mixed placement, 1 when the bottom row is open.
Rook place_with_unc_below(const std::vector<Rook>& left, int col,
                          RookKind kind, int want, int min_row) {
  const std::set<int> na_rows = na_rows_of(left);
  const int lo = kind == RookKind::na ? min_row : 1;
  for (int r = lo; r <= col; ++r) {
    if (na_rows.count(r)) continue;  // the cell is canceled from the left
    long below = 0;
    for (int rr = 1; rr < r; ++rr) {
      if (na_rows.count(rr)) continue;
      if (kind == RookKind::na && rr == 1) continue;  // own bottom cancel
      ++below;
    }
    if (below == want) return Rook{col, r, kind};
  }
  throw std::invalid_argument("no slot with the requested cell count");
}

}  // namespace

RookPlacement gamma(const DescentStarred& d) {
  const int n = d.size();
  std::vector<Rook> rooks;
  rooks.reserve(n);
  std::vector<std::pair<int, RookKind>> peels;  // label, kind; bottom-up
  DescentStarred cur = d;
  while (cur.size() >= 1) {
    if (max_is_starred(cur)) {
      auto [label, reduced] = phi_star_inv_inverse(cur);
      peels.emplace_back(label, RookKind::na);
      cur = reduced;
    } else {
      auto [label, reduced] = phi_bar_inv_inverse(cur);
      peels.emplace_back(label, RookKind::file);
      cur = reduced;
    }
  }
  for (int c = 1; c <= n; ++c) {
    const auto& [label, kind] = peels[n - c];
    rooks.push_back(place_with_unc_below(rooks, c, kind, label, 2));
  }
  return RookPlacement(Board::staircase_st(n), std::move(rooks));
}

RookPlacement delta(const DescentStarred& d) {
  return gamma(psi_osp_inverse(d));
}

DescentStarred gamma_inverse(const RookPlacement& p) {
  const int n = p.board().cols();
  if (!(p.board() == Board::staircase_st(n)) || p.rook_count() != n) {
    throw std::invalid_argument(
        "expected a full placement on the staircase with heights 1..n");
  }
  if (!placement_self_consistent(p, CancelRule::mixed)) {
    throw std::invalid_argument("rook stands on a canceled cell");
  }
  const CellSet mask = cancellation(p, CancelRule::mixed);
  DescentStarred cur(Permutation(), {});
  for (int c = 1; c <= n; ++c) {
    const Rook* r = p.rook_in_col(c);
    assert(r != nullptr);
    long below = 0;
    for (int rr = 1; rr < r->row; ++rr) {
      if (!mask.count({c, rr})) ++below;
    }
    const int label = static_cast<int>(below);
    cur = r->kind == RookKind::na ? phi_star_inv(label, cur)
                                  : phi_bar_inv(label, cur);
  }
  return cur;
}

DescentStarred delta_inverse(const RookPlacement& p) {
  return psi_osp(gamma_inverse(p));
}

OrderedSetPartition osp_of_mixed(const RookPlacement& p) {
  const int n = p.board().cols();
  if (!(p.board() == Board::staircase_st(n)) || p.rook_count() != n) {
    throw std::invalid_argument(
        "expected a full placement on the staircase with heights 1..n");
  }
  if (!placement_self_consistent(p, CancelRule::mixed)) {
    throw std::invalid_argument("rook stands on a canceled cell");
  }
  // A non-attacking rook at (c, r) declares r-1 the predecessor of c inside
  // one block; the union-find root is the block minimum.
  std::vector<int> parent(n + 1);
  for (int v = 0; v <= n; ++v) parent[v] = v;
  std::function<int(int)> find = [&](int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  std::vector<Rook> na;
  std::vector<int> file_cols;
  for (const Rook& r : p.rooks()) {
    if (r.kind == RookKind::na) {
      if (r.row < 2) {
        throw std::invalid_argument(
            "mixed placements keep non-attacking rooks off the bottom row");
      }
      na.push_back(r);
      const int a = find(r.row - 1);
      const int b = find(r.col);
      parent[std::max(a, b)] = std::min(a, b);
    } else {
      file_cols.push_back(r.col);
    }
  }
  std::map<int, std::vector<int>> blocks;
  for (int v = 1; v <= n; ++v) blocks[find(v)].push_back(v);
  std::vector<int> mins;
  for (const auto& [root, members] : blocks) {
    (void)members;
    mins.push_back(root);
  }
  // The file columns, re-indexed through the cells the non-attacking rooks
  // leave available, form a staircase placement: read it as a permutation.
  const RookPlacement na_only(p.board(), na);
  const CellSet na_mask = cancellation(na_only, CancelRule::mixed);
  const int m = static_cast<int>(file_cols.size());
  std::vector<Rook> embedded(m);
  for (int t = 1; t <= m; ++t) {
    const int c = file_cols[t - 1];
    const Rook* r = p.rook_in_col(c);
    int s = 0;
    bool found = false;
    for (int rr = 1; rr <= p.board().height(c); ++rr) {
      if (na_mask.count({c, rr})) continue;
      ++s;
      if (rr == r->row) {
        found = true;
        break;
      }
    }
    assert(found && "file rook must sit on an available cell");
    embedded[t - 1] = Rook{t, s, RookKind::file};
  }
  const Permutation sigma =
      alpha(RookPlacement(Board::staircase_st(m), std::move(embedded)));
  std::vector<std::vector<int>> ordered;
  ordered.reserve(mins.size());
  for (int t = 1; t <= m; ++t) {
    ordered.push_back(blocks.at(mins[sigma.at(t) - 1]));
  }
  return OrderedSetPartition(std::move(ordered));
}

void enumerate_file(const Board& b,
                    const std::function<void(const RookPlacement&)>& f) {
  const int n = b.cols();
  std::vector<Rook> rooks;
  rooks.reserve(n);
  std::function<void(int)> rec = [&](int c) {
    if (c > n) {
      f(RookPlacement(b, rooks));
      return;
    }
    for (int r = 1; r <= b.height(c); ++r) {
      rooks.push_back(Rook{c, r, RookKind::file});
      rec(c + 1);
      rooks.pop_back();
    }
  };
  rec(1);
}

void enumerate_na(const Board& b, int k,
                  const std::function<void(const RookPlacement&)>& f) {
  if (k < 0) throw std::invalid_argument("rook count must be >= 0");
  const int n = b.cols();
  std::vector<Rook> rooks;
  std::set<int> used_rows;
  std::function<void(int)> rec = [&](int c) {
    const int placed = static_cast<int>(rooks.size());
    if (placed == k) {
      f(RookPlacement(b, rooks));
      return;
    }
    if (c > n || k - placed > n - c + 1) return;
    rec(c + 1);  // skip this column
    for (int r = 1; r <= b.height(c); ++r) {
      if (used_rows.count(r)) continue;
      rooks.push_back(Rook{c, r, RookKind::na});
      used_rows.insert(r);
      rec(c + 1);
      used_rows.erase(r);
      rooks.pop_back();
    }
  };
  rec(1);
}

namespace {

void enumerate_mixed_impl(int n, int k, int min_na_row,
                          const std::function<void(const RookPlacement&)>& f) {
  if (n < 0 || k < 0) throw std::invalid_argument("need n, k >= 0");
  const Board b = Board::staircase_st(n);
  std::vector<Rook> rooks;
  std::set<int> na_rows;
  std::function<void(int)> rec = [&](int c) {
    const int placed_na =
        static_cast<int>(na_rows.size());
    if (c > n) {
      if (placed_na == k) f(RookPlacement(b, rooks));
      return;
    }
    if (k - placed_na > n - c + 1) return;
    for (int r = 1; r <= c; ++r) {  // file rook, cell must be open
      if (na_rows.count(r)) continue;
      rooks.push_back(Rook{c, r, RookKind::file});
      rec(c + 1);
      rooks.pop_back();
    }
    if (placed_na < k) {
      for (int r = min_na_row; r <= c; ++r) {
        if (na_rows.count(r)) continue;
        rooks.push_back(Rook{c, r, RookKind::na});
        na_rows.insert(r);
        rec(c + 1);
        na_rows.erase(r);
        rooks.pop_back();
      }
    }
  };
  rec(1);
}

}  // namespace

void enumerate_mixed(int n, int k,
                     const std::function<void(const RookPlacement&)>& f) {
  enumerate_mixed_impl(n, k, 2, f);
}

void enumerate_mixed_prime(int n, int k,
                           const std::function<void(const RookPlacement&)>& f) {
  enumerate_mixed_impl(n, k, 1, f);
}

std::string render(const RookPlacement& p, CancelRule rule) {
  const Board& b = p.board();
  const CellSet mask = cancellation(p, rule);
  std::ostringstream os;
  for (int r = b.max_height(); r >= 1; --r) {
    std::string line;
    for (int c = 1; c <= b.cols(); ++c) {
      if (c > 1) line += ' ';
      if (b.height(c) < r) {
        line += ' ';
        continue;
      }
      const Rook* rook = p.rook_in_col(c);
      if (rook != nullptr && rook->row == r) {
        line += rook->kind == RookKind::na ? 'X' : 'O';
      } else if (mask.count({c, r})) {
        line += '.';
      } else {
        line += ' ';
      }
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line;
    if (r > 1) os << '\n';
  }
  return os.str();
}

nlohmann::json to_json(const RookPlacement& p) {
  nlohmann::json rooks = nlohmann::json::array();
  for (const Rook& r : p.rooks()) {
    rooks.push_back(
        {{"col", r.col}, {"row", r.row}, {"kind", rook_kind_name(r.kind)}});
  }
  return {{"heights", p.board().heights()}, {"rooks", rooks}};
}

RookPlacement placement_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("heights") || !j.contains("rooks")) {
    throw std::invalid_argument(
        "placement JSON needs \"heights\" and \"rooks\"");
  }
  Board b(j["heights"].get<std::vector<int>>());
  std::vector<Rook> rooks;
  for (const auto& r : j["rooks"]) {
    rooks.push_back(Rook{r.at("col").get<int>(), r.at("row").get<int>(),
                         rook_kind_from_name(r.at("kind").get<std::string>())});
  }
  return RookPlacement(std::move(b), std::move(rooks));
}

}  // namespace mahonian
