// Boards with column heights, rook placements with file and non-attacking
// rooks, the cancellation rules and weights, and the placement encodings of
// permutations and starred words.
#pragma once

#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "mahonian/insertion.hpp"
#include "mahonian/laurent.hpp"
#include "mahonian/starred.hpp"

namespace mahonian {

// Columns are 1-based left to right; rows are 1-based bottom to top.
class Board {
 public:
  explicit Board(std::vector<int> heights);
  static Board staircase_b(int n);   // heights 0, 1, ..., n-1
  static Board staircase_st(int n);  // heights 1, 2, ..., n
  int cols() const { return static_cast<int>(heights_.size()); }
  int height(int col) const;  // bounds-checked
  int max_height() const;
  const std::vector<int>& heights() const { return heights_; }
  bool operator==(const Board& o) const = default;

 private:
  std::vector<int> heights_;
};

enum class RookKind { file, na };
RookKind rook_kind_from_name(const std::string& name);
std::string rook_kind_name(RookKind k);

struct Rook {
  int col;
  int row;
  RookKind kind;
  bool operator==(const Rook& o) const = default;
  auto operator<=>(const Rook& o) const = default;
};

// At most one rook per column; non-attacking rooks also have distinct rows.
class RookPlacement {
 public:
  RookPlacement(Board board, std::vector<Rook> rooks);
  const Board& board() const { return board_; }
  const std::vector<Rook>& rooks() const { return rooks_; }  // by column
  int rook_count() const { return static_cast<int>(rooks_.size()); }
  int na_count() const;
  const Rook* rook_in_col(int col) const;  // nullptr if empty column
  bool operator==(const RookPlacement& o) const = default;

 private:
  Board board_;
  std::vector<Rook> rooks_;
};

// How rooks cancel cells.
//   classic:           file rooks take their own cell and everything above;
//                      non-attacking rooks additionally sweep their row to
//                      the right.
//   mixed:             classic, plus each non-attacking rook takes the
//                      bottom cell of its own column.
//   wachs_white:       rooks take only their own cell; non-attacking rooks
//                      also sweep their row to the right (nothing upward).
//   wachs_white_mixed: wachs_white plus the bottom cell of each
//                      non-attacking rook's column.
enum class CancelRule { classic, mixed, wachs_white, wachs_white_mixed };
CancelRule cancel_rule_from_name(const std::string& name);
std::string cancel_rule_name(CancelRule r);

using CellSet = std::set<std::pair<int, int>>;  // (col, row)

CellSet cancellation(const RookPlacement& p, CancelRule rule);
// True when no rook stands on a cell canceled by another rook.
bool placement_self_consistent(const RookPlacement& p, CancelRule rule);

// Uncanceled cells strictly below a rook in its own column, summed.
long unc(const RookPlacement& p, CancelRule rule);
long unc_prime(const RookPlacement& p);  // unc under the classic rule
// (below, above) split of the uncanceled cells in rook columns.
std::pair<long, long> unc_below_above(const RookPlacement& p, CancelRule rule);
Laurent w_pq(const RookPlacement& p, CancelRule rule);  // q^below p^above
// q^below p^(above + #canceled cells).
Laurent W_pq(const RookPlacement& p, CancelRule rule);

// Full file placements on the staircase with heights 1..n encode
// permutations: column c's rook row, minus one, is an insertion label.
Permutation alpha(const RookPlacement& p);
Permutation beta(const RookPlacement& p);
RookPlacement alpha_inverse(const Permutation& p);
RookPlacement beta_inverse(const Permutation& p);

// Starred words as mixed placements: peel by the inv-side insertions,
// bar -> file rook, star -> non-attacking rook, label = uncanceled cells
// below under the mixed rule.  unc(gamma(d)) matches the starred inversion
// count; delta routes through the maj side.
RookPlacement gamma(const DescentStarred& d);
RookPlacement delta(const DescentStarred& d);
DescentStarred gamma_inverse(const RookPlacement& p);
DescentStarred delta_inverse(const RookPlacement& p);

// Mixed placements (non-attacking rows >= 2) as ordered set partitions: a
// non-attacking rook at (c, r) puts c in the block of r-1; file columns
// order the blocks through the embedded staircase.
OrderedSetPartition osp_of_mixed(const RookPlacement& p);

// Column-major enumeration (skip-option first, then rows bottom-up).
void enumerate_file(const Board& b,
                    const std::function<void(const RookPlacement&)>& f);
void enumerate_na(const Board& b, int k,
                  const std::function<void(const RookPlacement&)>& f);
void enumerate_mixed(int n, int k,
                     const std::function<void(const RookPlacement&)>& f);
void enumerate_mixed_prime(int n, int k,
                           const std::function<void(const RookPlacement&)>& f);

// ASCII picture, highest row on top: 'X' non-attacking rook, 'O' file rook,
// '.' canceled cell, ' ' uncanceled cell.
std::string render(const RookPlacement& p, CancelRule rule);

nlohmann::json to_json(const RookPlacement& p);
RookPlacement placement_from_json(const nlohmann::json& j);

}  // namespace mahonian
