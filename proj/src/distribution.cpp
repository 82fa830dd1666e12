#include "mahonian/distribution.hpp"

#include <stdexcept>

#include "mahonian/insertion.hpp"
#include "mahonian/perm.hpp"
#include "mahonian/rook.hpp"
#include "mahonian/starred.hpp"

namespace mahonian {

Family family_from_name(const std::string& name) {
  if (name == "sn") return Family::sn;
  if (name == "sgt") return Family::sgt;
  if (name == "slt") return Family::slt;
  if (name == "sgt_prime") return Family::sgt_prime;
  if (name == "file") return Family::file;
  if (name == "na") return Family::na;
  if (name == "mixed") return Family::mixed;
  if (name == "mixed_prime") return Family::mixed_prime;
  throw std::invalid_argument("unknown family: " + name);
}

std::string family_name(Family f) {
  switch (f) {
    case Family::sn: return "sn";
    case Family::sgt: return "sgt";
    case Family::slt: return "slt";
    case Family::sgt_prime: return "sgt_prime";
    case Family::file: return "file";
    case Family::na: return "na";
    case Family::mixed: return "mixed";
    case Family::mixed_prime: return "mixed_prime";
  }
  return "?";
}

bool family_takes_k(Family f) {
  return f != Family::sn && f != Family::file;
}

namespace {

int var_slot(char var) {
  switch (var) {
    case 'q': return 0;
    case 'p': return 1;
    case 'z': return 2;
    case 't': return 3;
  }
  throw std::invalid_argument(std::string("unknown variable: ") + var);
}

// The cancellation-count statistics only make sense where the weights use
// them: bare `can` on na, the combined `unca_can` on na and mixed.
long placement_stat(const RookPlacement& p, const std::string& stat,
                    CancelRule plain_rule, CancelRule pq_rule,
                    const char* family, bool with_can, bool with_unca_can) {
  if (stat == "unc") return unc(p, plain_rule);
  if (stat == "uncb") return unc_below_above(p, pq_rule).first;
  if (stat == "unca") return unc_below_above(p, pq_rule).second;
  if (with_can && stat == "can") {
    return static_cast<long>(cancellation(p, pq_rule).size());
  }
  if (with_unca_can && stat == "unca_can") {
    return unc_below_above(p, pq_rule).second +
           static_cast<long>(cancellation(p, pq_rule).size());
  }
  throw std::invalid_argument("unknown statistic for family " +
                              std::string(family) + ": " + stat);
}

// Sum the monomial prod_b var_b^{stat_b(obj)} over every object the
// enumerator visits.  `eval` maps (object, stat name) to a value and throws
// on a stat the family does not carry.
template <class Obj, class Enumerate, class Eval>
Laurent accumulate(const Enumerate& enumerate,
                   const std::vector<StatBinding>& stats, const Eval& eval) {
  Laurent out;
  enumerate([&](const Obj& obj) {
    Exp e{0, 0, 0, 0};
    for (const auto& b : stats) {
      const long v = eval(obj, b.stat);
      if (v < 0) throw std::logic_error("negative statistic value");
      e[var_slot(b.var)] += static_cast<int>(v);
    }
    out += Laurent::monomial(1, e[0], e[1], e[2], e[3]);
  });
  return out;
}

}  // namespace

Laurent distribution(Family family, int n, int k,
                     const std::vector<StatBinding>& stats) {
  if (n < 0) throw std::invalid_argument("need n >= 0");
  if (family_takes_k(family) && k < 0) {
    throw std::invalid_argument("family needs a block/rook count k >= 0");
  }
  if (stats.empty()) throw std::invalid_argument("need at least one statistic");

  switch (family) {
    case Family::sn: {
      return accumulate<Permutation>(
          [&](auto&& f) { enumerate_sn(n, f); }, stats,
          [](const Permutation& p, const std::string& s) {
            return stat(p, perm_stat_from_name(s));
          });
    }
    case Family::sgt: {
      return accumulate<DescentStarred>(
          [&](auto&& f) { enumerate_starred_descent(n, k, f); }, stats,
          [](const DescentStarred& d, const std::string& s) {
            if (s == "op_inv") return op_inv(d);
            if (s == "op_maj") return op_maj(d);
            if (s == "overline_maj") return overline_maj(d);
            if (s == "op_coinv" || s == "op_rlmaj") {
              return extended_stat(d, ext_stat_from_name(s));
            }
            throw std::invalid_argument(
                "unknown statistic for family sgt: " + s);
          });
    }
    case Family::slt: {
      return accumulate<AscentStarred>(
          [&](auto&& f) { enumerate_starred_ascent(n, k, f); }, stats,
          [](const AscentStarred& a, const std::string& s) {
            if (s == "op_inv") return op_inv_ascent(a);
            if (s == "op_coinv" || s == "op_comaj" || s == "op_rlcomaj") {
              return extended_stat(a, ext_stat_from_name(s));
            }
            throw std::invalid_argument(
                "unknown statistic for family slt: " + s);
          });
    }
    case Family::sgt_prime: {
      return accumulate<PrimedStarred>(
          [&](auto&& f) { enumerate_starred_primed(n, k, f); }, stats,
          [](const PrimedStarred& x, const std::string& s) {
            if (s == "inv_prime") return inv_prime(x);
            if (s == "maj_prime") return maj_prime(x);
            throw std::invalid_argument(
                "unknown statistic for family sgt_prime: " + s);
          });
    }
    case Family::file: {
      return accumulate<RookPlacement>(
          [&](auto&& f) { enumerate_file(Board::staircase_st(n), f); }, stats,
          [](const RookPlacement& p, const std::string& s) {
            return placement_stat(p, s, CancelRule::classic,
                                  CancelRule::wachs_white, "file", false, false);
          });
    }
    case Family::na: {
      return accumulate<RookPlacement>(
          [&](auto&& f) { enumerate_na(Board::staircase_b(n), k, f); }, stats,
          [](const RookPlacement& p, const std::string& s) {
            return placement_stat(p, s, CancelRule::classic,
                                  CancelRule::wachs_white, "na", true, true);
          });
    }
    case Family::mixed: {
      return accumulate<RookPlacement>(
          [&](auto&& f) { enumerate_mixed(n, k, f); }, stats,
          [](const RookPlacement& p, const std::string& s) {
            return placement_stat(p, s, CancelRule::mixed,
                                  CancelRule::wachs_white_mixed, "mixed", false, true);
          });
    }
    case Family::mixed_prime: {
      return accumulate<RookPlacement>(
          [&](auto&& f) { enumerate_mixed_prime(n, k, f); }, stats,
          [](const RookPlacement& p, const std::string& s) {
            if (s == "unc_prime" || s == "unc") {
              return unc(p, CancelRule::classic);
            }
            throw std::invalid_argument(
                "unknown statistic for family mixed_prime: " + s);
          });
    }
  }
  throw std::invalid_argument("unknown family");
}

long long family_count(Family family, int n, int k) {
  long long count = 0;
  const auto bump = [&](const auto&) { ++count; };
  switch (family) {
    case Family::sn:
      enumerate_sn(n, bump);
      break;
    case Family::sgt:
      enumerate_starred_descent(n, k, bump);
      break;
    case Family::slt:
      enumerate_starred_ascent(n, k, bump);
      break;
    case Family::sgt_prime:
      enumerate_starred_primed(n, k, bump);
      break;
    case Family::file:
      enumerate_file(Board::staircase_st(n), bump);
      break;
    case Family::na:
      enumerate_na(Board::staircase_b(n), k, bump);
      break;
    case Family::mixed:
      enumerate_mixed(n, k, bump);
      break;
    case Family::mixed_prime:
      enumerate_mixed_prime(n, k, bump);
      break;
  }
  return count;
}

}  // namespace mahonian
