#include "mahonian/cli.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mahonian/distribution.hpp"
#include "mahonian/insertion.hpp"
#include "mahonian/perm.hpp"
#include "mahonian/qanalog.hpp"
#include "mahonian/rook.hpp"
#include "mahonian/starred.hpp"
#include "mahonian/verify.hpp"

namespace mahonian {

namespace {

bool is_subset(const PositionSet& small, const PositionSet& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

bool looks_like_json(const std::string& s) {
  return !s.empty() && s.front() == '{';
}

// ---- stat ----------------------------------------------------------------

bool is_perm_stat(const std::string& s) {
  static const std::vector<std::string> names = {
      "inv", "maj", "des", "asc", "coinv", "comaj", "rlmaj", "rlcomaj"};
  return std::find(names.begin(), names.end(), s) != names.end();
}

long descent_starred_stat(const DescentStarred& d, const std::string& s) {
  if (s == "op_inv") return op_inv(d);
  if (s == "op_maj") return op_maj(d);
  if (s == "overline_maj") return overline_maj(d);
  return extended_stat(d, ext_stat_from_name(s));
}

long ascent_starred_stat(const AscentStarred& a, const std::string& s) {
  if (s == "op_inv") return op_inv_ascent(a);
  return extended_stat(a, ext_stat_from_name(s));
}

long placement_stat_cli(const RookPlacement& p, const std::string& s,
                        CancelRule rule) {
  if (s == "unc") return unc(p, rule);
  if (s == "unc_prime") return unc_prime(p);
  if (s == "uncb") return unc_below_above(p, rule).first;
  if (s == "unca") return unc_below_above(p, rule).second;
  throw std::invalid_argument("unknown placement statistic: " + s);
}

long evaluate_stat(const std::string& object, const std::string& stat,
                   const std::string& rule_name) {
  if (looks_like_json(object)) {
    const nlohmann::json j = nlohmann::json::parse(object);
    if (j.contains("heights")) {
      return placement_stat_cli(placement_from_json(j), stat,
                                cancel_rule_from_name(rule_name));
    }
    if (j.contains("base")) {
      switch (starred_json_flavor(j)) {
        case Flavor::descent:
          return descent_starred_stat(descent_starred_from_json(j), stat);
        case Flavor::ascent:
          return ascent_starred_stat(ascent_starred_from_json(j), stat);
        case Flavor::primed: {
          const PrimedStarred x = primed_starred_from_json(j);
          if (stat == "inv_prime") return inv_prime(x);
          if (stat == "maj_prime") return maj_prime(x);
          throw std::invalid_argument(
              "unknown statistic for a sentinel-starred word: " + stat);
        }
      }
      throw std::invalid_argument("bad flavor");
    }
    throw std::invalid_argument(
        "JSON object must carry \"heights\" (placement) or \"base\" "
        "(starred word)");
  }

  if (object.find('|') != std::string::npos) {
    const OrderedSetPartition o = parse_osp(object);
    if (stat == "ros") return ros(o);
    if (stat == "los") return los(o);
    throw std::invalid_argument(
        "block statistics on an ordered set partition: ros, los");
  }

  const auto [values, stars] = parse_word(object);
  const Permutation base(values);
  if (is_perm_stat(stat)) {
    if (!stars.empty()) {
      throw std::invalid_argument("statistic " + stat +
                                  " needs an unstarred word");
    }
    return mahonian::stat(base, perm_stat_from_name(stat));
  }
  if (stat == "inv_prime" || stat == "maj_prime") {
    const PrimedStarred x(base, stars);
    return stat == "inv_prime" ? inv_prime(x) : maj_prime(x);
  }

  // Starred statistics: the star positions decide the flavor.
  const bool fits_descent = is_subset(stars, des_set(base));
  const bool fits_ascent = is_subset(stars, asc_set(base));
  const bool descent_only =
      stat == "op_maj" || stat == "op_rlmaj" || stat == "overline_maj";
  const bool ascent_only = stat == "op_comaj" || stat == "op_rlcomaj";
  if (descent_only || (fits_descent && !ascent_only)) {
    return descent_starred_stat(DescentStarred(base, stars), stat);
  }
  if (ascent_only || fits_ascent) {
    return ascent_starred_stat(AscentStarred(base, stars), stat);
  }
  throw std::invalid_argument(
      "stars sit on neither all-descent nor all-ascent gaps");
}

// ---- dist ----------------------------------------------------------------

std::vector<StatBinding> parse_bindings(const std::vector<std::string>& specs) {
  static const char kDefaultVars[] = {'q', 't', 'p', 'z'};
  std::vector<StatBinding> out;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    StatBinding b;
    const auto colon = specs[i].find(':');
    if (colon == std::string::npos) {
      if (i >= 4) {
        throw std::invalid_argument(
            "more than four statistics need explicit :variable suffixes");
      }
      b.stat = specs[i];
      b.var = kDefaultVars[i];
    } else {
      b.stat = specs[i].substr(0, colon);
      const std::string v = specs[i].substr(colon + 1);
      if (v.size() != 1 || std::string("qpzt").find(v[0]) == std::string::npos) {
        throw std::invalid_argument("variable must be one of q, p, z, t: " +
                                    specs[i]);
      }
      b.var = v[0];
    }
    if (b.stat.empty()) {
      throw std::invalid_argument("empty statistic name: " + specs[i]);
    }
    out.push_back(b);
  }
  return out;
}

void check_k(Family family, int k) {
  if (family_takes_k(family)) {
    if (k < 0) {
      throw std::invalid_argument("family " + family_name(family) +
                                  " needs --k");
    }
  } else if (k >= 0) {
    throw std::invalid_argument("family " + family_name(family) +
                                " takes no --k");
  }
}

// ---- bijection -----------------------------------------------------------

std::string trace_lines(const std::vector<TraceStep>& steps) {
  std::string out;
  for (const auto& t : steps) {
    out += "n=" + std::to_string(t.removed_value) +
           " removed_label=" + std::to_string(t.label) +
           " intermediate=" + t.intermediate + "\n";
  }
  return out;
}

nlohmann::json trace_json(const std::vector<TraceStep>& steps) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& t : steps) {
    arr.push_back({{"n", t.removed_value},
                   {"removed_label", t.label},
                   {"intermediate", t.intermediate}});
  }
  return arr;
}

RookPlacement placement_from_text(const std::string& input) {
  if (!looks_like_json(input)) {
    throw std::invalid_argument("this map needs a placement JSON input");
  }
  return placement_from_json(nlohmann::json::parse(input));
}

int run_bijection(const std::string& map, const std::string& input,
                  bool want_trace, bool json, std::ostream& out) {
  std::string image;       // text form of the image
  nlohmann::json image_json;  // set instead for placement images
  std::vector<TraceStep> steps;
  bool traceable = false;

  if (map == "psi" || map == "psi_inverse") {
    traceable = true;
    const Permutation p = parse_permutation(input);
    if (map == "psi") {
      image = format_permutation(psi(p));
      if (want_trace) steps = psi_trace(p);
    } else {
      image = format_permutation(psi_inverse(p));
      if (want_trace) steps = psi_inverse_trace(p);
    }
  } else if (map == "reverse" || map == "complement" ||
             map == "reverse_complement") {
    image = format_permutation(
        trivial_bijection(parse_permutation(input),
                          trivial_bijection_from_name(map)));
  } else if (map == "psi_osp" || map == "psi_osp_inverse") {
    traceable = true;
    const DescentStarred d = parse_descent_starred(input);
    if (map == "psi_osp") {
      image = format(psi_osp(d));
      if (want_trace) steps = psi_osp_trace(d);
    } else {
      image = format(psi_osp_inverse(d));
      if (want_trace) steps = psi_osp_inverse_trace(d);
    }
  } else if (map == "psi_primed" || map == "psi_primed_inverse") {
    traceable = true;
    const PrimedStarred x = parse_primed_starred(input);
    if (map == "psi_primed") {
      image = format(psi_primed(x));
      if (want_trace) steps = psi_primed_trace(x);
    } else {
      image = format(psi_primed_inverse(x));
      if (want_trace) steps = psi_primed_inverse_trace(x);
    }
  } else if (map == "alpha" || map == "beta") {
    const RookPlacement p = placement_from_text(input);
    image = format_permutation(map == "alpha" ? alpha(p) : beta(p));
  } else if (map == "alpha_inverse" || map == "beta_inverse") {
    const Permutation p = parse_permutation(input);
    image_json = to_json(map == "alpha_inverse" ? alpha_inverse(p)
                                                : beta_inverse(p));
  } else if (map == "gamma" || map == "delta") {
    const DescentStarred d = parse_descent_starred(input);
    image_json = to_json(map == "gamma" ? gamma(d) : delta(d));
  } else if (map == "gamma_inverse" || map == "delta_inverse") {
    const RookPlacement p = placement_from_text(input);
    image = format(map == "gamma_inverse" ? gamma_inverse(p)
                                          : delta_inverse(p));
  } else if (map == "osp_of_mixed") {
    image = format(osp_of_mixed(placement_from_text(input)));
  } else if (map == "osp_to_descent_starred") {
    image = format(osp_to_descent_starred(parse_osp(input)));
  } else if (map == "osp_to_ascent_starred") {
    image = format(osp_to_ascent_starred(parse_osp(input)));
  } else if (map == "descent_starred_to_osp") {
    image = format(descent_starred_to_osp(parse_descent_starred(input)));
  } else if (map == "ascent_starred_to_osp") {
    image = format(ascent_starred_to_osp(parse_ascent_starred(input)));
  } else {
    throw std::invalid_argument("unknown map: " + map);
  }

  if (want_trace && !traceable) {
    throw std::invalid_argument("--trace is only available for the psi maps");
  }

  if (json) {
    nlohmann::json j{{"map", map}, {"input", input}};
    if (image_json.is_null()) {
      j["image"] = image;
    } else {
      j["image"] = image_json;
    }
    if (want_trace) j["trace"] = trace_json(steps);
    out << j.dump() << '\n';
  } else {
    if (want_trace) out << trace_lines(steps);
    if (image_json.is_null()) {
      out << image << '\n';
    } else {
      out << image_json.dump() << '\n';
    }
  }
  return 0;
}

// ---- enumerate -----------------------------------------------------------

void list_family(Family family, int n, int k, std::ostream& out) {
  switch (family) {
    case Family::sn:
      enumerate_sn(n, [&](const Permutation& p) {
        out << format_permutation(p) << '\n';
      });
      break;
    case Family::sgt:
      enumerate_starred_descent(n, k, [&](const DescentStarred& d) {
        out << format(d) << '\n';
      });
      break;
    case Family::slt:
      enumerate_starred_ascent(n, k, [&](const AscentStarred& a) {
        out << format(a) << '\n';
      });
      break;
    case Family::sgt_prime:
      enumerate_starred_primed(n, k, [&](const PrimedStarred& x) {
        out << format(x) << '\n';
      });
      break;
    case Family::file:
      enumerate_file(Board::staircase_st(n), [&](const RookPlacement& p) {
        out << to_json(p).dump() << '\n';
      });
      break;
    case Family::na:
      enumerate_na(Board::staircase_b(n), k, [&](const RookPlacement& p) {
        out << to_json(p).dump() << '\n';
      });
      break;
    case Family::mixed:
      enumerate_mixed(n, k, [&](const RookPlacement& p) {
        out << to_json(p).dump() << '\n';
      });
      break;
    case Family::mixed_prime:
      enumerate_mixed_prime(n, k, [&](const RookPlacement& p) {
        out << to_json(p).dump() << '\n';
      });
      break;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "Exact enumeration engine for Mahonian statistics on permutations, "
      "starred words, ordered set partitions, and rook placements"};
  app.require_subcommand(1);
  int seed = 0;
  app.add_option("--seed", seed,
                 "accepted for harness compatibility; every computation "
                 "here is exhaustive and deterministic");

  // stat
  std::string st_object, st_stat, st_rule = "classic";
  bool st_json = false;
  auto* stat_cmd =
      app.add_subcommand("stat", "Evaluate one statistic on one object");
  stat_cmd->add_option("--object", st_object,
                       "word (\"7*3*2 6 4*1 5\"), ordered set partition "
                       "(\"237|6|14|5\"), or JSON placement/starred word")
      ->required();
  stat_cmd->add_option("--stat", st_stat, "statistic name")->required();
  stat_cmd->add_option("--rule", st_rule,
                       "cancellation rule for placement statistics");
  stat_cmd->add_flag("--json", st_json, "emit JSON");

  // dist
  std::string di_family;
  int di_n = -1, di_k = -1;
  std::vector<std::string> di_stats;
  bool di_json = false;
  auto* dist_cmd = app.add_subcommand(
      "dist", "Distribution polynomial of statistics over a family");
  dist_cmd->add_option("--family", di_family,
                       "sn, sgt, slt, sgt_prime, file, na, mixed, mixed_prime")
      ->required();
  dist_cmd->add_option("--n", di_n, "object size")->required();
  dist_cmd->add_option("--k", di_k, "star / non-attacking rook count");
  dist_cmd
      ->add_option("--stat", di_stats,
                   "statistic, optionally with a variable (\"op_inv\" or "
                   "\"op_inv:q\"); repeat for joint distributions "
                   "(default variables q, t, p, z in order)")
      ->required();
  dist_cmd->add_flag("--json", di_json, "emit JSON");

  // verify
  std::string ve_identity, ve_variant = "default";
  int ve_n = -1, ve_max_n = -1;
  bool ve_json = false;
  auto* verify_cmd =
      app.add_subcommand("verify", "Check a named identity at one size");
  verify_cmd
      ->add_option("--identity", ve_identity,
                   "macmahon, haglund, main_theorem, ascent_form, stein, "
                   "stein_raw, pq_simple, pq_subtle, pq_companion, mprime")
      ->required();
  verify_cmd->add_option("--n", ve_n, "size")->required();
  verify_cmd->add_option("--variant", ve_variant,
                         "exponent convention, where the identity has one");
  verify_cmd->add_option("--max-n", ve_max_n,
                         "safety cap (default 8; 6 for the p,q identities)");
  verify_cmd->add_flag("--json", ve_json, "emit JSON");

  // bijection
  std::string bi_map, bi_input;
  bool bi_trace = false, bi_json = false;
  auto* bij_cmd = app.add_subcommand("bijection", "Apply a named map");
  bij_cmd->add_option("--map", bi_map,
                      "psi, psi_osp, psi_primed (and _inverse), reverse, "
                      "complement, reverse_complement, alpha, beta, gamma, "
                      "delta (and _inverse), osp_of_mixed, "
                      "osp_to_descent_starred, osp_to_ascent_starred, "
                      "descent_starred_to_osp, ascent_starred_to_osp")
      ->required();
  bij_cmd->add_option("--input", bi_input, "object in its text or JSON form")
      ->required();
  bij_cmd->add_flag("--trace", bi_trace, "print one peel line per level");
  bij_cmd->add_flag("--json", bi_json, "emit JSON");

  // render
  std::string re_placement, re_rule = "classic";
  auto* render_cmd =
      app.add_subcommand("render", "ASCII picture of a rook placement");
  render_cmd->add_option("--placement", re_placement, "placement JSON")
      ->required();
  render_cmd->add_option("--rule", re_rule, "cancellation rule");

  // enumerate
  std::string en_family;
  int en_n = -1, en_k = -1;
  bool en_count = false;
  auto* enum_cmd =
      app.add_subcommand("enumerate", "List a family or count it");
  enum_cmd->add_option("--family", en_family, "as in dist")->required();
  enum_cmd->add_option("--n", en_n, "object size")->required();
  enum_cmd->add_option("--k", en_k, "star / non-attacking rook count");
  enum_cmd->add_flag("--count", en_count, "print the cardinality only");

  // Harnesses tack --seed onto the end of the line; let app-level options
  // match after a subcommand too.
  for (auto* sub : app.get_subcommands([](CLI::App*) { return true; })) {
    sub->fallthrough();
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  try {
    if (stat_cmd->parsed()) {
      const long value = evaluate_stat(st_object, st_stat, st_rule);
      if (st_json) {
        out << nlohmann::json{{"stat", st_stat}, {"value", value}}.dump()
            << '\n';
      } else {
        out << value << '\n';
      }
      return 0;
    }
    if (dist_cmd->parsed()) {
      const Family family = family_from_name(di_family);
      check_k(family, di_k);
      const Laurent d =
          distribution(family, di_n, di_k, parse_bindings(di_stats));
      out << (di_json ? d.to_json().dump() : d.str()) << '\n';
      return 0;
    }
    if (verify_cmd->parsed()) {
      const Identity id = identity_from_name(ve_identity);
      const int cap = ve_max_n > 0 ? ve_max_n : identity_default_max_n(id);
      if (ve_n > cap) {
        throw std::invalid_argument(
            "n=" + std::to_string(ve_n) + " exceeds the --max-n guard (" +
            std::to_string(cap) + ")");
      }
      const VerifyReport r = verify_identity(id, ve_n, ve_variant);
      if (ve_json) {
        out << r.to_json().dump() << '\n';
      } else {
        out << r.text();
      }
      return r.pass ? 0 : 1;
    }
    if (bij_cmd->parsed()) {
      return run_bijection(bi_map, bi_input, bi_trace, bi_json, out);
    }
    if (render_cmd->parsed()) {
      const RookPlacement p =
          placement_from_json(nlohmann::json::parse(re_placement));
      out << render(p, cancel_rule_from_name(re_rule)) << '\n';
      return 0;
    }
    if (enum_cmd->parsed()) {
      const Family family = family_from_name(en_family);
      check_k(family, en_k);
      if (en_count) {
        out << family_count(family, en_n, en_k) << '\n';
      } else {
        list_family(family, en_n, en_k, out);
      }
      return 0;
    }
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace mahonian
