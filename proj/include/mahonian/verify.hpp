// Identity verifiers: every side of each named identity is computed
// independently (product forms over permutations, distributions by
// enumeration, closed forms from the q/p,q building blocks) and compared
// after full expansion.
#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "mahonian/laurent.hpp"

namespace mahonian {

enum class Identity {
  macmahon,      // D^inv = D^maj = [n]_q! over S_n
  haglund,       // inversion product = major-index product = Stirling GF
  main_theorem,  // per k: op_inv / op_maj / unc over mixed = closed form
  ascent_form,   // ascent product = Stirling GF (exponent convention knob)
  stein,         // per k: op_maj distribution = Euler-Mahonian sum
  stein_raw,     // per k: q-factorial * q-Stirling = Euler-Mahonian sum
  pq_simple,     // q -> q/p twist: three product forms = twisted Stirling GF
  pq_subtle,     // (op_coinv, op_inv) bivariate = p,q-Stirling GF
  pq_companion,  // (overline_maj, op_maj) bivariate = p,q-Stirling GF
  mprime,        // sentinel-starred variant: per k + (1+z)-factored GF
};

Identity identity_from_name(const std::string& name);
std::string identity_name(Identity id);

// CLI safety cap: q-identities stay cheap through n = 8; the four-variable
// p,q sums get expensive past n = 6.
int identity_default_max_n(Identity id);

struct VerifySide {
  std::string name;
  Laurent value;
};

// One equality assertion: all sides must expand to the same polynomial.
struct VerifyCheck {
  std::string label;
  bool equal = false;
  std::vector<VerifySide> sides;
};

struct VerifyReport {
  std::string identity;
  int n = 0;
  std::string variant = "default";
  bool pass = false;
  std::vector<VerifyCheck> checks;
  std::vector<std::string> notes;

  std::string text() const;
  nlohmann::json to_json() const;
};

// Variants: ascent_form accepts "default" (inversions ending at the letter
// after the ascent) or "printed" (at the ascent itself; disagrees from
// n = 3 on).  mprime accepts "default" (no exponent shift) or "plus_one"
// (shifts every gap exponent by one; disagrees from n = 1 on).  Everything
// else accepts only "default".  stein/stein_raw/mprime/pq_companion need
// n >= 1.
VerifyReport verify_identity(Identity id, int n,
                             const std::string& variant = "default");

}  // namespace mahonian
