#include "mahonian/laurent.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace mahonian {

Laurent::Laurent(long constant) {
  if (constant != 0) terms_[{0, 0, 0, 0}] = constant;
}

Laurent::Laurent(const Int& constant) {
  if (constant != 0) terms_[{0, 0, 0, 0}] = constant;
}

Laurent Laurent::monomial(Int coef, int eq, int ep, int ez, int et) {
  Laurent r;
  r.insert_term({eq, ep, ez, et}, coef);
  return r;
}

void Laurent::insert_term(const Exp& e, const Int& c) {
  assert(e[2] >= 0 && e[3] >= 0 && "z/t exponents must stay non-negative");
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Int Laurent::coeff(const Exp& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Int(0) : it->second;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) insert_term(e, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) insert_term(e, -c);
  return *this;
}

Laurent Laurent::operator+(const Laurent& o) const {
  Laurent r = *this;
  r += o;
  return r;
}

Laurent Laurent::operator-(const Laurent& o) const {
  Laurent r = *this;
  r -= o;
  return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
  Laurent r;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      Exp e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]};
      r.insert_term(e, ca * cb);
    }
  }
  return r;
}

Laurent& Laurent::operator*=(const Laurent& o) {
  *this = *this * o;
  return *this;
}

Laurent Laurent::times_monomial(int eq, int ep, int ez, int et) const {
  Laurent r;
  for (const auto& [e, c] : terms_) {
    r.insert_term({e[0] + eq, e[1] + ep, e[2] + ez, e[3] + et}, c);
  }
  return r;
}

Laurent Laurent::substitute_q_over_p() const {
  Laurent r;
  for (const auto& [e, c] : terms_) {
    r.insert_term({e[0], e[1] - e[0], e[2], e[3]}, c);
  }
  return r;
}

Laurent Laurent::at_one(int var) const {
  assert(var >= 0 && var < 4);
  Laurent r;
  for (const auto& [e, c] : terms_) {
    Exp f = e;
    f[var] = 0;
    r.insert_term(f, c);
  }
  return r;
}

Laurent Laurent::coeff_of_z(int k) const {
  Laurent r;
  for (const auto& [e, c] : terms_) {
    if (e[2] == k) r.insert_term({e[0], e[1], 0, e[3]}, c);
  }
  return r;
}

Laurent Laurent::coeff_of_t(int k) const {
  Laurent r;
  for (const auto& [e, c] : terms_) {
    if (e[3] == k) r.insert_term({e[0], e[1], e[2], 0}, c);
  }
  return r;
}

int Laurent::max_exp(int var) const {
  assert(var >= 0 && var < 4);
  int m = 0;
  for (const auto& [e, c] : terms_) {
    (void)c;
    if (e[var] > m) m = e[var];
  }
  return m;
}

namespace {

// Variables print in canonical order z, t, q, p so the z/t slot leads a term.
void append_var(std::ostringstream& os, bool& leading, const char* name,
                int e) {
  if (e == 0) return;
  if (!leading) os << "*";
  leading = false;
  os << name;
  if (e != 1) os << "^" << e;
}

}  // namespace

std::string Laurent::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool neg = c < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    const Int mag = neg ? Int(-c) : c;
    const bool has_var = e[0] != 0 || e[1] != 0 || e[2] != 0 || e[3] != 0;
    bool leading = true;
    if (mag != 1 || !has_var) {
      os << mag.str();
      leading = false;
    }
    append_var(os, leading, "z", e[2]);
    append_var(os, leading, "t", e[3]);
    append_var(os, leading, "q", e[0]);
    append_var(os, leading, "p", e[1]);
  }
  return os.str();
}

nlohmann::json Laurent::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : terms_) {
    terms.push_back({{"coef", c.str()},
                     {"exp", nlohmann::json::array({e[0], e[1], e[2], e[3]})}});
  }
  return {{"vars", nlohmann::json::array({"q", "p", "z", "t"})},
          {"terms", terms}};
}

Laurent Laurent::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
    throw std::invalid_argument("polynomial JSON needs a \"terms\" array");
  }
  Laurent r;
  for (const auto& t : j["terms"]) {
    if (!t.contains("coef") || !t.contains("exp") || !t["exp"].is_array() ||
        t["exp"].size() != 4) {
      throw std::invalid_argument(
          "polynomial term needs \"coef\" and a 4-entry \"exp\"");
    }
    Exp e{t["exp"][0].get<int>(), t["exp"][1].get<int>(),
          t["exp"][2].get<int>(), t["exp"][3].get<int>()};
    if (e[2] < 0 || e[3] < 0) {
      throw std::invalid_argument("z/t exponents must be non-negative");
    }
    r.insert_term(e, Int(t["coef"].get<std::string>()));
  }
  return r;
}

}  // namespace mahonian
