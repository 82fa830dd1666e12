// Exact Laurent polynomials in q, p, z, t with arbitrary-precision integer
// coefficients.  q and p exponents may be negative; z and t exponents are
// kept non-negative (they only ever mark generating-function slots).
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include "json.hpp"

namespace mahonian {

using Int = boost::multiprecision::cpp_int;

// Exponent vector, indexed as [q, p, z, t] (the JSON "exp" layout).
using Exp = std::array<int, 4>;

// Canonical term order: lexicographic on (z, t, q, p).  This groups terms by
// generating-function slot first, so "2 + 3*q + q^2 + z*q^-1" prints with the
// z-term last.
struct CanonicalLess {
  bool operator()(const Exp& a, const Exp& b) const {
    if (a[2] != b[2]) return a[2] < b[2];
    if (a[3] != b[3]) return a[3] < b[3];
    if (a[0] != b[0]) return a[0] < b[0];
    return a[1] < b[1];
  }
};

class Laurent {
 public:
  using TermMap = std::map<Exp, Int, CanonicalLess>;

  Laurent() = default;
  Laurent(long constant);  // implicit on purpose: 1 + ... reads naturally
  explicit Laurent(const Int& constant);

  static Laurent monomial(Int coef, int eq = 0, int ep = 0, int ez = 0,
                          int et = 0);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Int coeff(const Exp& e) const;

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator*(const Laurent& o) const;
  Laurent& operator*=(const Laurent& o);
  bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
  bool operator!=(const Laurent& o) const { return !(*this == o); }

  // Multiply every term by q^eq * p^ep * z^ez * t^et.
  Laurent times_monomial(int eq, int ep = 0, int ez = 0, int et = 0) const;

  // Substitute q -> q/p (each q^a p^b becomes q^a p^{b-a}).
  Laurent substitute_q_over_p() const;

  // Set one variable to 1 (0 = q, 1 = p, 2 = z, 3 = t), merging terms.
  Laurent at_one(int var) const;

  // Coefficient of z^k (resp. t^k) as a polynomial with that slot cleared.
  Laurent coeff_of_z(int k) const;
  Laurent coeff_of_t(int k) const;
  int max_exp(int var) const;  // 0 for the zero polynomial

  // Canonical text form, e.g. "2 + 3*q + q^2 + z*q^-1"; "0" when empty.
  std::string str() const;

  nlohmann::json to_json() const;
  static Laurent from_json(const nlohmann::json& j);

 private:
  void insert_term(const Exp& e, const Int& c);
  TermMap terms_;
};

inline Laurent operator+(long a, const Laurent& b) { return Laurent(a) + b; }
inline Laurent operator-(long a, const Laurent& b) { return Laurent(a) - b; }
inline Laurent operator*(long a, const Laurent& b) { return Laurent(a) * b; }

}  // namespace mahonian
