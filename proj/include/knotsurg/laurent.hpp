#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

namespace knotsurg {

using Integer = mpz_class;
using Rational = mpq_class;
using Exponent = std::int64_t;

/// Integer Laurent polynomial in one variable t.
///
/// Stored sparsely as exponent -> coefficient. Every constructor and
/// operation drops zero coefficients, so two polynomials are equal exactly
/// when their term maps are equal.
class LaurentPoly {
public:
  using Terms = std::map<Exponent, Integer>;

  LaurentPoly() = default;
  LaurentPoly(std::initializer_list<std::pair<Exponent, long>> terms);
  explicit LaurentPoly(Terms terms);

  static LaurentPoly constant(const Integer &c);
  static LaurentPoly monomial(const Integer &c, Exponent k);
  static LaurentPoly t() { return monomial(1, 1); }

  /// Parses the rendering produced by to_string(), e.g. "t^1 - 1 + t^-1".
  /// Also accepts "t" for t^1, "2t^3", "2*t^3" and arbitrary spacing.
  static LaurentPoly parse(std::string_view text);

  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Integer coefficient(Exponent k) const;

  // Only meaningful when !is_zero().
  Exponent min_exponent() const { return terms_.begin()->first; }
  Exponent max_exponent() const { return terms_.rbegin()->first; }

  LaurentPoly operator-() const;
  LaurentPoly &operator+=(const LaurentPoly &q);
  LaurentPoly &operator-=(const LaurentPoly &q);
  LaurentPoly &operator*=(const LaurentPoly &q);

  friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly &q) { return p += q; }
  friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly &q) { return p -= q; }
  friend LaurentPoly operator*(const LaurentPoly &p, const LaurentPoly &q);

  friend bool operator==(const LaurentPoly &p, const LaurentPoly &q) {
    return p.terms_ == q.terms_;
  }

  /// Multiplies by t^k.
  LaurentPoly shifted(Exponent k) const;

  /// p(t^-1).
  LaurentPoly inverted() const;

  std::string to_string() const;

private:
  void add_term(Exponent k, const Integer &c);

  Terms terms_;
};

std::ostream &operator<<(std::ostream &os, const LaurentPoly &p);

LaurentPoly add(const LaurentPoly &p, const LaurentPoly &q);
LaurentPoly mul(const LaurentPoly &p, const LaurentPoly &q);

/// Quotient q with q * d == p. Throws DomainError if d is zero and
/// InexactDivision if d does not divide p in Z[t, t^-1].
LaurentPoly exact_div(const LaurentPoly &p, const LaurentPoly &d);

/// Like exact_div but returns nullopt instead of throwing on a remainder.
std::optional<LaurentPoly> try_exact_div(const LaurentPoly &p, const LaurentPoly &d);

/// Exact value at a nonzero integer. Throws DomainError for x == 0.
Rational evaluate(const LaurentPoly &p, const Integer &x);

bool is_symmetric(const LaurentPoly &p);

} // namespace knotsurg
