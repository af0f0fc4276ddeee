#pragma once

#include <optional>
#include <vector>

#include "knotsurg/braid.hpp"
#include "knotsurg/laurent.hpp"

namespace knotsurg {

/// The Alexander polynomial normalized to be symmetric with value 1 at t = 1.
class AlexanderPolynomial {
public:
  AlexanderPolynomial() : poly_(LaurentPoly::constant(1)) {}

  /// Multiplies `p` by the unique unit +-t^k that makes it symmetric with
  /// p(1) = 1. Throws InternalError if no such unit exists.
  static AlexanderPolynomial normalize(const LaurentPoly &p);

  const LaurentPoly &poly() const { return poly_; }

  /// Half the exponent span; the degree any Fox-Milnor factor must have.
  Exponent half_span() const { return poly_.max_exponent(); }

  bool is_one() const { return poly_ == LaurentPoly::constant(1); }

  std::string to_string() const { return poly_.to_string(); }

  friend bool operator==(const AlexanderPolynomial &a, const AlexanderPolynomial &b) {
    return a.poly_ == b.poly_;
  }

private:
  explicit AlexanderPolynomial(LaurentPoly p) : poly_(std::move(p)) {}
  LaurentPoly poly_;
};

AlexanderPolynomial operator*(const AlexanderPolynomial &a, const AlexanderPolynomial &b);

using LaurentMatrix = std::vector<std::vector<LaurentPoly>>;

/// Product of reduced Burau matrices of the braid word, (n-1) x (n-1).
LaurentMatrix reduced_burau(const Braid &b);

/// Fraction-free (Bareiss) determinant over Z[t, t^-1].
LaurentPoly bareiss_determinant(LaurentMatrix m);

/// det(burau(b) - I) * (t - 1) / (t^n - 1), normalized. Throws
/// ComponentError when the closure is a link.
AlexanderPolynomial alexander(const Braid &b);

/// Independent route: Fox calculus on the Wirtinger presentation of the
/// closure, with a Laplace-expansion determinant.
AlexanderPolynomial alexander_oracle(const Braid &b);

struct FoxMilnorResult {
  bool satisfied = false;
  /// True when the search covered every degree a factor could have, so a
  /// negative answer is a proof rather than "nothing found up to the bound".
  bool exhaustive = false;
  /// f with delta = f(t) f(t^-1), when one was found.
  std::optional<LaurentPoly> factor;

  explicit operator bool() const { return satisfied; }
};

/// Searches integer polynomials f of degree <= degree_bound with
/// delta = f(t) * f(t^-1) up to units.
FoxMilnorResult fox_milnor_check(const AlexanderPolynomial &delta, Exponent degree_bound);

} // namespace knotsurg
