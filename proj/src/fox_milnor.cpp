#include <functional>

#include "knotsurg/alexander.hpp"

namespace knotsurg {

// If delta = f(t) f(t^-1) up to a unit, then since delta is symmetric the
// unit is trivial and f, shifted to start at t^0, has degree exactly
// half_span(delta). The constant term of delta is then the sum of squares of
// f's coefficients, which bounds the search.
FoxMilnorResult fox_milnor_check(const AlexanderPolynomial &delta, Exponent degree_bound) {
  const LaurentPoly &p = delta.poly();
  const Exponent degree = delta.half_span();

  FoxMilnorResult result;
  result.exhaustive = degree_bound >= degree;
  if (degree > degree_bound)
    return result;

  const Integer norm = p.coefficient(0);
  const Integer top = p.coefficient(degree);
  const auto len = static_cast<std::size_t>(degree + 1);
  std::vector<Integer> coeffs(len);

  auto candidate = [&] {
    LaurentPoly f;
    for (std::size_t i = 0; i < len; ++i)
      f += LaurentPoly::monomial(coeffs[i], static_cast<Exponent>(i));
    return f;
  };

  // Overall sign of f is irrelevant, so the constant term is taken positive.
  std::function<bool(std::size_t, const Integer &)> search = [&](std::size_t i,
                                                                  const Integer &remaining) {
    if (i == len) {
      if (remaining != 0)
        return false;
      LaurentPoly f = candidate();
      if (f * f.inverted() == p) {
        result.factor = std::move(f);
        return true;
      }
      return false;
    }
    const Integer bound = sqrt(remaining);
    const bool is_first = i == 0;
    const bool is_last = i + 1 == len;
    for (Integer c = is_first ? Integer(1) : Integer(-bound); c <= bound; ++c) {
      if ((is_first || is_last) && c == 0)
        continue;
      if (is_last && !is_first && coeffs[0] * c != top)
        continue;
      coeffs[i] = c;
      if (search(i + 1, remaining - c * c))
        return true;
    }
    coeffs[i] = 0;
    return false;
  };

  result.satisfied = norm > 0 && search(0, norm);
  return result;
}

} // namespace knotsurg
