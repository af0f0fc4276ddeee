#include "knotsurg/alexander.hpp"

#include <utility>

#include "knotsurg/error.hpp"

namespace knotsurg {

AlexanderPolynomial AlexanderPolynomial::normalize(const LaurentPoly &p) {
  if (p.is_zero())
    throw InternalError("Alexander polynomial of a knot cannot vanish");
  const Exponent ends = p.min_exponent() + p.max_exponent();
  if (ends % 2 != 0)
    throw InternalError("odd exponent span, no unit symmetrizes " + p.to_string());
  LaurentPoly centered = p.shifted(-ends / 2);

  const Rational at_one = evaluate(centered, 1);
  if (at_one == -1)
    centered = -centered;
  else if (at_one != 1)
    throw InternalError("value at t = 1 is " + at_one.get_str() + ", expected +-1 for " +
                        p.to_string());
  if (!is_symmetric(centered))
    throw InternalError("not symmetric up to units: " + p.to_string());
  return AlexanderPolynomial(std::move(centered));
}

AlexanderPolynomial operator*(const AlexanderPolynomial &a, const AlexanderPolynomial &b) {
  return AlexanderPolynomial::normalize(a.poly() * b.poly());
}

namespace {

// 3x3 blocks of the reduced Burau image of sigma_i and its inverse, centered
// on row/column i-1 and clipped to the (n-1)x(n-1) matrix at the edges.
struct BurauBlock {
  LaurentPoly entry[3][3];
};

BurauBlock burau_block(int sign) {
  const LaurentPoly one = LaurentPoly::constant(1);
  BurauBlock blk;
  if (sign > 0) {
    blk.entry[0][0] = one;
    blk.entry[0][1] = LaurentPoly::monomial(1, 1);
    blk.entry[1][1] = LaurentPoly::monomial(-1, 1);
    blk.entry[2][1] = one;
    blk.entry[2][2] = one;
  } else {
    blk.entry[0][0] = one;
    blk.entry[0][1] = one;
    blk.entry[1][1] = LaurentPoly::monomial(-1, -1);
    blk.entry[2][1] = LaurentPoly::monomial(1, -1);
    blk.entry[2][2] = one;
  }
  return blk;
}

} // namespace

LaurentMatrix reduced_burau(const Braid &b) {
  const auto dim = static_cast<std::size_t>(b.strands() - 1);
  LaurentMatrix m(dim, std::vector<LaurentPoly>(dim));
  for (std::size_t i = 0; i < dim; ++i)
    m[i][i] = LaurentPoly::constant(1);

  const BurauBlock pos = burau_block(1);
  const BurauBlock neg = burau_block(-1);
  for (const auto &g : b.word()) {
    const BurauBlock &blk = g.sign > 0 ? pos : neg;
    const long center = g.index - 1;
    // Window of matrix indices touched: center-1 .. center+1, clipped.
    const long lo = std::max(0L, center - 1);
    const long hi = std::min(static_cast<long>(dim) - 1, center + 1);

    // m <- m * G; only the window columns change.
    for (std::size_t row = 0; row < dim; ++row) {
      LaurentPoly updated[3];
      for (long c = lo; c <= hi; ++c)
        for (long r = lo; r <= hi; ++r) {
          const LaurentPoly &g_rc = blk.entry[r - center + 1][c - center + 1];
          if (!g_rc.is_zero() && !m[row][r].is_zero())
            updated[c - lo] += m[row][r] * g_rc;
        }
      for (long c = lo; c <= hi; ++c)
        m[row][c] = std::move(updated[c - lo]);
    }
  }
  return m;
}

LaurentPoly bareiss_determinant(LaurentMatrix m) {
  const std::size_t n = m.size();
  if (n == 0)
    return LaurentPoly::constant(1);

  int sign = 1;
  LaurentPoly prev = LaurentPoly::constant(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero())
        ++r;
      if (r == n)
        return LaurentPoly{};
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = exact_div(num, prev);
      }
      m[i][k] = LaurentPoly{};
    }
    prev = m[k][k];
  }
  LaurentPoly det = std::move(m[n - 1][n - 1]);
  return sign > 0 ? det : -det;
}

AlexanderPolynomial alexander(const Braid &b) {
  const int components = closure_components(b);
  if (components != 1)
    throw ComponentError("closure of " + format_braid(b) + " is a link with " +
                         std::to_string(components) + " components");
  if (b.strands() == 1)
    return AlexanderPolynomial{};

  LaurentMatrix m = reduced_burau(b);
  for (std::size_t i = 0; i < m.size(); ++i)
    m[i][i] -= LaurentPoly::constant(1);

  const LaurentPoly det = bareiss_determinant(std::move(m));
  const LaurentPoly t_minus_1 = LaurentPoly{{1, 1}, {0, -1}};
  const LaurentPoly t_n_minus_1 = LaurentPoly{{b.strands(), 1}, {0, -1}};
  LaurentPoly delta;
  try {
    delta = exact_div(det * t_minus_1, t_n_minus_1);
  } catch (const InexactDivision &e) {
    throw InexactDivision(std::string("Burau pipeline for ") + format_braid(b) + ": " + e.what());
  }
  return AlexanderPolynomial::normalize(delta);
}

} // namespace knotsurg
