// Alexander polynomial via Fox free differential calculus. Kept apart from
// the Burau route on purpose: nothing here touches Burau matrices or Bareiss
// elimination, so agreement between the two is meaningful.

#include <bit>
#include <cstdint>
#include <numeric>

#include "knotsurg/alexander.hpp"
#include "knotsurg/error.hpp"

namespace knotsurg {

namespace {

struct Letter {
  int gen;
  int power; // +1 or -1
};
using Word = std::vector<Letter>;

// Wirtinger presentation read off the braid closure top to bottom. Each
// crossing ends the under-arc and starts a new one; the closing strands
// identify bottom arcs with top arcs.
struct Presentation {
  int generators = 0;
  std::vector<Word> relators;
};

int find(std::vector<int> &parent, int x) {
  while (parent[x] != x)
    x = parent[x] = parent[parent[x]];
  return x;
}

Presentation wirtinger(const Braid &b) {
  const int n = b.strands();
  std::vector<int> label(static_cast<std::size_t>(n));
  std::iota(label.begin(), label.end(), 0);
  int next = n;

  std::vector<Word> relators;
  for (const auto &g : b.word()) {
    const auto p = static_cast<std::size_t>(g.index - 1);
    const int left = label[p];
    const int right = label[p + 1];
    const int fresh = next++;
    if (g.sign > 0) {
      // left passes over: fresh = left * right * left^-1
      relators.push_back({{left, 1}, {right, 1}, {left, -1}, {fresh, -1}});
      label[p] = fresh;
      label[p + 1] = left;
    } else {
      // right passes over: fresh = right^-1 * left * right
      relators.push_back({{right, -1}, {left, 1}, {right, 1}, {fresh, -1}});
      label[p] = right;
      label[p + 1] = fresh;
    }
  }

  std::vector<int> parent(static_cast<std::size_t>(next));
  std::iota(parent.begin(), parent.end(), 0);
  for (int j = 0; j < n; ++j)
    parent[find(parent, label[j])] = find(parent, j);

  std::vector<int> compact(static_cast<std::size_t>(next), -1);
  int classes = 0;
  for (int a = 0; a < next; ++a) {
    const int root = find(parent, a);
    if (compact[root] < 0)
      compact[root] = classes++;
  }
  for (auto &r : relators)
    for (auto &l : r)
      l.gen = compact[find(parent, l.gen)];
  return {classes, std::move(relators)};
}

// d(word)/d(gen) pushed through the abelianization sending every meridian to t.
LaurentPoly fox_derivative(const Word &w, int gen) {
  LaurentPoly d;
  Exponent prefix = 0;
  for (const auto &l : w) {
    if (l.power > 0) {
      if (l.gen == gen)
        d += LaurentPoly::monomial(1, prefix);
      ++prefix;
    } else {
      --prefix;
      if (l.gen == gen)
        d += LaurentPoly::monomial(-1, prefix);
    }
  }
  return d;
}

// Laplace expansion along rows, memoized on the set of columns used so far.
LaurentPoly laplace_determinant(const std::vector<std::vector<LaurentPoly>> &a) {
  const std::size_t n = a.size();
  if (n == 0)
    return LaurentPoly::constant(1);
  if (n > 24)
    throw InputError("braid too long for the Fox-calculus oracle (" + std::to_string(n) +
                     " relators)");
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<LaurentPoly> dp(std::size_t{full} + 1);
  dp[0] = LaurentPoly::constant(1);
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    if (dp[mask].is_zero())
      continue;
    const auto row = static_cast<std::size_t>(std::popcount(mask));
    for (std::size_t col = 0; col < n; ++col) {
      const std::uint32_t bit = std::uint32_t{1} << col;
      if ((mask & bit) || a[row][col].is_zero())
        continue;
      // Each already-used column to the right of `col` is one inversion.
      const int inversions = std::popcount(mask & ~((bit << 1) - 1));
      LaurentPoly term = dp[mask] * a[row][col];
      if (inversions % 2)
        dp[mask | bit] -= term;
      else
        dp[mask | bit] += term;
    }
    dp[mask] = LaurentPoly{};
  }
  return dp[full];
}

} // namespace

AlexanderPolynomial alexander_oracle(const Braid &b) {
  const int components = closure_components(b);
  if (components != 1)
    throw ComponentError("closure of " + format_braid(b) + " is a link with " +
                         std::to_string(components) + " components");

  const Presentation pres = wirtinger(b);
  if (pres.relators.empty())
    return AlexanderPolynomial{};
  if (static_cast<std::size_t>(pres.generators) != pres.relators.size())
    throw InternalError("Wirtinger presentation of a knot should have as many arcs as crossings");

  // Any one Wirtinger relator follows from the others, and the columns of
  // the abelianized Fox matrix sum to zero, so dropping the last relator and
  // the first generator leaves a square matrix with determinant +-t^k Delta.
  const std::size_t size = pres.relators.size() - 1;
  std::vector<std::vector<LaurentPoly>> minor(size, std::vector<LaurentPoly>(size));
  for (std::size_t r = 0; r < size; ++r)
    for (std::size_t c = 0; c < size; ++c)
      minor[r][c] = fox_derivative(pres.relators[r], static_cast<int>(c + 1));

  return AlexanderPolynomial::normalize(laplace_determinant(minor));
}

} // namespace knotsurg
