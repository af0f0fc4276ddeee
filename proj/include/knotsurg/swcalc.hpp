#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "knotsurg/alexander.hpp"
#include "knotsurg/braid.hpp"
#include "knotsurg/laurent.hpp"

namespace knotsurg {

using LatticeVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Seiberg-Witten data as a finitely supported function Z^rank -> Z, i.e. the
/// group-ring element sum_j SW(a_j) exp(a_j).
class SWInvariant {
public:
  using Terms = std::map<LatticeVector, Integer>;

  explicit SWInvariant(std::size_t rank = 0) : rank_(rank) {}
  /// Throws DimensionError if a class has the wrong length. Zero
  /// coefficients are dropped; repeated classes are summed.
  SWInvariant(std::size_t rank, const std::vector<std::pair<LatticeVector, Integer>> &terms);

  std::size_t rank() const { return rank_; }
  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }
  Integer coefficient(const LatticeVector &cls) const;

  void add_term(const LatticeVector &cls, const Integer &coeff);

  SWInvariant &operator+=(const SWInvariant &other);
  friend SWInvariant operator+(SWInvariant a, const SWInvariant &b) { return a += b; }

  Integer total_coefficient() const;

  /// Classes a whose partner -a is missing or carries a coefficient of a
  /// different absolute value. Basic classes come in pairs +-a, but the
  /// sign convention for SW(-a) varies, so these are warnings only.
  std::vector<std::string> symmetry_warnings() const;

  friend bool operator==(const SWInvariant &, const SWInvariant &) = default;

private:
  std::size_t rank_;
  Terms terms_;
};

/// Homology class [T] of the surgery torus, optionally with the
/// intersection form it lives in.
class TorusClass {
public:
  /// Throws DimensionError if the form is not rank x rank, InputError if it
  /// is not symmetric or if [T].Q.[T] != 0.
  explicit TorusClass(LatticeVector vector, std::optional<IntMatrix> form = std::nullopt);

  const LatticeVector &vector() const { return vector_; }
  const std::optional<IntMatrix> &form() const { return form_; }
  std::size_t rank() const { return vector_.size(); }

  static TorusClass basis(std::size_t rank, std::size_t axis);

private:
  LatticeVector vector_;
  std::optional<IntMatrix> form_;
};

enum class Concordance { Product, SliceSum };

/// result(b) = sum_k a_k sw(b - 2k[T]) where delta = sum_k a_k t^k.
SWInvariant knot_surgery(const SWInvariant &sw, const TorusClass &torus,
                         const AlexanderPolynomial &delta);

/// Same product for an arbitrary Laurent polynomial (no normalization).
SWInvariant group_ring_multiply(const SWInvariant &sw, const TorusClass &torus,
                                const LaurentPoly &poly);

bool surgery_composition_check(const SWInvariant &sw, const TorusClass &torus,
                               const AlexanderPolynomial &d1, const AlexanderPolynomial &d2);

/// Product concordance: surgery along K # -K. Slice-sum concordance: the
/// manifold is unchanged, and so is its invariant.
SWInvariant concordance_surgery(const SWInvariant &sw, const TorusClass &torus, const Braid &knot,
                                Concordance kind);

bool sw_equal(const SWInvariant &a, const SWInvariant &b);

/// True iff lifting the twisted surgery to the double cover changes the
/// cover's invariant, which certifies X != X*_K.
bool twisted_surgery_changes(const SWInvariant &sw_cover, const TorusClass &torus,
                             const AlexanderPolynomial &delta);

} // namespace knotsurg
