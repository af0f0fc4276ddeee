#include "knotsurg/swcalc.hpp"

#include "knotsurg/error.hpp"

namespace knotsurg {

namespace {

std::string render(const LatticeVector &v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i)
      out += ", ";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

std::int64_t checked_axpy(std::int64_t base, std::int64_t scale, std::int64_t x) {
  std::int64_t prod = 0;
  std::int64_t sum = 0;
  if (__builtin_mul_overflow(scale, x, &prod) || __builtin_add_overflow(base, prod, &sum))
    throw InputError("lattice coordinate overflows 64 bits");
  return sum;
}

void require_rank(std::size_t got, std::size_t want, const std::string &what) {
  if (got != want)
    throw DimensionError(what + ": rank " + std::to_string(got) +
                         " does not match rank " + std::to_string(want));
}

} // namespace

SWInvariant::SWInvariant(std::size_t rank,
                         const std::vector<std::pair<LatticeVector, Integer>> &terms)
    : rank_(rank) {
  for (const auto &[cls, coeff] : terms)
    add_term(cls, coeff);
}

Integer SWInvariant::coefficient(const LatticeVector &cls) const {
  auto it = terms_.find(cls);
  return it == terms_.end() ? Integer(0) : it->second;
}

void SWInvariant::add_term(const LatticeVector &cls, const Integer &coeff) {
  if (cls.size() != rank_)
    require_rank(cls.size(), rank_, "class " + render(cls));
  if (coeff == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(cls, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0)
      terms_.erase(it);
  }
}

SWInvariant &SWInvariant::operator+=(const SWInvariant &other) {
  require_rank(other.rank_, rank_, "sum of SW invariants");
  for (const auto &[cls, coeff] : other.terms_)
    add_term(cls, coeff);
  return *this;
}

Integer SWInvariant::total_coefficient() const {
  Integer sum = 0;
  for (const auto &[cls, coeff] : terms_)
    sum += coeff;
  return sum;
}

std::vector<std::string> SWInvariant::symmetry_warnings() const {
  std::vector<std::string> warnings;
  for (const auto &[cls, coeff] : terms_) {
    LatticeVector neg(cls.size());
    for (std::size_t i = 0; i < cls.size(); ++i)
      neg[i] = checked_axpy(0, -1, cls[i]);
    const Integer partner = coefficient(neg);
    if (partner == 0)
      warnings.push_back("class " + render(cls) + " has no partner " + render(neg));
    else if (abs(partner) != abs(coeff))
      warnings.push_back("class " + render(cls) + " has coefficient " + coeff.get_str() +
                         " but " + render(neg) + " has " + partner.get_str());
  }
  return warnings;
}

TorusClass::TorusClass(LatticeVector vector, std::optional<IntMatrix> form)
    : vector_(std::move(vector)), form_(std::move(form)) {
  if (!form_)
    return;
  const auto &q = *form_;
  const std::size_t b = vector_.size();
  require_rank(q.size(), b, "intersection form");
  for (const auto &row : q)
    require_rank(row.size(), b, "intersection form row");
  Integer self = 0;
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < b; ++j) {
      if (q[i][j] != q[j][i])
        throw InputError("intersection form is not symmetric");
      self += Integer(static_cast<long>(vector_[i])) * Integer(static_cast<long>(q[i][j])) *
              Integer(static_cast<long>(vector_[j]));
    }
  if (self != 0)
    throw InputError("torus class has self-intersection " + self.get_str() + ", expected 0");
}

TorusClass TorusClass::basis(std::size_t rank, std::size_t axis) {
  LatticeVector v(rank, 0);
  v.at(axis) = 1;
  return TorusClass(std::move(v));
}

SWInvariant group_ring_multiply(const SWInvariant &sw, const TorusClass &torus,
                                const LaurentPoly &poly) {
  require_rank(torus.rank(), sw.rank(), "torus class");
  SWInvariant out(sw.rank());
  LatticeVector shifted(sw.rank());
  for (const auto &[k, a] : poly.terms()) {
    std::int64_t step = 0;
    if (__builtin_mul_overflow(k, std::int64_t{2}, &step))
      throw InputError("translation exponent overflows 64 bits");
    for (const auto &[cls, coeff] : sw.terms()) {
      for (std::size_t i = 0; i < cls.size(); ++i)
        shifted[i] = checked_axpy(cls[i], step, torus.vector()[i]);
      out.add_term(shifted, a * coeff);
    }
  }
  return out;
}

SWInvariant knot_surgery(const SWInvariant &sw, const TorusClass &torus,
                         const AlexanderPolynomial &delta) {
  return group_ring_multiply(sw, torus, delta.poly());
}

bool surgery_composition_check(const SWInvariant &sw, const TorusClass &torus,
                               const AlexanderPolynomial &d1, const AlexanderPolynomial &d2) {
  const SWInvariant twice = knot_surgery(knot_surgery(sw, torus, d1), torus, d2);
  const SWInvariant once = group_ring_multiply(sw, torus, mul(d1.poly(), d2.poly()));
  return twice == once;
}

SWInvariant concordance_surgery(const SWInvariant &sw, const TorusClass &torus, const Braid &knot,
                                Concordance kind) {
  require_rank(torus.rank(), sw.rank(), "torus class");
  if (!closes_to_knot(knot))
    throw ComponentError("concordance surgery needs a knot, " + format_braid(knot) +
                         " closes to a link");
  if (kind == Concordance::SliceSum)
    return sw;
  const Braid slice = connected_sum(knot, mirror_reverse(knot));
  return knot_surgery(sw, torus, alexander(slice));
}

bool sw_equal(const SWInvariant &a, const SWInvariant &b) {
  require_rank(b.rank(), a.rank(), "comparison");
  return a.terms() == b.terms();
}

bool twisted_surgery_changes(const SWInvariant &sw_cover, const TorusClass &torus,
                             const AlexanderPolynomial &delta) {
  return !sw_equal(knot_surgery(sw_cover, torus, delta), sw_cover);
}

} // namespace knotsurg
