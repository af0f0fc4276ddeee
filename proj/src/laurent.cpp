#include "knotsurg/laurent.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

#include "knotsurg/error.hpp"

namespace knotsurg {

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<Exponent, long>> terms) {
  for (const auto &[k, c] : terms)
    add_term(k, Integer(c));
}

LaurentPoly::LaurentPoly(Terms terms) {
  for (auto &[k, c] : terms)
    add_term(k, c);
}

LaurentPoly LaurentPoly::constant(const Integer &c) { return monomial(c, 0); }

LaurentPoly LaurentPoly::monomial(const Integer &c, Exponent k) {
  LaurentPoly p;
  p.add_term(k, c);
  return p;
}

void LaurentPoly::add_term(Exponent k, const Integer &c) {
  if (c == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

Integer LaurentPoly::coefficient(Exponent k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Integer(0) : it->second;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto &[k, c] : r.terms_)
    c = -c;
  return r;
}

LaurentPoly &LaurentPoly::operator+=(const LaurentPoly &q) {
  for (const auto &[k, c] : q.terms_)
    add_term(k, c);
  return *this;
}

LaurentPoly &LaurentPoly::operator-=(const LaurentPoly &q) {
  for (const auto &[k, c] : q.terms_)
    add_term(k, -c);
  return *this;
}

LaurentPoly &LaurentPoly::operator*=(const LaurentPoly &q) {
  *this = *this * q;
  return *this;
}

LaurentPoly operator*(const LaurentPoly &p, const LaurentPoly &q) {
  LaurentPoly r;
  Integer prod;
  for (const auto &[i, a] : p.terms_)
    for (const auto &[j, b] : q.terms_) {
      prod = a * b;
      r.add_term(i + j, prod);
    }
  return r;
}

LaurentPoly LaurentPoly::shifted(Exponent k) const {
  LaurentPoly r;
  for (const auto &[e, c] : terms_)
    r.terms_.emplace_hint(r.terms_.end(), e + k, c);
  return r;
}

LaurentPoly LaurentPoly::inverted() const {
  LaurentPoly r;
  for (const auto &[e, c] : terms_)
    r.terms_.emplace(-e, c);
  return r;
}

namespace {

void append_term(std::string &out, const Integer &abs_coeff, Exponent k) {
  if (k == 0) {
    out += abs_coeff.get_str();
    return;
  }
  if (abs_coeff != 1)
    out += abs_coeff.get_str();
  out += "t^";
  out += std::to_string(k);
}

} // namespace

std::string LaurentPoly::to_string() const {
  if (terms_.empty())
    return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto &[k, c] = *it;
    const bool negative = c < 0;
    if (first) {
      if (negative)
        out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    append_term(out, abs(c), k);
    first = false;
  }
  return out;
}

std::ostream &operator<<(std::ostream &os, const LaurentPoly &p) { return os << p.to_string(); }

LaurentPoly LaurentPoly::parse(std::string_view text) {
  std::string s;
  bool gap = false;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) {
      gap = true;
      continue;
    }
    // "1 2" is two numbers, not twelve
    if (gap && !s.empty() && std::isdigit(static_cast<unsigned char>(s.back())) &&
        std::isdigit(static_cast<unsigned char>(ch)))
      throw ParseError("malformed polynomial '" + std::string(text) + "'");
    gap = false;
    s += ch;
  }
  if (s.empty())
    throw ParseError("empty polynomial");

  auto fail = [&](std::size_t pos) {
    throw ParseError("malformed polynomial '" + std::string(text) + "' at offset " +
                     std::to_string(pos));
  };
  auto read_digits = [&](std::size_t &pos) {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    return s.substr(start, pos - start);
  };

  LaurentPoly p;
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      fail(pos);
    }
    first = false;

    std::string digits = read_digits(pos);
    bool has_var = false;
    Exponent k = 0;
    if (pos < s.size() && s[pos] == '*') {
      if (digits.empty())
        fail(pos);
      ++pos;
      if (pos >= s.size() || s[pos] != 't')
        fail(pos);
    }
    if (pos < s.size() && s[pos] == 't') {
      has_var = true;
      k = 1;
      ++pos;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        int esign = 1;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
          esign = s[pos] == '-' ? -1 : 1;
          ++pos;
        }
        std::string edigits = read_digits(pos);
        if (edigits.empty() || edigits.size() > 18)
          fail(pos);
        k = esign * static_cast<Exponent>(std::stoll(edigits));
      }
    }
    if (digits.empty() && !has_var)
      fail(pos);
    Integer c = digits.empty() ? Integer(1) : Integer(digits);
    p.add_term(k, sign * c);
  }
  return p;
}

LaurentPoly add(const LaurentPoly &p, const LaurentPoly &q) { return p + q; }

LaurentPoly mul(const LaurentPoly &p, const LaurentPoly &q) { return p * q; }

std::optional<LaurentPoly> try_exact_div(const LaurentPoly &p, const LaurentPoly &d) {
  if (d.is_zero())
    throw DomainError("division by the zero polynomial");
  if (p.is_zero())
    return LaurentPoly{};

  // Quotient exponents are confined to [lo, max(p) - max(d)].
  const Exponent lo = p.min_exponent() - d.min_exponent();
  const Integer &lead = d.terms().rbegin()->second;
  const Exponent top = d.max_exponent();

  LaurentPoly quotient;
  LaurentPoly rem = p;
  Integer c;
  while (!rem.is_zero()) {
    const Exponent k = rem.max_exponent() - top;
    if (k < lo)
      return std::nullopt;
    const Integer &r_lead = rem.terms().rbegin()->second;
    if (!mpz_divisible_p(r_lead.get_mpz_t(), lead.get_mpz_t()))
      return std::nullopt;
    mpz_divexact(c.get_mpz_t(), r_lead.get_mpz_t(), lead.get_mpz_t());
    const LaurentPoly step = LaurentPoly::monomial(c, k);
    rem -= step * d;
    quotient += step;
  }
  return quotient;
}

LaurentPoly exact_div(const LaurentPoly &p, const LaurentPoly &d) {
  auto q = try_exact_div(p, d);
  if (!q) {
    throw InexactDivision("inexact division: (" + p.to_string() + ") / (" + d.to_string() +
                          ") leaves a remainder");
  }
  return std::move(*q);
}

Rational evaluate(const LaurentPoly &p, const Integer &x) {
  if (x == 0)
    throw DomainError("evaluate: t = 0 is outside the domain of a Laurent polynomial");
  Rational sum = 0;
  Integer power;
  for (const auto &[k, c] : p.terms()) {
    const auto mag = static_cast<unsigned long>(k < 0 ? -k : k);
    mpz_pow_ui(power.get_mpz_t(), x.get_mpz_t(), mag);
    if (k >= 0)
      sum += Rational(c * power);
    else {
      Rational term(c, power);
      term.canonicalize();
      sum += term;
    }
  }
  return sum;
}

bool is_symmetric(const LaurentPoly &p) {
  for (const auto &[k, c] : p.terms())
    if (p.coefficient(-k) != c)
      return false;
  return true;
}

} // namespace knotsurg
