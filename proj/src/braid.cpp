#include "knotsurg/braid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "knotsurg/error.hpp"

namespace knotsurg {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

bool parse_positive(std::string_view digits, int &out) {
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
      }))
    return false;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), out);
  return ec == std::errc{} && ptr == digits.data() + digits.size() && out > 0;
}

} // namespace

Braid::Braid(int strands, std::vector<Generator> word) : strands_(strands), word_(std::move(word)) {
  if (strands_ < 1)
    throw IndexError("braid needs at least one strand, got " + std::to_string(strands_));
  for (const auto &g : word_) {
    if (g.sign != 1 && g.sign != -1)
      throw IndexError("generator sign must be +1 or -1");
    if (g.index < 1 || g.index >= strands_)
      throw IndexError("generator s" + std::to_string(g.index) + " out of range for " +
                       std::to_string(strands_) + " strands");
  }
}

Braid parse_braid(std::string_view text) {
  std::string_view s = trim(text);
  const auto colon = s.find(':');
  if (s.empty() || s.front() != 'B' || colon == std::string_view::npos)
    throw ParseError("braid must start with 'B<n>:', got '" + std::string(text) + "'");

  int strands = 0;
  if (!parse_positive(s.substr(1, colon - 1), strands))
    throw ParseError("bad strand count in '" + std::string(text) + "'");

  std::vector<Generator> word;
  std::istringstream tokens{std::string(s.substr(colon + 1))};
  std::string tok;
  while (tokens >> tok) {
    std::string_view t = tok;
    if (t.size() < 2 || t.front() != 's')
      throw ParseError("malformed braid token '" + tok + "'");
    t.remove_prefix(1);
    int sign = 1;
    if (t.ends_with("^-1")) {
      sign = -1;
      t.remove_suffix(3);
    }
    int index = 0;
    if (!parse_positive(t, index))
      throw ParseError("malformed braid token '" + tok + "'");
    if (index >= strands)
      throw IndexError("generator s" + std::to_string(index) + " needs more than " +
                       std::to_string(strands) + " strands");
    word.push_back({index, sign});
  }
  return Braid(strands, std::move(word));
}

std::string format_braid(const Braid &b) {
  std::string out = "B" + std::to_string(b.strands()) + ":";
  for (const auto &g : b.word()) {
    out += " s" + std::to_string(g.index);
    if (g.sign < 0)
      out += "^-1";
  }
  return out;
}

int closure_components(const Braid &b) {
  // perm[p] = strand position at the bottom reached from top position p.
  std::vector<int> perm(static_cast<std::size_t>(b.strands()));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> at(perm); // at[position] = starting strand currently there
  for (const auto &g : b.word())
    std::swap(at[g.index - 1], at[g.index]);
  for (std::size_t pos = 0; pos < at.size(); ++pos)
    perm[static_cast<std::size_t>(at[pos])] = static_cast<int>(pos);

  std::vector<bool> seen(perm.size(), false);
  int cycles = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i])
      continue;
    ++cycles;
    for (auto j = i; !seen[j]; j = static_cast<std::size_t>(perm[j]))
      seen[j] = true;
  }
  return cycles;
}

Braid mirror(const Braid &b) {
  auto word = b.word();
  for (auto &g : word)
    g.sign = -g.sign;
  return Braid(b.strands(), std::move(word));
}

Braid reverse(const Braid &b) {
  auto word = b.word();
  std::reverse(word.begin(), word.end());
  return Braid(b.strands(), std::move(word));
}

Braid mirror_reverse(const Braid &b) { return mirror(reverse(b)); }

Braid connected_sum(const Braid &a, const Braid &b) {
  if (!closes_to_knot(a) || !closes_to_knot(b))
    throw ComponentError("connected sum needs two knots, got closures with " +
                         std::to_string(closure_components(a)) + " and " +
                         std::to_string(closure_components(b)) + " components");
  const int offset = a.strands() - 1;
  auto word = a.word();
  for (auto g : b.word()) {
    g.index += offset;
    word.push_back(g);
  }
  return Braid(a.strands() + b.strands() - 1, std::move(word));
}

Braid stabilize(const Braid &b, int sign) {
  auto word = b.word();
  word.push_back({b.strands(), sign});
  return Braid(b.strands() + 1, std::move(word));
}

} // namespace knotsurg
