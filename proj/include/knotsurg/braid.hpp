#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace knotsurg {

/// One letter of a braid word: sigma_index^sign with sign in {+1, -1}.
struct Generator {
  int index = 1;
  int sign = 1;

  friend bool operator==(const Generator &, const Generator &) = default;
};

/// A braid on `strands()` strands. Generator indices lie in [1, strands - 1];
/// the empty word on n strands closes to the n-component unlink.
class Braid {
public:
  Braid() = default;
  /// Throws IndexError if a letter is out of range or has a bad sign.
  Braid(int strands, std::vector<Generator> word);

  int strands() const { return strands_; }
  const std::vector<Generator> &word() const { return word_; }
  std::size_t length() const { return word_.size(); }

  friend bool operator==(const Braid &, const Braid &) = default;

private:
  int strands_ = 1;
  std::vector<Generator> word_;
};

/// Grammar: "B<n>:" followed by whitespace separated "s<i>" or "s<i>^-1".
/// Throws ParseError on malformed text and IndexError when i >= n.
Braid parse_braid(std::string_view text);

/// Inverse of parse_braid, e.g. "B3: s1 s2^-1".
std::string format_braid(const Braid &b);

/// Number of cycles of the underlying permutation, i.e. the number of
/// components of the closure.
int closure_components(const Braid &b);

inline bool closes_to_knot(const Braid &b) { return closure_components(b) == 1; }

Braid mirror(const Braid &b);
Braid reverse(const Braid &b);

/// mirror(reverse(b)), the -K used throughout.
Braid mirror_reverse(const Braid &b);

/// Places b to the right of a, sharing a's last strand. Both closures must
/// be knots (ComponentError otherwise).
Braid connected_sum(const Braid &a, const Braid &b);

/// Markov stabilization: adds a strand and appends sigma_n^sign.
Braid stabilize(const Braid &b, int sign = 1);

} // namespace knotsurg
