#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "knotsurg/swcalc.hpp"

namespace knotsurg {

/// Contents of an SW data file:
///
///   rank <b>
///   torus <b integers>            (optional)
///   form                          (optional, followed by b rows of b integers)
///   class <b integers> coeff <c>  (one per basic class, c != 0)
///
/// On output the class lines are sorted lexicographically by class vector.
struct SWData {
  SWInvariant sw;
  std::optional<LatticeVector> torus;
  std::optional<IntMatrix> form;

  /// Throws InputError if the file carries no torus line.
  TorusClass torus_class() const;
};

SWData parse_sw_data(std::string_view text);
std::string format_sw_data(const SWData &data);

SWData read_sw_file(const std::filesystem::path &path);
void write_sw_file(const std::filesystem::path &path, const SWData &data);

} // namespace knotsurg
