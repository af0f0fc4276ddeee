#pragma once

#include <filesystem>
#include <iosfwd>
#include <string_view>

#include "knotsurg/knot_table.hpp"
#include "knotsurg/swcalc.hpp"

namespace knotsurg::cli {

// Exit codes shared by every command.
inline constexpr int kOk = 0;
inline constexpr int kUserError = 1;
inline constexpr int kInternalError = 2;

struct Streams {
  std::ostream &out;
  std::ostream &err;
};

int cmd_alex(std::string_view braid_text, bool use_oracle, Streams io);

int cmd_surgery(const std::filesystem::path &sw_file, std::string_view knot,
                const std::filesystem::path &output, const KnotTable &table, Streams io);

int cmd_compare(const std::filesystem::path &a, const std::filesystem::path &b, Streams io);

int cmd_collisions(const KnotTable &table, bool add_mirrors, Streams io);
int cmd_collisions(const std::filesystem::path &table_file, bool add_mirrors, Streams io);

int cmd_concordance(const std::filesystem::path &sw_file, std::string_view knot, Concordance kind,
                    const std::filesystem::path &output, const KnotTable &table, Streams io);

} // namespace knotsurg::cli
