#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "knotsurg/alexander.hpp"
#include "knotsurg/braid.hpp"

namespace knotsurg {

struct KnotEntry {
  std::string name;
  Braid braid;
};

/// Named knots in file order. Names are unique and nonempty and every braid
/// closes to a knot; add() and the loaders enforce this.
class KnotTable {
public:
  /// Throws InputError naming the entry on a duplicate/empty name or a link.
  void add(std::string name, Braid braid);

  const std::vector<KnotEntry> &entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  const KnotEntry *find(std::string_view name) const;

  /// Format: one `name<TAB>braid` per line; blank lines and lines starting
  /// with '#' are skipped.
  static KnotTable parse(std::string_view text);
  static KnotTable load(const std::filesystem::path &path);

  /// The table shipped with the library (data/knots.tsv).
  static const KnotTable &bundled();
  static std::string_view bundled_text();

private:
  std::vector<KnotEntry> entries_;
};

/// Appends "<name>-mr" = mirror(reverse(braid)) after every entry's original.
KnotTable with_mirrors(const KnotTable &table);

struct CollisionGroup {
  AlexanderPolynomial delta;
  std::vector<std::string> names; // table order, at least two
};

struct CollisionReport {
  std::vector<CollisionGroup> groups; // sorted by rendered polynomial

  std::string render() const;
};

/// Groups table entries by Alexander polynomial and keeps the groups with
/// two or more members. Entries are evaluated concurrently.
CollisionReport find_collisions(const KnotTable &table);

/// Accepts either braid text ("B2: s1 s1 s1") or a table name.
Braid resolve_knot(std::string_view spec, const KnotTable &table);

} // namespace knotsurg
