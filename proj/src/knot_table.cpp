#include "knotsurg/knot_table.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <map>
#include <sstream>

#include "knotsurg/error.hpp"

namespace knotsurg {

namespace detail {
extern const char *const bundled_knot_table;
}

void KnotTable::add(std::string name, Braid braid) {
  if (name.empty())
    throw InputError("knot table entry with empty name (" + format_braid(braid) + ")");
  if (find(name))
    throw InputError("duplicate knot table entry '" + name + "'");
  const int components = closure_components(braid);
  if (components != 1)
    throw ComponentError("knot table entry '" + name + "': " + format_braid(braid) +
                         " closes to a link with " + std::to_string(components) +
                         " components");
  entries_.push_back({std::move(name), std::move(braid)});
}

const KnotEntry *KnotTable::find(std::string_view name) const {
  auto it = std::find_if(entries_.begin(), entries_.end(),
                         [&](const KnotEntry &e) { return e.name == name; });
  return it == entries_.end() ? nullptr : &*it;
}

KnotTable KnotTable::parse(std::string_view text) {
  KnotTable table;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    if (line.empty() || line.front() == '#')
      continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw ParseError("knot table line " + std::to_string(lineno) + ": expected name<TAB>braid");
    std::string name = line.substr(0, tab);
    Braid braid;
    try {
      braid = parse_braid(line.substr(tab + 1));
    } catch (const InputError &e) {
      throw ParseError("knot table entry '" + name + "' (line " + std::to_string(lineno) +
                       "): " + e.what());
    }
    table.add(std::move(name), std::move(braid));
  }
  return table;
}

KnotTable KnotTable::load(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InputError("cannot open knot table " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::string_view KnotTable::bundled_text() { return detail::bundled_knot_table; }

const KnotTable &KnotTable::bundled() {
  static const KnotTable table = parse(bundled_text());
  return table;
}

KnotTable with_mirrors(const KnotTable &table) {
  KnotTable out;
  for (const auto &e : table.entries()) {
    out.add(e.name, e.braid);
    out.add(e.name + "-mr", mirror_reverse(e.braid));
  }
  return out;
}

std::string CollisionReport::render() const {
  std::string out = "collisions " + std::to_string(groups.size()) + "\n";
  for (const auto &g : groups) {
    out += g.delta.to_string();
    out += '\t';
    for (std::size_t i = 0; i < g.names.size(); ++i) {
      if (i)
        out += ' ';
      out += g.names[i];
    }
    out += '\n';
  }
  return out;
}

CollisionReport find_collisions(const KnotTable &table) {
  std::vector<std::future<AlexanderPolynomial>> pending;
  pending.reserve(table.size());
  for (const auto &e : table.entries())
    pending.push_back(std::async(std::launch::async, [&b = e.braid] { return alexander(b); }));

  // Keyed by rendering so the report order is deterministic.
  std::map<std::string, CollisionGroup> by_delta;
  for (std::size_t i = 0; i < pending.size(); ++i) {
    AlexanderPolynomial delta = pending[i].get();
    auto [it, inserted] = by_delta.try_emplace(delta.to_string(), CollisionGroup{delta, {}});
    it->second.names.push_back(table.entries()[i].name);
  }

  CollisionReport report;
  for (auto &[key, group] : by_delta)
    if (group.names.size() >= 2)
      report.groups.push_back(std::move(group));
  return report;
}

Braid resolve_knot(std::string_view spec, const KnotTable &table) {
  auto start = spec.find_first_not_of(" \t");
  if (start != std::string_view::npos && spec[start] == 'B' &&
      spec.find(':') != std::string_view::npos)
    return parse_braid(spec);
  if (const KnotEntry *e = table.find(spec))
    return e->braid;
  throw InputError("'" + std::string(spec) + "' is neither braid text nor a known knot name");
}

} // namespace knotsurg
