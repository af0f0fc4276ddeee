#include "knotsurg/commands.hpp"

#include <ostream>

#include "knotsurg/error.hpp"
#include "knotsurg/sw_format.hpp"

namespace knotsurg::cli {

namespace {

template <typename Body> int guarded(Streams io, Body &&body) {
  try {
    return body();
  } catch (const InputError &e) {
    io.err << "error: " << e.what() << '\n';
    return kUserError;
  } catch (const InternalError &e) {
    io.err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

SWData load_with_warnings(const std::filesystem::path &path, Streams io) {
  SWData data = read_sw_file(path);
  for (const auto &w : data.sw.symmetry_warnings())
    io.err << "warning: " << path.string() << ": " << w << '\n';
  return data;
}

} // namespace

int cmd_alex(std::string_view braid_text, bool use_oracle, Streams io) {
  return guarded(io, [&] {
    const Braid b = parse_braid(braid_text);
    const AlexanderPolynomial delta = use_oracle ? alexander_oracle(b) : alexander(b);
    io.out << delta.to_string() << '\n';
    return kOk;
  });
}

int cmd_surgery(const std::filesystem::path &sw_file, std::string_view knot,
                const std::filesystem::path &output, const KnotTable &table, Streams io) {
  return guarded(io, [&] {
    SWData data = load_with_warnings(sw_file, io);
    const TorusClass torus = data.torus_class();
    const Braid k = resolve_knot(knot, table);
    const std::size_t before = data.sw.support_size();
    data.sw = knot_surgery(data.sw, torus, alexander(k));
    write_sw_file(output, data);
    io.out << "support " << before << " -> " << data.sw.support_size() << '\n';
    return kOk;
  });
}

int cmd_compare(const std::filesystem::path &a, const std::filesystem::path &b, Streams io) {
  return guarded(io, [&] {
    const SWData lhs = load_with_warnings(a, io);
    const SWData rhs = load_with_warnings(b, io);
    io.out << (sw_equal(lhs.sw, rhs.sw) ? "INDISTINGUISHABLE" : "DISTINCT") << '\n';
    return kOk;
  });
}

int cmd_collisions(const KnotTable &table, bool add_mirrors, Streams io) {
  return guarded(io, [&] {
    const CollisionReport report = find_collisions(add_mirrors ? with_mirrors(table) : table);
    io.out << report.render();
    return kOk;
  });
}

int cmd_collisions(const std::filesystem::path &table_file, bool add_mirrors, Streams io) {
  return guarded(io, [&] {
    return cmd_collisions(KnotTable::load(table_file), add_mirrors, io);
  });
}

int cmd_concordance(const std::filesystem::path &sw_file, std::string_view knot, Concordance kind,
                    const std::filesystem::path &output, const KnotTable &table, Streams io) {
  return guarded(io, [&] {
    SWData data = load_with_warnings(sw_file, io);
    const TorusClass torus = data.torus_class();
    const Braid k = resolve_knot(knot, table);
    const SWInvariant result = concordance_surgery(data.sw, torus, k, kind);
    const bool changed = !sw_equal(result, data.sw);
    const std::size_t before = data.sw.support_size();
    data.sw = result;
    write_sw_file(output, data);
    io.out << "support " << before << " -> " << data.sw.support_size() << '\n';
    io.out << (changed ? "CHANGED" : "UNCHANGED") << '\n';
    return kOk;
  });
}

} // namespace knotsurg::cli
