// knotsurg: Alexander polynomials from braids and knot surgery on
// Seiberg-Witten data.

#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "knotsurg/commands.hpp"
#include "knotsurg/error.hpp"

using namespace knotsurg;

int main(int argc, char **argv) {
  CLI::App app{"Alexander polynomials of braid closures and Fintushel-Stern knot surgery on "
               "Seiberg-Witten data"};
  app.require_subcommand(1);

  std::string braid_text;
  bool use_oracle = false;
  auto *alex = app.add_subcommand("alex", "print the normalized Alexander polynomial of a braid");
  alex->add_option("braid", braid_text, "braid word, e.g. \"B2: s1 s1 s1\"")->required();
  alex->add_flag("--oracle", use_oracle, "use the Fox-calculus route instead of Burau");

  std::string sw_file, knot, output, table_file;
  auto *surgery = app.add_subcommand("surgery", "apply knot surgery to an SW data file");
  surgery->add_option("sw", sw_file, "SW data file (must contain a torus line)")->required();
  surgery->add_option("knot", knot, "braid text or knot table name")->required();
  surgery->add_option("-o,--output", output, "where to write the surgered SW data")->required();
  surgery->add_option("--table", table_file, "knot table for name lookup (default: bundled)");

  std::string file_a, file_b;
  auto *compare = app.add_subcommand("compare", "compare two SW data files");
  compare->add_option("a", file_a)->required();
  compare->add_option("b", file_b)->required();

  bool mirrors = false;
  auto *collisions =
      app.add_subcommand("collisions", "group table knots with equal Alexander polynomials");
  collisions->add_option("table", table_file, "knot table file (default: bundled)");
  collisions->add_flag("--with-mirrors", mirrors, "add mirror(reverse(K)) for every entry");

  Concordance kind = Concordance::Product;
  const std::map<std::string, Concordance> kinds{{"product", Concordance::Product},
                                                 {"slicesum", Concordance::SliceSum}};
  auto *concordance = app.add_subcommand("concordance", "surgery along a concordance of K # -K");
  concordance->add_option("sw", sw_file, "SW data file (must contain a torus line)")->required();
  concordance->add_option("knot", knot, "braid text or knot table name")->required();
  concordance->add_option("--kind", kind, "product | slicesum")
      ->required()
      ->transform(CLI::CheckedTransformer(kinds, CLI::ignore_case));
  concordance->add_option("-o,--output", output, "where to write the result")->required();
  concordance->add_option("--table", table_file, "knot table for name lookup (default: bundled)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e) == 0 ? cli::kOk : cli::kUserError;
  }

  const cli::Streams io{std::cout, std::cerr};
  std::optional<KnotTable> loaded;
  auto table = [&]() -> const KnotTable & {
    if (table_file.empty())
      return KnotTable::bundled();
    loaded = KnotTable::load(table_file);
    return *loaded;
  };

  try {
    if (alex->parsed())
      return cli::cmd_alex(braid_text, use_oracle, io);
    if (surgery->parsed())
      return cli::cmd_surgery(sw_file, knot, output, table(), io);
    if (compare->parsed())
      return cli::cmd_compare(file_a, file_b, io);
    if (collisions->parsed())
      return table_file.empty() ? cli::cmd_collisions(KnotTable::bundled(), mirrors, io)
                                : cli::cmd_collisions(table_file, mirrors, io);
    if (concordance->parsed())
      return cli::cmd_concordance(sw_file, knot, kind, output, table(), io);
  } catch (const InputError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kUserError;
  } catch (const InternalError &e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return cli::kInternalError;
  }
  return cli::kUserError;
}
