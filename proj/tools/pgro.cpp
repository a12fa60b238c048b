// pgro: Groebner bases for modular p-group algebras.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pgro/pgro.hpp"

namespace fs = std::filesystem;

namespace {

struct NamedGroup {
  std::string label;
  std::string text;
};

// `corpus:<label>` names a bundled group; anything else is a path.
NamedGroup resolve_group(const std::string& arg) {
  constexpr std::string_view prefix = "corpus:";
  if (arg.starts_with(prefix)) {
    auto entry = pgro::find_corpus_entry(std::string_view(arg).substr(prefix.size()));
    if (!entry) throw pgro::InputError("no corpus group named " + arg.substr(prefix.size()));
    return {entry->label, entry->text};
  }
  return {fs::path(arg).stem().string(), pgro::read_text_file(arg)};
}

std::vector<NamedGroup> resolve_groups(const std::string& arg) {
  if (arg.starts_with("corpus:") || !fs::is_directory(arg)) return {resolve_group(arg)};
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(arg))
    if (e.is_regular_file()) files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<NamedGroup> out;
  for (const auto& f : files) out.push_back({f.stem().string(), pgro::read_text_file(f.string())});
  if (out.empty()) throw pgro::InputError("no group files in " + arg);
  return out;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw pgro::InputError("cannot write " + path.string());
  out << content;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groebner bases for modular p-group algebras"};
  app.require_subcommand(1);

  std::string group_arg;
  std::string ordering_arg = "ll";
  std::string selection_arg;
  std::uint64_t seed = 0;
  bool use_given = false;
  std::string out_dir;
  std::size_t attempts = 20;
  bool json = false;
  std::string dump_dir;

  auto* info = app.add_subcommand("info", "Print statistics about a group");
  info->add_option("group", group_arg, "Group file or corpus:<label>")->required();

  auto* grobner = app.add_subcommand("grobner", "Compute a Groebner basis and write the nontips and basis files");
  grobner->add_option("group", group_arg, "Group file or corpus:<label>")->required();
  grobner->add_option("--ordering", ordering_arg, "ll, rll or jennings")->required();
  grobner->add_option("--selection", selection_arg, "arbitrary or smallest");
  grobner->add_option("--seed", seed, "Random seed");
  grobner->add_flag("--use-given-generators", use_given, "Use the defining generators (LL/RLL)");
  grobner->add_option("-o,--output", out_dir, "Output directory")->required();

  auto* experiment = app.add_subcommand("experiment", "Basis-size statistics over repeated random generator choices");
  experiment->add_option("group", group_arg, "Group file, directory of group files, or corpus:<label>")->required();
  experiment->add_option("--ordering", ordering_arg, "ll, rll or jennings")->required();
  experiment->add_option("--selection", selection_arg, "arbitrary or smallest");
  experiment->add_option("--attempts", attempts, "Number of attempts")->check(CLI::PositiveNumber);
  experiment->add_option("--seed", seed, "Random seed");
  experiment->add_flag("--json", json, "Machine-readable output");

  auto* corpus = app.add_subcommand("corpus", "The bundled groups");
  corpus->require_subcommand(1);
  auto* corpus_list = corpus->add_subcommand("list", "List bundled groups");
  auto* corpus_dump = corpus->add_subcommand("dump", "Write bundled groups as .grp files");
  corpus_dump->add_option("dir", dump_dir, "Target directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (info->parsed()) {
      auto g = resolve_group(group_arg);
      std::cout << "group: " << g.label << '\n' << pgro::format_info(pgro::group_info(pgro::load_group_text(g.text)));
    } else if (grobner->parsed()) {
      auto g = resolve_group(group_arg);
      pgro::PGroup G = pgro::load_group_text(g.text);
      pgro::PipelineOptions opt;
      opt.ordering = pgro::parse_ordering(ordering_arg);
      if (!selection_arg.empty()) opt.selection = pgro::parse_selection(selection_arg);
      opt.seed = seed;
      opt.use_given_generators = use_given;
      auto result = pgro::run_pipeline(G, opt);
      fs::create_directories(out_dir);
      write_file(fs::path(out_dir) / "nontips.txt", pgro::format_nontips(result.tree, result.context));
      write_file(fs::path(out_dir) / "basis.txt", pgro::format_basis(result.basis));
      std::cout << g.label << ": " << result.basis.size() << " basis elements, " << result.tree.size()
                << " nontips, N = " << result.context.nilpotency() << '\n';
    } else if (experiment->parsed()) {
      auto ordering = pgro::parse_ordering(ordering_arg);
      std::optional<pgro::Selection> selection;
      if (!selection_arg.empty()) selection = pgro::parse_selection(selection_arg);
      nlohmann::json all = nlohmann::json::array();
      for (const auto& g : resolve_groups(group_arg)) {
        pgro::PGroup G = pgro::load_group_text(g.text);
        auto rep = pgro::run_experiment(G, g.label, ordering, selection, attempts, seed);
        if (json)
          all.push_back(pgro::to_json(rep));
        else
          std::cout << pgro::format_report(rep) << '\n';
      }
      if (json) std::cout << all.dump(2) << '\n';
    } else if (corpus_list->parsed()) {
      for (const auto& e : pgro::load_corpus()) std::cout << e.label << ' ' << e.order << '\n';
    } else if (corpus_dump->parsed()) {
      fs::create_directories(dump_dir);
      for (const auto& e : pgro::load_corpus()) write_file(fs::path(dump_dir) / (e.label + ".grp"), e.text);
    }
  } catch (const pgro::Error& e) {
    std::cerr << "pgro: " << e.what() << '\n';
    return e.exit_code();
  } catch (const fs::filesystem_error& e) {
    std::cerr << "pgro: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
