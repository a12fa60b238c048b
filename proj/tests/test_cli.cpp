#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <gtest/gtest.h>
#include <json.hpp>

#include "pgro/pgro.hpp"
#include "test_groups.hpp"

using namespace pgro;
namespace fs = std::filesystem;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("pgro_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter_++));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const fs::path& path() const { return path_; }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

Run cli(const std::string& args) {
  TempDir tmp;
  const fs::path log = tmp.path() / "out.txt";
  const std::string cmd = std::string(PGRO_CLI_PATH) + " " + args + " > " + log.string() + " 2>/dev/null";
  Run r;
  int raw = std::system(cmd.c_str());
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.out = read_text_file(log.string());
  return r;
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream(p) << text;
}

const char* c4_file = "# cyclic\nperm 4 1\n2 3 4 1\n";

}  // namespace

TEST(GroupFile, Perm) {
  PGroup G = load_group_text(c4_file);
  EXPECT_EQ(G.order(), 4u);
  EXPECT_EQ(G.degree(), 4u);
  PGroup V = load_group_text("perm 4 2\n2 1 4 3\n\n   # inline comment line\n3 4 1 2\n");
  EXPECT_EQ(V.order(), 4u);
  EXPECT_EQ(V.generators().size(), 2u);
}

TEST(GroupFile, Table) {
  PGroup G = load_group_text("table 2 1\n1 2\n2 1\n2\n");
  EXPECT_EQ(G.order(), 2u);
  EXPECT_EQ(G.degree(), 2u);
}

TEST(GroupFile, Errors) {
  EXPECT_THROW(load_group_text(""), InputError);
  EXPECT_THROW(load_group_text("# only a comment\n"), InputError);
  EXPECT_THROW(load_group_text("matrix 2 1\n"), InputError);
  EXPECT_THROW(load_group_text("perm 4 2\n2 3 4 1\n"), InputError);
  EXPECT_THROW(load_group_text("perm 4 1\n2 3 4\n"), InputError);
  EXPECT_THROW(load_group_text("perm 4 1\n2 3 x 1\n"), InputError);
  EXPECT_THROW(load_group_text("perm 3 1\n1 1 2\n"), InputError);
  EXPECT_THROW(load_group_text("perm 5 2\n2 3 1 4 5\n1 2 3 5 4\n"), NotAPGroup);
  EXPECT_THROW(load_group_text("table 2 1\n1 2\n1 2\n2\n"), MalformedTable);
  EXPECT_THROW(load_group_text("table 2 1\n1 2\n2 1\n3\n"), MalformedTable);
  EXPECT_THROW(load_group_file("/nonexistent/pgro.grp"), InputError);
}

TEST(Corpus, EntriesCloseToDeclaredOrder) {
  const auto& corpus = load_corpus();
  EXPECT_GE(corpus.size(), 12u);
  std::size_t order32 = 0;
  for (const auto& e : corpus) {
    EXPECT_EQ(e.load().order(), e.order) << e.label;
    if (e.order == 32) ++order32;
  }
  EXPECT_GE(order32, 5u);
  auto ex = find_corpus_entry("C2^3:C4");
  ASSERT_TRUE(ex);
  EXPECT_EQ(ex->order, 32u);
  auto d8 = find_corpus_entry("D8");
  ASSERT_TRUE(d8);
  EXPECT_EQ(group_info(d8->load()).jennings_basis_size, 6u);
  EXPECT_FALSE(find_corpus_entry("nosuchgroup"));
}

TEST(Info, Examples) {
  auto c4 = group_info(pgro::testing::cyclic_group(4));
  EXPECT_EQ(c4.order, 4u);
  EXPECT_EQ(c4.prime, 2u);
  EXPECT_EQ(c4.nilpotency, 4u);
  EXPECT_EQ(c4.radical_layers, (std::vector<std::size_t>{1, 1, 1, 1}));
  EXPECT_EQ(c4.jennings_basis_size, 3u);

  auto v4 = group_info(pgro::testing::klein_four());
  EXPECT_EQ(v4.nilpotency, 3u);
  EXPECT_EQ(v4.radical_layers, (std::vector<std::size_t>{1, 2, 1}));
  EXPECT_EQ(v4.jennings_basis_size, 3u);

  auto ex = group_info(find_corpus_entry("C2^3:C4")->load());
  EXPECT_EQ(ex.order, 32u);
  EXPECT_EQ(ex.jennings_layers, (std::vector<unsigned>{2, 2, 1}));
  EXPECT_EQ(ex.jennings_basis_size, 15u);
}

TEST(Report, CyclicFourJenningsText) {
  PipelineOptions opt;
  opt.ordering = OrderingKind::Jennings;
  auto res = run_pipeline(pgro::testing::cyclic_group(4), opt);
  EXPECT_EQ(format_nontips(res.tree, res.context),
            "nontips 2 2 2 4 jennings\n"
            "0 0 1 -1 0\n"
            "1 1 a1 0 1\n"
            "2 1 a2 0 2\n"
            "3 2 a2*a1 2 1\n");
  EXPECT_EQ(format_basis(res.basis),
            "a2*a2 = 0\n"
            "a1*a2 = 1*a2*a1\n"
            "a1*a1 = 1*a2\n");
}

TEST(Report, RllHeaderAndCyclicPrime) {
  PipelineOptions opt;
  opt.ordering = OrderingKind::RLL;
  auto res = run_pipeline(pgro::testing::cyclic_group(4), opt);
  EXPECT_EQ(format_basis(res.basis), "modulo words of length >= 4\na1*a1*a1*a1 = 0\n");
  opt.ordering = OrderingKind::LL;
  auto c3 = run_pipeline(pgro::testing::cyclic_group(3), opt);
  EXPECT_EQ(format_basis(c3.basis), "a1*a1*a1 = 0\n");
}

TEST(Report, JenningsExampleSize) {
  PipelineOptions opt;
  opt.ordering = OrderingKind::Jennings;
  opt.seed = 17;
  EXPECT_EQ(run_pipeline(find_corpus_entry("C2^3:C4")->load(), opt).basis.size(), 15u);
}

TEST(Report, Deterministic) {
  PGroup G = find_corpus_entry("C4wrC2")->load();
  for (auto kind : {OrderingKind::LL, OrderingKind::RLL, OrderingKind::Jennings}) {
    PipelineOptions opt;
    opt.ordering = kind;
    opt.seed = 12345;
    auto a = run_pipeline(G, opt), b = run_pipeline(G, opt);
    EXPECT_EQ(format_nontips(a.tree, a.context), format_nontips(b.tree, b.context));
    EXPECT_EQ(format_basis(a.basis), format_basis(b.basis));
  }
}

TEST(Experiment, Statistics) {
  for (const char* label : {"D8", "C3xC3", "C2^3:C4", "C8:C8"}) {
    PGroup G = find_corpus_entry(label)->load();
    auto j = run_experiment(G, label, OrderingKind::Jennings, std::nullopt, 5, 3);
    EXPECT_EQ(j.min, jennings_basis_size(G.exponent()));
    EXPECT_EQ(j.max, j.min);
    EXPECT_EQ(j.stddev, 0.0);
    EXPECT_FALSE(j.selection);
    for (auto kind : {OrderingKind::LL, OrderingKind::RLL}) {
      for (auto sel : {Selection::Arbitrary, Selection::SmallestExponent}) {
        auto r = run_experiment(G, label, kind, sel, 6, 8);
        ASSERT_EQ(r.sizes.size(), 6u);
        EXPECT_LE(static_cast<double>(r.min), r.mean);
        EXPECT_LE(r.mean, static_cast<double>(r.max));
        EXPECT_GE(r.stddev, 0.0);
        EXPECT_EQ(r.sizes, run_experiment(G, label, kind, sel, 6, 8).sizes);
      }
    }
  }
  auto c4 = run_experiment(pgro::testing::cyclic_group(4), "C4", OrderingKind::LL, std::nullopt, 7, 1);
  EXPECT_EQ(c4.min, 1u);
  EXPECT_EQ(c4.max, 1u);
  EXPECT_EQ(c4.selection, Selection::SmallestExponent);
  EXPECT_THROW(run_experiment(pgro::testing::cyclic_group(4), "C4", OrderingKind::LL, std::nullopt, 0, 1), InputError);
}

TEST(Experiment, SampleStandardDeviation) {
  PGroup G = find_corpus_entry("C2wrC4")->load();
  auto r = run_experiment(G, "C2wrC4", OrderingKind::LL, Selection::Arbitrary, 10, 2);
  double ss = 0;
  for (auto s : r.sizes) ss += (static_cast<double>(s) - r.mean) * (static_cast<double>(s) - r.mean);
  EXPECT_NEAR(r.stddev, std::sqrt(ss / 9.0), 1e-12);
}

TEST(Cli, InfoAndCorpus) {
  auto r = cli("info corpus:C4");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("nilpotency degree N: 4"), std::string::npos);
  EXPECT_NE(r.out.find("Je: 3"), std::string::npos);

  auto list = cli("corpus list");
  EXPECT_EQ(list.status, 0);
  EXPECT_NE(list.out.find("D8 8"), std::string::npos);

  TempDir tmp;
  EXPECT_EQ(cli("corpus dump " + tmp.path().string()).status, 0);
  EXPECT_EQ(load_group_file((tmp.path() / "Q8.grp").string()).order(), 8u);
}

TEST(Cli, GrobnerWritesFiles) {
  TempDir tmp;
  write_file(tmp.path() / "c4.grp", c4_file);
  const fs::path out = tmp.path() / "out";
  auto r = cli("grobner " + (tmp.path() / "c4.grp").string() + " --ordering jennings -o " + out.string());
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(read_text_file((out / "basis.txt").string()), "a2*a2 = 0\na1*a2 = 1*a2*a1\na1*a1 = 1*a2\n");
  EXPECT_EQ(read_text_file((out / "nontips.txt").string()).substr(0, 24), "nontips 2 2 2 4 jennings");
}

TEST(Cli, GrobnerByteIdentical) {
  TempDir tmp;
  const std::string args = "grobner corpus:SD32 --ordering ll --selection arbitrary --seed 99 -o ";
  ASSERT_EQ(cli(args + (tmp.path() / "a").string()).status, 0);
  ASSERT_EQ(cli(args + (tmp.path() / "b").string()).status, 0);
  for (const char* f : {"basis.txt", "nontips.txt"})
    EXPECT_EQ(read_text_file((tmp.path() / "a" / f).string()), read_text_file((tmp.path() / "b" / f).string()));
}

TEST(Cli, GivenGenerators) {
  TempDir tmp;
  auto r = cli("grobner corpus:V4 --ordering ll --use-given-generators -o " + tmp.path().string());
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(read_text_file((tmp.path() / "basis.txt").string()), "a1*a1 = 0\na2*a1 = 1*a1*a2\na2*a2 = 0\n");
  EXPECT_EQ(cli("grobner corpus:V4 --ordering jennings --use-given-generators -o " + tmp.path().string()).status, 2);
}

TEST(Cli, ExperimentJson) {
  TempDir tmp;
  write_file(tmp.path() / "c4.grp", c4_file);
  write_file(tmp.path() / "v4.grp", "perm 4 2\n2 1 4 3\n3 4 1 2\n");
  auto r = cli("experiment " + tmp.path().string() + " --ordering jennings --attempts 5 --seed 1 --json");
  ASSERT_EQ(r.status, 0);
  auto j = nlohmann::json::parse(r.out);
  ASSERT_TRUE(j.is_array());
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0]["group"], "c4");
  EXPECT_EQ(j[1]["group"], "v4");
  for (const auto& rep : j) {
    EXPECT_EQ(rep["min"], 3);
    EXPECT_EQ(rep["max"], 3);
    EXPECT_EQ(rep["stddev"], 0.0);
    EXPECT_EQ(rep["sizes"].size(), 5u);
  }
  auto text = cli("experiment corpus:C4 --ordering ll --attempts 3 --seed 1");
  EXPECT_EQ(text.status, 0);
  EXPECT_NE(text.out.find("min=1 max=1"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  TempDir tmp;
  write_file(tmp.path() / "bad.grp", "perm 5 2\n2 3 1 4 5\n1 2 3 5 4\n");
  write_file(tmp.path() / "junk.grp", "hello\n");
  EXPECT_EQ(cli("info " + (tmp.path() / "bad.grp").string()).status, 2);
  EXPECT_EQ(cli("info " + (tmp.path() / "junk.grp").string()).status, 2);
  EXPECT_EQ(cli("info " + (tmp.path() / "missing.grp").string()).status, 2);
  EXPECT_EQ(cli("info corpus:nosuchgroup").status, 2);
  EXPECT_EQ(cli("grobner corpus:C4 --ordering bogus -o " + tmp.path().string()).status, 2);
  EXPECT_EQ(cli("experiment corpus:C4 --ordering ll --attempts 0 --seed 1").status, 2);
  EXPECT_EQ(cli("").status, 2);
}
