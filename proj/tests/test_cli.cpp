#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "corpus.hpp"
#include "orsrs/cli.hpp"

namespace orsrs {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("orsrs_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const Certificate& c) const {
    std::ofstream(path(name)) << serialize(c);
    return path(name);
  }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }

  fs::path dir_;
};

TEST_F(CliTest, VerifyExitCodes) {
  const std::string ors6 = write("ors6.json", testing::ors6());
  EXPECT_EQ(run({"verify", "--kind", "ors", "--engine", "both", ors6}).code, cli::kExitOk);

  const CliRun rs = run({"verify", "--kind", "rs", ors6});
  EXPECT_EQ(rs.code, cli::kExitDomain);
  EXPECT_EQ(nlohmann::json::parse(rs.out), nlohmann::json::parse(R"({"i":2,"edge":[1,3],"j":1})"));

  const CliRun naive = run({"verify", "--kind", "rs", "--engine", "naive", ors6});
  EXPECT_EQ(naive.code, cli::kExitDomain);
  EXPECT_EQ(naive.out, rs.out);
}

TEST_F(CliTest, VerifyBehrend) {
  const std::string cert = path("behrend.json");
  ASSERT_EQ(run({"gen", "behrend", "--m", "9", "-o", cert}).code, cli::kExitOk);
  EXPECT_EQ(run({"verify", "--kind", "rs", "--engine", "both", cert}).code, cli::kExitOk);
  EXPECT_EQ(run({"verify", "--kind", "ors", "--engine", "both", "--threads", "3", cert}).code, cli::kExitOk);
}

TEST_F(CliTest, TensorPipeline) {
  const std::string in = write("ors6.json", testing::ors6());
  const std::string out = path("out.json");
  const CliRun t = run({"tensor", "--k", "2", in, "-o", out});
  ASSERT_EQ(t.code, cli::kExitOk) << t.out;
  EXPECT_EQ(t.err, "s\tcount\n2\t1\n3\t2\n4\t1\ns*\t3\n");
  EXPECT_EQ(run({"verify", "--kind", "rs", out}).code, cli::kExitOk);

  const Certificate product = load_certificate(slurp(out));
  EXPECT_EQ(product.vertex_count(), 36u);
  EXPECT_EQ(product.matching_count(), 2u);
  EXPECT_EQ(product.matching_size(), 4u);
}

TEST_F(CliTest, TensorAllLayersAndErrors) {
  const std::string in = write("ors6.json", testing::ors6());
  ASSERT_EQ(run({"tensor", "--k", "2", "--all-layers", in, "-o", path("layer.json")}).code, cli::kExitOk);
  for (int s : {2, 3, 4}) EXPECT_TRUE(fs::exists(path("layer.s" + std::to_string(s) + ".json"))) << s;

  const CliRun stdout_layers = run({"tensor", "--k", "2", "--all-layers", in});
  EXPECT_EQ(std::count(stdout_layers.out.begin(), stdout_layers.out.end(), '\n'), 3);

  const CliRun bad_layer = run({"tensor", "--k", "2", "--s", "9", in});
  EXPECT_EQ(bad_layer.code, cli::kExitDomain);
  EXPECT_EQ(nlohmann::json::parse(bad_layer.out)["error"], "precondition");

  const std::string reversed = write("rev.json", testing::ors6_reversed());
  EXPECT_EQ(run({"tensor", "--k", "2", reversed}).code, cli::kExitDomain);
  EXPECT_EQ(run({"tensor", "--k", "2", "--s", "3", "--all-layers", in}).code, cli::kExitUsage);
}

TEST_F(CliTest, LoadErrorsAreDomainFailures) {
  std::ofstream(path("dup.json")) << R"({"n":3,"matchings":[[[1,2]],[[1,2]]]})";
  const CliRun dup = run({"verify", "--kind", "ors", path("dup.json")});
  EXPECT_EQ(dup.code, cli::kExitDomain);
  EXPECT_EQ(nlohmann::json::parse(dup.out)["error"], "duplicate edge");

  const CliRun missing = run({"stats", path("nope.json")});
  EXPECT_EQ(missing.code, cli::kExitDomain);
  EXPECT_EQ(nlohmann::json::parse(missing.out)["error"], "io");
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"verify", "--kind", "xyz", "a.json"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"tensor", "a.json"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"--help"}).code, cli::kExitOk);
}

TEST_F(CliTest, ShrinkCommands) {
  const std::string in = write("ors6.json", testing::ors6());
  const CliRun del = run({"delete", "--vertices", "5,6", in});
  ASSERT_EQ(del.code, cli::kExitOk);
  EXPECT_EQ(del.out, "{\"n\":4,\"ragged\":true,\"matchings\":[[[1,3]],[[1,2],[3,4]]]}\n");

  std::ofstream(path("ragged.json")) << del.out;
  const CliRun trim = run({"trim", path("ragged.json")});
  ASSERT_EQ(trim.code, cli::kExitOk);
  EXPECT_EQ(trim.out, "{\"n\":4,\"matchings\":[[[1,3]],[[1,2]]]}\n");
  const CliRun trim2 = run({"trim", "--rmin", "2", path("ragged.json")});
  EXPECT_EQ(trim2.out, "{\"n\":4,\"matchings\":[[[1,2],[3,4]]]}\n");

  const CliRun fit = run({"fit", "--n", "4", in, "-o", path("fit.json")});
  ASSERT_EQ(fit.code, cli::kExitOk);
  EXPECT_EQ(slurp(path("fit.json")), trim.out);
  EXPECT_EQ(run({"fit", "--n", "4", "--vertices", "5,6", in}).out, trim.out);
  EXPECT_EQ(run({"fit", "--n", "9", in}).code, cli::kExitDomain);
}

TEST_F(CliTest, GenAndStats) {
  const CliRun complete = run({"gen", "complete", "--n", "3"});
  ASSERT_EQ(complete.code, cli::kExitOk);
  EXPECT_EQ(complete.out, "{\"n\":3,\"matchings\":[[[1,2]],[[1,3]],[[2,3]]]}\n");

  const CliRun random = run({"gen", "random", "--n", "8", "--r", "2", "--t", "2", "--seed", "1"});
  ASSERT_EQ(random.code, cli::kExitOk);
  EXPECT_EQ(load_certificate(random.out), random_ordered_decomposition(8, 2, 2, 1));

  const CliRun greedy = run({"gen", "behrend", "--m", "9", "--set", "greedy"});
  EXPECT_EQ(load_certificate(greedy.out).matching_size(), 4u);

  std::ofstream(path("path.json")) << R"({"n":3,"matchings":[[[1,2]],[[2,3]]]})";
  const CliRun st = run({"stats", path("path.json")});
  ASSERT_EQ(st.code, cli::kExitOk);
  EXPECT_EQ(st.out, "{\"n\":3,\"t\":2,\"r\":1,\"fraction\":\"1/3\",\"edges\":2}\n");
}

TEST_F(CliTest, Oracle) {
  const CliRun res = run({"oracle", "--n", "4", "--r", "1", "--kind", "rs", "-o", path("w.json")});
  ASSERT_EQ(res.code, cli::kExitOk);
  EXPECT_EQ(res.out, "{\"t_max\":6}\n");
  EXPECT_EQ(load_certificate(slurp(path("w.json"))).matching_count(), 6u);
  EXPECT_EQ(run({"oracle", "--n", "9", "--r", "1", "--kind", "rs"}).code, cli::kExitDomain);
}

// The installed binary behaves like in-process dispatch.
TEST_F(CliTest, BinaryExitCodes) {
  const std::string in = write("ors6.json", testing::ors6());
  const std::string bin = ORSRS_CLI_PATH;
  auto status = [](const std::string& cmd) {
    const int raw = std::system((cmd + " > /dev/null 2>&1").c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  EXPECT_EQ(status(bin + " verify --kind ors " + in), 0);
  EXPECT_EQ(status(bin + " verify --kind rs " + in), 1);
  EXPECT_EQ(status(bin + " bogus"), 64);
}

}  // namespace
}  // namespace orsrs
