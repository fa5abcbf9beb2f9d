// Runs the eatool binary end to end. Set EFFALG_UPDATE_GOLDEN=1 to rewrite
// the golden files instead of comparing against them.
#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "corpus.hpp"
#include "effalg/io.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code = -1;
  std::string out, err;
};

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream f(p, std::ios::binary);
  f << text;
}

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("eatool_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

// args are passed to the shell as-is.
Outcome eatool(const std::string& args, const std::string& stdin_text = {}) {
  const fs::path in = scratch() / "stdin", out = scratch() / "stdout", err = scratch() / "stderr";
  spit(in, stdin_text);
  const std::string cmd = std::string("'") + EATOOL_PATH + "' " + args + " <'" + in.string() + "' >'" + out.string() +
                          "' 2>'" + err.string() + "'";
  const int status = std::system(cmd.c_str());
  Outcome r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

fs::path write_temp(const std::string& name, const std::string& text) {
  const fs::path p = scratch() / name;
  spit(p, text);
  return p;
}

}  // namespace

TEST(Cli, ValidateExitCodes) {
  const auto ok = write_temp("ok.ea", "elements a\nsum a a 1\n");
  EXPECT_EQ(eatool("validate '" + ok.string() + "'").code, 0);

  const auto broken = write_temp("broken.ea", "elements a\nsum 1 a 1\n");
  const Outcome r = eatool("validate '" + broken.string() + "'");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("(Eiv)"), std::string::npos);
  EXPECT_TRUE(r.err.empty());

  const Outcome m = eatool("--machine validate '" + broken.string() + "'");
  EXPECT_EQ(m.code, 1);
  EXPECT_NE(m.out.find("axiom=Eiv"), std::string::npos) << m.out;

  const auto dup = write_temp("dup.ea", "elements a\nsum a a 1\nsum a a a\n");
  EXPECT_EQ(eatool("validate '" + dup.string() + "'").code, 1);

  const auto bad = write_temp("bad.ea", "elements a\nsum a q 1\n");
  const Outcome s = eatool("validate '" + bad.string() + "'");
  EXPECT_EQ(s.code, 2);
  EXPECT_NE(s.err.find("2:7"), std::string::npos) << s.err;
  EXPECT_TRUE(s.out.empty());
}

TEST(Cli, InputAndUsageErrors) {
  EXPECT_EQ(eatool("validate /definitely/not/here.ea").code, 2);
  EXPECT_EQ(eatool("frobnicate @ex1").code, 2);
  EXPECT_EQ(eatool("").code, 2);
  EXPECT_EQ(eatool("validate").code, 2);
  EXPECT_EQ(eatool("--budget 0 props @ex1").code, 2);
  EXPECT_EQ(eatool("--budget lots props @ex1").code, 2);
  EXPECT_EQ(eatool("example ex9").code, 2);
  EXPECT_EQ(eatool("classify @nope").code, 2);
  // an invalid table is an input error for every command but validate
  const auto broken = write_temp("broken2.ea", "elements a\nsum 1 a 1\n");
  EXPECT_EQ(eatool("props '" + broken.string() + "'").code, 2);
}

TEST(Cli, StdinInput) {
  const Outcome r = eatool("--machine validate -", "elements a b\nsum a a b\nsum a b 1\n");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "record=validate valid=true elements=4 sums=2\n");
}

TEST(Cli, PropsEx3) {
  const Outcome r = eatool("props @ex3");
  EXPECT_EQ(r.code, 0);
  for (const char* line : {"homogeneous         true", "orthoalgebra        true", "lattice             false",
                           "W+                  true", "maximality          true"})
    EXPECT_NE(r.out.find(line), std::string::npos) << line;
  const Outcome m = eatool("--machine props @ex3");
  for (const char* rec : {"name=homogeneous value=true", "name=orthoalgebra value=true", "name=lattice value=false",
                          "name=wplus value=true", "name=maximality value=true"})
    EXPECT_NE(m.out.find(rec), std::string::npos) << rec;
}

TEST(Cli, BlocksEx3) {
  const Outcome r = eatool("blocks @ex3");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("3 blocks\n", 0), 0u);
  int lattices = 0;
  for (auto p = r.out.find("lattice: yes"); p != std::string::npos; p = r.out.find("lattice: yes", p + 1)) ++lattices;
  EXPECT_EQ(lattices, 3);
  EXPECT_NE(r.out.find("cover: complete"), std::string::npos);
  const Outcome ex1 = eatool("blocks @ex1");
  EXPECT_EQ(ex1.code, 2);
  EXPECT_TRUE(ex1.out.empty());
  EXPECT_FALSE(ex1.err.empty());
}

TEST(Cli, BudgetExceeded) {
  const Outcome r = eatool("--budget 5 blocks @boolean:4");
  EXPECT_EQ(r.code, 3);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, ViolationExitCodes) {
  // ex1 fails sharp domination but that is a classification, not a failed check
  EXPECT_EQ(eatool("classify @ex1").code, 0);
  EXPECT_EQ(eatool("theorems @ex1").code, 0);
  EXPECT_EQ(eatool("scan-joins @ex1").code, 2);
}

TEST(Cli, ExampleAndMvgenRoundTrip) {
  for (const char* n : {"ex1", "ex2", "ex3"}) {
    const Outcome ex = eatool(std::string("example ") + n);
    ASSERT_EQ(ex.code, 0);
    const Outcome gen = eatool(std::string("mvgen @") + n);
    ASSERT_EQ(gen.code, 0) << gen.err;
    const auto a = effalg::parse_algebra(ex.out), b = effalg::parse_algebra(gen.out);
    EXPECT_EQ(a.elements.size(), b.elements.size()) << n;
    // mvgen of the labelled spec names every element; validation must pass
    const auto p = write_temp(std::string(n) + ".ea", gen.out);
    EXPECT_EQ(eatool("validate '" + p.string() + "'").code, 0);
  }
}

TEST(Cli, DeterministicOnCorpusSample) {
  int n = 0;
  for (const auto& entry : corpus::all()) {
    if (n++ % 10) continue;
    const auto p = write_temp(entry.name + ".ea", effalg::serialize(entry.file));
    for (const char* cmd : {"classify", "props", "theorems", "dot"}) {
      const std::string args = std::string("--machine ") + cmd + " '" + p.string() + "'";
      const Outcome a = eatool(args), b = eatool(args);
      EXPECT_EQ(a.out, b.out) << entry.name << " " << cmd;
      EXPECT_EQ(a.code, b.code);
      EXPECT_LT(a.code, 2) << entry.name << " " << cmd << ": " << a.err;
    }
  }
}

TEST(Cli, Golden) {
  const bool update = std::getenv("EFFALG_UPDATE_GOLDEN") != nullptr;
  const fs::path dir = GOLDEN_DIR;
  if (update) fs::create_directories(dir);
  int compared = 0;
  for (const char* ex : {"ex1", "ex2", "ex3"}) {
    for (const char* cmd : {"validate", "classify", "props", "blocks", "theorems", "scan-joins", "dot", "example", "mvgen"}) {
      for (bool machine : {false, true}) {
        const std::string input = std::string(cmd) == "example" ? ex : std::string("@") + ex;
        const Outcome r = eatool(std::string(machine ? "--machine " : "") + cmd + " " + input);
        const std::string got = r.out + r.err + "exit " + std::to_string(r.code) + "\n";
        const fs::path file = dir / (std::string(ex) + "." + cmd + (machine ? ".machine" : "") + ".txt");
        if (update) {
          spit(file, got);
          continue;
        }
        ASSERT_TRUE(fs::exists(file)) << file;
        EXPECT_EQ(got, slurp(file)) << file;
        ++compared;
      }
    }
  }
  if (!update) EXPECT_EQ(compared, 54);
}
