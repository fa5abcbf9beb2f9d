// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.
// Every comparison is exact; the pinned sizes and counts are below.
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "effalg/builtin.hpp"
#include "effalg/classify.hpp"
#include "effalg/compat.hpp"
#include "effalg/structure.hpp"
#include "oracle.hpp"

using namespace effalg;
namespace fs = std::filesystem;

namespace {

constexpr int kOracleMaxSize = 12;        // blocks vs brute force up to this size
constexpr int kShiftingSamples = 1000;    // random (u, v, a1, b1) inputs
constexpr unsigned kShiftingSeed = 20240612;
constexpr int kMinRandomTables = 100;
constexpr int kRandomTableMaxSize = 10;
constexpr int kMinMvGen = 10;

struct Criterion {
  bool ok = true;
  std::vector<std::string> failures;
  std::string summary;

  void expect(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (failures.size() < 5) failures.push_back(what);
  }
};

EffectAlgebra ex(const char* name) { return EffectAlgebra::validate(to_table(builtin(name))); }

ElementSet names(const EffectAlgebra& e, std::initializer_list<const char*> ns) {
  ElementSet s;
  for (const char* n : ns) s.insert(e.id(n));
  return s;
}

std::vector<std::uint64_t> sorted(std::vector<std::uint64_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// ---------------------------------------------------------------------------

Criterion example1() {
  Criterion c;
  const auto e = ex("ex1");
  c.expect(sharp_set(e) == names(e, {"0", "1", "a", "c", "a+b", "b+c"}), "Sh");
  c.expect(mea_set(e) == names(e, {"0", "b", "2b"}), "Mea");
  c.expect(hmea_set(e) == names(e, {"0", "b", "2b"}), "HMea");
  c.expect(umea_set(e) == names(e, {"0", "2b"}), "UMea");
  c.expect(!is_sub_effect_algebra(e, sharp_set(e)), "Sh is a sub-effect algebra");
  const auto w = sub_effect_algebra_violation(e, sharp_set(e));
  c.expect(w && w->x == e.id("a") && w->y == e.id("c") && e.sum(w->x, w->y) == std::optional<ElementId>(w->z),
           "witness is not (a, c, a+c)");
  c.expect(!is_homogeneous(e), "homogeneous");
  c.expect(!sharply_dominating(e).has_value(), "sharply dominating");
  c.summary = "ex1 sets, witness (a, c, a+c), not homogeneous, not sharply dominating";
  return c;
}

Criterion example2() {
  Criterion c;
  const auto e = ex("ex2");
  const auto m = mea_set(e), h = hmea_set(e), u = umea_set(e);
  c.expect(m == names(e, {"0", "b", "2b", "3b", "4b"}), "Mea");
  c.expect(h == names(e, {"0", "b", "2b", "3b"}), "HMea");
  c.expect(u == names(e, {"0", "2b", "3b"}), "UMea");
  c.expect(u.subset_of(h) && u != h && h.subset_of(m) && h != m, "not strictly nested");
  c.expect(e.ord(e.id("b")) == 6, "ord(b)");
  c.summary = "ex2 Mea > HMea > UMea strictly, ord(b) = 6";
  return c;
}

Criterion example3() {
  Criterion c;
  const auto e = ex("ex3");
  c.expect(sharp_set(e) == e.elements(), "Sh != E");
  const auto bs = blocks(e);
  std::vector<std::uint64_t> got;
  for (const auto& b : bs) {
    got.push_back(b.members.bits());
    c.expect(b.members.size() == 8, "block size");
    c.expect(block_is_lattice(e, b), "block not a lattice");
  }
  const std::vector<std::uint64_t> want = sorted({
      names(e, {"0", "a", "b", "f", "a'", "b'", "f'", "1"}).bits(),
      names(e, {"0", "a", "c", "e", "a'", "c'", "e'", "1"}).bits(),
      names(e, {"0", "b", "d", "e", "b'", "d'", "e'", "1"}).bits(),
  });
  c.expect(sorted(got) == want, "blocks differ");

  const std::set<std::pair<std::string, std::string>> incompatible = {
      {"a", "d"}, {"b", "c"}, {"c", "d"}, {"c", "f"}, {"d", "f"}, {"e", "f"}};
  const char* atoms[] = {"a", "b", "c", "d", "e", "f"};
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      const bool listed = incompatible.count({atoms[i], atoms[j]}) > 0;
      c.expect(comp(e, e.id(atoms[i]), e.id(atoms[j])).has_value() != listed,
               std::string("comp(") + atoms[i] + ", " + atoms[j] + ")");
    }
  const auto ab = e.sum(e.id("a"), e.id("b")), ac = e.sum(e.id("a"), e.id("c"));
  c.expect(ab && ac && minimal_upper_bounds(e, e.id("a"), e.id("b")) == ElementSet::of({*ab, *ac}),
           "minimal upper bounds of a, b");
  c.expect(mv_cover_check(e).covered, "MV cover");
  c.summary = "ex3 all sharp, 3 lattice blocks of 8, 6 incompatible atom pairs, mub(a, b) = {a+b, a+c}, covered";
  return c;
}

Criterion theorem_suite_on_corpus() {
  Criterion c;
  int chains = 0, booleans = 0, randoms = 0, mvgens = 0, checks = 0;
  std::set<std::string> examples;
  for (const auto& entry : corpus::all()) {
    const auto e = corpus::load(entry);
    switch (entry.kind) {
      case corpus::Entry::Example: examples.insert(entry.name); break;
      case corpus::Entry::Chain: ++chains; break;
      case corpus::Entry::Boolean: ++booleans; break;
      case corpus::Entry::Random:
        ++randoms;
        c.expect(e.size() <= kRandomTableMaxSize, entry.name + " too large");
        break;
      case corpus::Entry::MvGen: ++mvgens; break;
    }
    Budget budget;
    const auto r = theorem_suite(e, budget, true);
    for (const auto& t : r.checks) {
      c.expect(t.outcome != CheckOutcome::Violated, entry.name + " check (" + t.id + ")");
      checks += t.outcome == CheckOutcome::Holds;
    }
    if (is_homogeneous(e) && has_maximality_property(e)) {
      for (const auto& b : blocks(e)) c.expect(block_is_lattice(e, b), entry.name + " non-lattice block");
      for (ElementId u : hmea_set(e))
        for (ElementId v : hmea_set(e)) c.expect(e.meet(u, v).has_value(), entry.name + " hypermeager meet");
      c.expect(umea_set(e) == hmea_set(e), entry.name + " UMea != HMea");
    }
  }
  c.expect(examples == std::set<std::string>{"ex1", "ex2", "ex3"}, "examples missing");
  c.expect(chains == 7, "chains n = 2..8");
  c.expect(booleans == 4, "Booleans 2^1..2^4");
  c.expect(randoms >= kMinRandomTables, "random tables");
  c.expect(mvgens >= kMinMvGen, "mvgen algebras");
  c.summary = std::to_string(corpus::all().size()) + " algebras (" + std::to_string(randoms) + " random, " +
              std::to_string(mvgens) + " mvgen), " + std::to_string(checks) + " checks hold, none violated";
  return c;
}

Criterion oracle_equivalence() {
  Criterion c;
  int compared = 0;
  for (const auto& entry : corpus::all()) {
    const auto e = corpus::load(entry);
    const oracle::Naive o(entry.file);
    c.expect(hmea_set(e).bits() == o.self_orth(), entry.name + " HMea vs x+x defined (oracle)");
    c.expect(hmea_set(e) == self_orthogonal_set(e), entry.name + " HMea vs x+x defined");
    c.expect(hmea_set(e).bits() == o.hmea(), entry.name + " HMea vs definition");
    if (!is_homogeneous(e) || e.size() > kOracleMaxSize) continue;
    std::vector<std::uint64_t> got;
    for (const auto& b : blocks(e)) got.push_back(b.members.bits());
    got = sorted(got);
    c.expect(got == sorted(o.maximal_ic_sets()), entry.name + " blocks vs maximal internally compatible sets");
    c.expect(got == sorted(o.maximal_rdp_subalgebras()), entry.name + " blocks vs maximal RDP sub-algebras");
    ++compared;
  }
  c.expect(compared > 0, "nothing compared");
  c.summary = "blocks match both brute-force enumerations on " + std::to_string(compared) +
              " homogeneous algebras with |E| <= " + std::to_string(kOracleMaxSize) + "; HMea = {x : x+x defined} on all";
  return c;
}

Criterion identity_suite() {
  Criterion c;
  int algebras = 0, elements = 0;
  for (const auto& entry : corpus::all()) {
    const auto e = corpus::load(entry);
    const auto dom = sharply_dominating(e);
    if (!dom) continue;
    ++algebras;
    c.expect(check_hat_identities(e, dom).empty(), entry.name + " hat identities");
    for (ElementId x : e.elements()) {
      const auto d = decompose_sharp_meager(e, dom, x);
      c.expect(d.decompositions_found == 1, entry.name + " second decomposition of " + e.name(x));
      ++elements;
    }
  }
  c.expect(algebras > 0, "no sharply dominating algebra");
  c.summary = std::to_string(algebras) + " sharply dominating algebras, " + std::to_string(elements) +
              " unique sharp + meager decompositions";
  return c;
}

Criterion constructive() {
  Criterion c;
  int decompositions = 0;
  for (const auto& entry : corpus::all()) {
    const auto e = corpus::load(entry);
    if (!e.is_archimedean() || !has_condition_wplus(e)) continue;
    for (ElementId y : mea_set(e)) {
      try {
        const auto d = hypermeager_decomposition(e, y);
        c.expect(orthosum(e, d.parts) == y, entry.name + " orthosum of parts");
        ++decompositions;
      } catch (const Error& err) {
        c.expect(false, entry.name + " " + e.name(y) + ": " + err.what());
      }
    }
  }

  std::mt19937 rng(kShiftingSeed);
  const auto& all = corpus::all();
  int samples = 0;
  while (samples < kShiftingSamples) {
    const auto& entry = all[rng() % all.size()];
    const auto e = corpus::load(entry);
    const ElementId u = static_cast<ElementId>(rng() % static_cast<unsigned>(e.size()));
    const ElementId v = static_cast<ElementId>(rng() % static_cast<unsigned>(e.size()));
    const auto lower = maximal_lower_bounds(e, u, v).to_vector();
    const ElementId a1 = lower[rng() % lower.size()], b1 = lower[rng() % lower.size()];
    try {
      const auto m = shifting(e, u, v, a1, b1);
      const auto defect = minimax_defect(e, m);
      c.expect(!defect, entry.name + ": " + defect.value_or(""));
    } catch (const Error& err) {
      c.expect(false, entry.name + ": " + err.what());
    }
    ++samples;
  }
  c.summary = std::to_string(decompositions) + " hypermeager decompositions, " + std::to_string(samples) +
              " shifting samples satisfy all invariants";
  return c;
}

// -- CLI determinism --------------------------------------------------------

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

struct Invocation {
  int code;
  std::string bytes;
};

Invocation run_eatool(const fs::path& dir, const std::string& args) {
  const fs::path out = dir / "out", err = dir / "err";
  const std::string cmd = std::string("'") + EATOOL_PATH + "' " + args + " </dev/null >'" + out.string() + "' 2>'" +
                          err.string() + "'";
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out) + "\x1f" + slurp(err)};
}

Criterion determinism() {
  Criterion c;
  const fs::path dir = fs::temp_directory_path() / ("eatool_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  std::vector<std::string> jobs;
  for (const auto& entry : corpus::all()) {
    const fs::path file = dir / (entry.name + ".ea");
    std::ofstream(file, std::ios::binary) << serialize(entry.file);
    for (const char* cmd : {"validate", "classify", "props", "blocks", "theorems", "scan-joins", "dot"})
      for (const char* mode : {"", "--machine "}) jobs.push_back(std::string(mode) + cmd + " '" + file.string() + "'");
  }
  for (const char* n : {"ex1", "ex2", "ex3", "chain:8", "boolean:4"}) jobs.push_back(std::string("example ") + n);
  for (const char* n : {"ex1", "ex2", "ex3"}) jobs.push_back(std::string("mvgen @") + n);

  for (const auto& args : jobs) {
    const auto a = run_eatool(dir, args), b = run_eatool(dir, args);
    c.expect(a.code == b.code && a.bytes == b.bytes, "output differs: " + args);
    c.expect(a.code >= 0 && a.code != 3, "budget exceeded or abnormal exit: " + args);
  }
  fs::remove_all(dir);
  c.summary = std::to_string(jobs.size()) + " invocations byte-identical across two runs";
  return c;
}

Criterion finiteness() {
  Criterion c;
  for (const auto& entry : corpus::all()) {
    const auto e = corpus::load(entry);
    try {
      Budget budget;
      c.expect(e.is_archimedean(), entry.name + " Archimedean");
      c.expect(check_orthocomplete(e, budget).orthocomplete, entry.name + " orthocomplete");
      c.expect(has_maximality_property(e), entry.name + " maximality");
      c.expect(has_condition_wplus(e), entry.name + " (W+)");
    } catch (const Error& err) {
      c.expect(false, entry.name + ": " + err.what());
    }
  }
  c.summary = "Archimedean, orthocomplete, maximality and (W+) on all " + std::to_string(corpus::all().size()) + " algebras";
  return c;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Criterion()>> criteria[] = {
      {"example 1 reproduction", example1},
      {"example 2 reproduction", example2},
      {"example 3 reproduction", example3},
      {"theorem suite on corpus", theorem_suite_on_corpus},
      {"oracle equivalence", oracle_equivalence},
      {"identity suite", identity_suite},
      {"constructive procedures", constructive},
      {"CLI determinism", determinism},
      {"finiteness sanity", finiteness},
  };
  int failed = 0, index = 0;
  for (const auto& [title, run] : criteria) {
    ++index;
    Criterion c;
    try {
      c = run();
    } catch (const std::exception& err) {
      c.ok = false;
      c.failures.push_back(std::string("exception: ") + err.what());
    }
    std::printf("criterion %d %s: %s  %s\n", index, c.ok ? "PASS" : "FAIL", title, c.summary.c_str());
    for (const auto& f : c.failures) std::printf("    %s\n", f.c_str());
    failed += !c.ok;
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
