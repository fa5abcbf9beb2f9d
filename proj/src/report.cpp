#include "effalg/report.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "effalg/builtin.hpp"
#include "effalg/classify.hpp"
#include "effalg/compat.hpp"
#include "effalg/dot.hpp"
#include "effalg/io.hpp"
#include "effalg/mvgen.hpp"
#include "effalg/structure.hpp"

namespace effalg {

namespace {

// Machine values are bare unless they contain whitespace, quotes or '='.
std::string val(const std::string& s) {
  if (!s.empty() && s.find_first_of(" \t\"\\=") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

const char* tf(bool b) { return b ? "true" : "false"; }
const char* yn(bool b) { return b ? "yes" : "no"; }

std::string set_value(const EffectAlgebra& e, ElementSet s) {
  std::string out = "{";
  bool first = true;
  for (ElementId x : s) {
    if (!first) out += ',';
    out += e.name(x);
    first = false;
  }
  return out + "}";
}

std::string tuple_names(const EffectAlgebra& e, const std::vector<ElementId>& ids, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += sep;
    out += e.name(ids[i]);
  }
  return out;
}

class Record {
 public:
  explicit Record(std::string kind) { os_ << "record=" << kind; }
  Record& operator()(const std::string& key, const std::string& value) {
    os_ << ' ' << key << '=' << val(value);
    return *this;
  }
  Record& operator()(const std::string& key, long long value) { return (*this)(key, std::to_string(value)); }
  Record& operator()(const std::string& key, bool value) { return (*this)(key, std::string(tf(value))); }
  Record& operator()(const std::string& key, const char* value) { return (*this)(key, std::string(value)); }
  std::string str() const { return os_.str() + "\n"; }

 private:
  std::ostringstream os_;
};

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

struct Context {
  explicit Context(const ReportOptions& o) : opt(o), budget(o.budget) {}
  const ReportOptions& opt;
  Budget budget;
  std::ostringstream out;
  int exit_code = kExitOk;

  void violated() { exit_code = std::max(exit_code, static_cast<int>(kExitViolated)); }
};

std::string error_text(const ReportOptions& opt, ErrorKind kind, const std::string& message) {
  if (opt.machine) return Record("error")("kind", to_string(kind))("message", message).str();
  return "error: " + message + "\n";
}

// ---- validate -------------------------------------------------------------

void cmd_validate(Context& c, std::string_view input) {
  const SumTable table = to_table(parse_algebra(input));
  const auto failures = find_axiom_failures(table, !c.opt.all_witnesses);
  if (failures.empty()) {
    const AlgebraFile f = to_file(EffectAlgebra::validate(table));
    if (c.opt.machine)
      c.out << Record("validate")("valid", true)("elements", static_cast<long long>(f.elements.size()))(
                   "sums", static_cast<long long>(f.sums.size())).str();
    else
      c.out << "valid effect algebra: " << f.elements.size() << " elements, " << f.sums.size() << " sums\n";
    return;
  }
  c.violated();
  auto names = [&](const std::vector<ElementId>& w) {
    std::vector<std::string> n;
    for (ElementId x : w) n.push_back(table.names()[static_cast<std::size_t>(x)]);
    return n;
  };
  if (c.opt.machine) {
    c.out << Record("validate")("valid", false)("violations", static_cast<long long>(failures.size())).str();
    for (const auto& f : failures) {
      std::string w;
      for (const auto& n : names(f.witness)) w += (w.empty() ? "" : ",") + n;
      c.out << Record("violation")("axiom", to_string(f.axiom))("witness", w)("detail", f.detail).str();
    }
    return;
  }
  c.out << "invalid: AxiomViolation\n";
  for (const auto& f : failures) {
    std::string w;
    for (const auto& n : names(f.witness)) w += (w.empty() ? "" : ", ") + n;
    c.out << "  (" << to_string(f.axiom) << ") witness (" << w << "): " << f.detail << "\n";
  }
}

// ---- classify -------------------------------------------------------------

void cmd_classify(Context& c, const EffectAlgebra& e) {
  const DominationResult dom = check_sharply_dominating(e);
  std::vector<ElementProfile> ps;
  for (ElementId x : e.elements()) ps.push_back(profile(e, x, dom.data));

  const ElementSet sh = sharp_set(e), mea = mea_set(e), hmea = hmea_set(e), umea = umea_set(e);
  const ElementSet self = self_orthogonal_set(e);
  const CenterReport cen = check_center(e);
  const auto sub = sub_effect_algebra_violation(e, sh);
  const bool hmea_consistent = hmea == self;
  if (!hmea_consistent || !cen.sub_effect_algebra || !cen.boolean_algebra) c.violated();

  auto opt_name = [&](const std::optional<ElementId>& x) { return x ? e.name(*x) : std::string("-"); };
  auto ord_text = [](const std::optional<int>& o) { return o ? std::to_string(*o) : std::string("-"); };

  if (c.opt.machine) {
    c.out << Record("algebra")("elements", static_cast<long long>(e.size())).str();
    for (const auto& p : ps)
      c.out << Record("element")("name", e.name(p.element))("ord", ord_text(p.ord))("sharp", p.sharp)(
                   "principal", p.principal)("central", p.central)("meager", p.meager)("hypermeager", p.hypermeager)(
                   "ultrameager", p.ultrameager)("tilde", opt_name(p.tilde))("hat", opt_name(p.hat)).str();
    c.out << Record("set")("name", "sharp")("members", set_value(e, sh)).str();
    c.out << Record("set")("name", "meager")("members", set_value(e, mea)).str();
    c.out << Record("set")("name", "hypermeager")("members", set_value(e, hmea)).str();
    c.out << Record("set")("name", "ultrameager")("members", set_value(e, umea)).str();
    c.out << Record("set")("name", "center")("members", set_value(e, cen.members)).str();
    {
      Record r("sharp_subalgebra");
      r("holds", !sub.has_value());
      if (sub) r("witness", tuple_names(e, {sub->x, sub->y, sub->z}, ","));
      c.out << r.str();
    }
    c.out << Record("center")("sub_effect_algebra", cen.sub_effect_algebra)("boolean", cen.boolean_algebra).str();
    c.out << Record("hypermeager_check")("self_orthogonal_agrees", hmea_consistent).str();
    {
      Record r("sharply_dominating");
      r("holds", dom.data.has_value());
      if (dom.failure)
        r("element", e.name(dom.failure->element))("missing", dom.failure->missing_hat ? "hat" : "tilde")(
            "candidates", set_value(e, dom.failure->antichain));
      c.out << r.str();
    }
    return;
  }

  std::size_t w = 7;
  for (ElementId x : e.elements()) w = std::max(w, e.name(x).size());
  const std::vector<std::string> head{"ord", "sharp", "principal", "central", "meager", "hypermeager", "ultrameager"};
  c.out << pad("element", w + 2);
  for (const auto& h : head) c.out << pad(h, h.size() + 2);
  c.out << pad("tilde", w + 2) << "hat\n";
  for (const auto& p : ps) {
    const std::vector<std::string> cells{ord_text(p.ord), yn(p.sharp),      yn(p.principal), yn(p.central),
                                         yn(p.meager),    yn(p.hypermeager), yn(p.ultrameager)};
    c.out << pad(e.name(p.element), w + 2);
    for (std::size_t i = 0; i < head.size(); ++i) c.out << pad(cells[i], head[i].size() + 2);
    c.out << pad(opt_name(p.tilde), w + 2) << opt_name(p.hat) << "\n";
  }
  c.out << "\n";
  c.out << "Sh     = " << format_set(e, sh) << "\n";
  c.out << "Mea    = " << format_set(e, mea) << "\n";
  c.out << "HMea   = " << format_set(e, hmea) << "\n";
  c.out << "UMea   = " << format_set(e, umea) << "\n";
  c.out << "center = " << format_set(e, cen.members) << " (sub-effect algebra: " << yn(cen.sub_effect_algebra)
        << ", Boolean: " << yn(cen.boolean_algebra) << ")\n";
  c.out << "Sh is a sub-effect algebra: " << yn(!sub);
  if (sub) c.out << " (" << e.name(sub->x) << " + " << e.name(sub->y) << " = " << e.name(sub->z) << ")";
  c.out << "\n";
  if (!hmea_consistent)
    c.out << "VIOLATED: HMea differs from {x : x + x defined} = " << format_set(e, self) << "\n";
  c.out << "sharply dominating: " << yn(dom.data.has_value());
  if (dom.failure)
    c.out << " (" << e.name(dom.failure->element) << " has no " << (dom.failure->missing_hat ? "least sharp upper" : "greatest sharp lower")
          << " bound among " << format_set(e, dom.failure->antichain) << ")";
  c.out << "\n";
}

// ---- props ----------------------------------------------------------------

void cmd_props(Context& c, const EffectAlgebra& e) {
  const auto dom = sharply_dominating(e);
  const bool homogeneous = is_homogeneous(e);
  const auto oc = check_orthocomplete(e, c.budget);
  const bool maximality = has_maximality_property(e);
  const auto wplus = check_condition_wplus(e, c.budget, WPlusMode::Auto, c.opt.all_witnesses);
  const CenterReport cen = check_center(e);
  std::string sober = "n/a";
  if (homogeneous && dom) sober = tf(check_sober(e, dom, c.budget).sober);

  std::vector<std::pair<std::string, std::string>> props{
      {"elements", std::to_string(e.size())},
      {"orthoalgebra", tf(e.is_orthoalgebra())},
      {"lattice", tf(e.is_lattice())},
      {"atomic", tf(e.is_atomic())},
      {"archimedean", tf(e.is_archimedean())},
      {"orthocomplete", tf(oc.orthocomplete)},
      {"homogeneous", tf(homogeneous)},
      {"rdp", tf(has_rdp(e))},
      {"dmp", tf(has_dmp(e))},
      {"sharply_dominating", tf(dom.has_value())},
      {"sober", sober},
      {"maximality", tf(maximality)},
      {"wplus", tf(wplus.holds)},
      {"wplus_exhaustive", tf(wplus.exhaustive)},
      {"center_boolean", tf(cen.sub_effect_algebra && cen.boolean_algebra)},
  };
  if (!e.is_archimedean() || !oc.orthocomplete || !maximality || !wplus.holds || !cen.sub_effect_algebra ||
      !cen.boolean_algebra)
    c.violated();

  if (c.opt.machine) {
    for (const auto& [k, v] : props) c.out << Record("property")("name", k)("value", v).str();
  } else {
    for (const auto& [k, v] : props) c.out << pad(k == "wplus" ? "W+" : k == "wplus_exhaustive" ? "W+ exhaustive" : k, 20) << v << "\n";
  }
  if (oc.witness) {
    const std::string w = tuple_names(e, oc.witness->entries(), c.opt.machine ? "," : ", ");
    c.out << (c.opt.machine ? Record("witness")("property", "orthocomplete")("family", w).str()
                            : "orthocompleteness fails for the family (" + w + ")\n");
  }
  for (const auto& wt : wplus.witnesses) {
    if (c.opt.machine)
      c.out << Record("witness")("property", "wplus")("set", set_value(e, wt.a))("u", e.name(wt.u))("v", e.name(wt.v)).str();
    else
      c.out << "W+ fails for A = " << format_set(e, wt.a) << " with u = " << e.name(wt.u) << ", v = " << e.name(wt.v) << "\n";
  }
}

// ---- blocks ---------------------------------------------------------------

void cmd_blocks(Context& c, const EffectAlgebra& e) {
  if (!is_homogeneous(e)) {
    c.exit_code = kExitInput;
    c.out << error_text(c.opt, ErrorKind::NotHomogeneous, "not homogeneous; blocks are undefined");
    return;
  }
  const MvCoverReport r = mv_cover_check(e, c.budget);
  if (!r.covered) c.violated();
  if (c.opt.machine) {
    c.out << Record("blocks")("count", static_cast<long long>(r.blocks.size())).str();
    int i = 0;
    for (const auto& b : r.blocks)
      c.out << Record("block")("index", static_cast<long long>(++i))("size", static_cast<long long>(b.block.members.size()))(
                   "members", set_value(e, b.block.members))("lattice", b.lattice)("rdp", b.rdp)(
                   "sub_effect_algebra", b.sub_effect_algebra).str();
    c.out << Record("cover")("union_is_whole", r.union_is_whole)("status", r.covered ? "complete" : "incomplete").str();
    return;
  }
  c.out << r.blocks.size() << " blocks\n";
  int i = 0;
  for (const auto& b : r.blocks) {
    c.out << "block " << ++i << " (" << b.block.members.size() << " elements): " << format_set(e, b.block.members) << "\n";
    c.out << "  lattice: " << yn(b.lattice) << "  rdp: " << yn(b.rdp) << "  sub-effect algebra: " << yn(b.sub_effect_algebra)
          << "\n";
  }
  c.out << "union of blocks is E: " << yn(r.union_is_whole) << "\n";
  c.out << "cover: " << (r.covered ? "complete" : "incomplete") << "\n";
}

// ---- theorems -------------------------------------------------------------

void cmd_theorems(Context& c, const EffectAlgebra& e) {
  const TheoremReport r = theorem_suite(e, c.budget, c.opt.all_witnesses);
  if (r.any_violated()) c.violated();
  for (const auto& t : r.checks) {
    if (c.opt.machine) {
      Record rec("theorem");
      rec("id", t.id)("outcome", to_string(t.outcome));
      if (!t.note.empty()) rec("note", t.note);
      c.out << rec.str();
      for (const auto& w : t.witnesses) c.out << Record("witness")("theorem", t.id)("value", w).str();
    } else {
      c.out << "(" << t.id << ") " << pad(to_string(t.outcome), 9) << t.statement << "\n";
      if (!t.note.empty()) c.out << "    " << t.note << "\n";
      for (const auto& w : t.witnesses) c.out << "    witness: " << w << "\n";
    }
  }
}

// ---- scan-joins -----------------------------------------------------------

void cmd_scan_joins(Context& c, const EffectAlgebra& e) {
  std::vector<JoinDisagreement> found;
  try {
    found = join_agreement_scan(e, c.opt.all_witnesses, c.budget);
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::PreconditionViolated) throw;
    c.exit_code = kExitInput;
    c.out << error_text(c.opt, err.kind(), err.what());
    return;
  }
  if (!found.empty()) c.violated();
  auto jn = [&](const std::optional<ElementId>& j) { return j ? e.name(*j) : std::string("none"); };
  if (c.opt.machine) {
    c.out << Record("join_scan")("agree", found.empty())("disagreements", static_cast<long long>(found.size())).str();
    for (const auto& d : found)
      c.out << Record("disagreement")("x", e.name(d.x))("y", e.name(d.y))("block_a", set_value(e, d.a.members))(
                   "join_a", jn(d.join_a))("block_b", set_value(e, d.b.members))("join_b", jn(d.join_b)).str();
    return;
  }
  if (found.empty()) {
    c.out << "block-local joins agree across all blocks\n";
    return;
  }
  c.out << "block-local joins disagree:\n";
  for (const auto& d : found)
    c.out << "  " << e.name(d.x) << ", " << e.name(d.y) << ": " << jn(d.join_a) << " in " << format_set(e, d.a.members)
          << ", " << jn(d.join_b) << " in " << format_set(e, d.b.members) << "\n";
}

using AlgebraCommand = std::function<void(Context&, const EffectAlgebra&)>;

const std::map<std::string, AlgebraCommand, std::less<>>& algebra_commands() {
  static const std::map<std::string, AlgebraCommand, std::less<>> m{
      {"classify", cmd_classify},
      {"props", cmd_props},
      {"blocks", cmd_blocks},
      {"theorems", cmd_theorems},
      {"scan-joins", cmd_scan_joins},
      {"dot", [](Context& c, const EffectAlgebra& e) { c.out << export_dot(e, profiles(e)); }},
  };
  return m;
}

}  // namespace

std::vector<std::string> command_names() {
  return {"validate", "classify", "props", "blocks", "theorems", "scan-joins", "dot", "example", "mvgen"};
}

Report run_command(std::string_view command, std::string_view input, const ReportOptions& options) {
  Context c(options);
  try {
    if (command == "validate") {
      cmd_validate(c, input);
    } else if (command == "example") {
      c.out << builtin_text(input);
    } else if (command == "mvgen") {
      c.out << serialize(mvgen(parse_mvgen_spec(input)));
    } else if (auto it = algebra_commands().find(command); it != algebra_commands().end()) {
      const EffectAlgebra e = load_algebra(input);
      it->second(c, e);
    } else {
      return {kExitInput, error_text(options, ErrorKind::PreconditionViolated, "unknown command '" + std::string(command) + "'")};
    }
  } catch (const BudgetExceeded& err) {
    return {kExitBudget, error_text(options, err.kind(), err.what())};
  } catch (const Error& err) {
    const bool invalid_table = err.kind() == ErrorKind::AxiomViolation || err.kind() == ErrorKind::DuplicateContradiction ||
                               err.kind() == ErrorKind::ZeroEqualsOne;
    if (command == "validate" && invalid_table) {
      const std::string msg = std::string("invalid: ") + to_string(err.kind()) + ": " + err.what();
      return {kExitViolated, options.machine ? Record("validate")("valid", false)("kind", to_string(err.kind()))(
                                                   "detail", err.what()).str()
                                             : msg + "\n"};
    }
    return {kExitInput, error_text(options, err.kind(), err.what())};
  } catch (const std::exception& err) {
    return {kExitInput, error_text(options, ErrorKind::PreconditionViolated, err.what())};
  }
  return {c.exit_code, c.out.str()};
}

}  // namespace effalg
