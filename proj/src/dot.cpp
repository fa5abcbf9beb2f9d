#include "effalg/dot.hpp"

#include <sstream>

namespace effalg {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::vector<std::pair<ElementId, ElementId>> covering_pairs(const EffectAlgebra& e) {
  std::vector<std::pair<ElementId, ElementId>> out;
  for (ElementId x : e.elements())
    for (ElementId y : e.up(x)) {
      if (y == x) continue;
      if ((e.up(x) & e.down(y)) == ElementSet::of({x, y})) out.emplace_back(x, y);
    }
  return out;
}

std::string export_dot(const EffectAlgebra& e, const std::vector<ElementProfile>& profiles) {
  std::ostringstream os;
  os << "digraph effect_algebra {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=ellipse, style=solid, fontname=\"Helvetica\"];\n";
  os << "  edge [arrowhead=none];\n";
  for (const auto& p : profiles) {
    std::string classes;
    auto tag = [&](bool on, const char* name) {
      if (!on) return;
      if (!classes.empty()) classes += ' ';
      classes += name;
    };
    tag(p.sharp, "sharp");
    tag(p.principal, "principal");
    tag(p.central, "central");
    tag(p.meager, "meager");
    tag(p.hypermeager, "hypermeager");
    tag(p.ultrameager, "ultrameager");
    os << "  " << quoted(e.name(p.element)) << " [shape=" << (p.ultrameager ? "box" : "ellipse");
    if (p.sharp) os << ", style=filled, fillcolor=black, fontcolor=white";
    os << ", class=" << quoted(classes) << "];\n";
  }
  for (const auto& [x, y] : covering_pairs(e)) os << "  " << quoted(e.name(x)) << " -> " << quoted(e.name(y)) << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace effalg
