#include "effalg/io.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace effalg {

namespace {

struct Token {
  std::string text;
  int line;
  int column;
};

std::vector<std::vector<Token>> tokenize(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  int line = 1;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view row = text.substr(pos, end - pos);
    if (!row.empty() && row.back() == '\r') row.remove_suffix(1);
    std::vector<Token> toks;
    std::size_t i = 0;
    while (i < row.size()) {
      if (row[i] == ' ' || row[i] == '\t') {
        ++i;
        continue;
      }
      if (row[i] == '#') break;
      const std::size_t start = i;
      while (i < row.size() && row[i] != ' ' && row[i] != '\t') ++i;
      toks.push_back({std::string(row.substr(start, i - start)), line, static_cast<int>(start) + 1});
    }
    if (!toks.empty()) lines.push_back(std::move(toks));
    if (end == text.size()) break;
    pos = end + 1;
    ++line;
  }
  return lines;
}

}  // namespace

AlgebraFile parse_algebra(std::string_view text) {
  AlgebraFile file;
  std::set<std::string> declared;
  std::vector<std::array<Token, 3>> pending;
  bool saw_elements = false;

  for (const auto& toks : tokenize(text)) {
    const Token& head = toks.front();
    if (head.text == "elements") {
      if (saw_elements) throw SyntaxError(ErrorKind::Syntax, head.line, head.column, "second 'elements' line");
      if (toks.size() < 2) throw SyntaxError(ErrorKind::Syntax, head.line, head.column, "empty element list");
      saw_elements = true;
      for (std::size_t i = 1; i < toks.size(); ++i) {
        if (!declared.insert(toks[i].text).second)
          throw SyntaxError(ErrorKind::Syntax, toks[i].line, toks[i].column, "duplicate element '" + toks[i].text + "'");
        file.elements.push_back(toks[i].text);
      }
    } else if (head.text == "sum") {
      if (toks.size() != 4) {
        const Token& at = toks.size() > 4 ? toks[4] : head;
        throw SyntaxError(ErrorKind::Syntax, at.line, at.column, "'sum' takes exactly three names");
      }
      pending.push_back({toks[1], toks[2], toks[3]});
    } else {
      throw SyntaxError(ErrorKind::Syntax, head.line, head.column, "unknown directive '" + head.text + "'");
    }
  }
  if (!saw_elements) throw SyntaxError(ErrorKind::Syntax, 1, 1, "empty element list: no 'elements' line");

  for (const auto& triple : pending) {
    for (const Token& t : triple)
      if (!declared.contains(t.text) && t.text != "0" && t.text != "1")
        throw SyntaxError(ErrorKind::UnknownName, t.line, t.column, "unknown element '" + t.text + "'");
    file.sums.push_back({triple[0].text, triple[1].text, triple[2].text});
  }
  return canonical(file);
}

AlgebraFile canonical(const AlgebraFile& file) {
  AlgebraFile out;
  out.elements.push_back("0");
  for (const auto& name : file.elements)
    if (name != "0" && name != "1") out.elements.push_back(name);
  out.elements.push_back("1");

  std::map<std::string, int> rank;
  for (std::size_t i = 0; i < out.elements.size(); ++i) rank[out.elements[i]] = static_cast<int>(i);
  auto r = [&](const std::string& s) {
    auto it = rank.find(s);
    return it == rank.end() ? static_cast<int>(rank.size()) : it->second;
  };

  std::set<std::tuple<int, int, int>> seen;
  std::vector<std::tuple<int, int, int, SumTriple>> rows;
  for (SumTriple t : file.sums) {
    if (r(t.y) < r(t.x)) std::swap(t.x, t.y);
    if (t.x == "0" && t.z == t.y) continue;
    if (!seen.insert({r(t.x), r(t.y), r(t.z)}).second) continue;
    rows.emplace_back(r(t.x), r(t.y), r(t.z), t);
  }
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return std::tie(std::get<0>(a), std::get<1>(a), std::get<2>(a)) < std::tie(std::get<0>(b), std::get<1>(b), std::get<2>(b));
  });
  for (auto& row : rows) out.sums.push_back(std::get<3>(row));
  return out;
}

std::string serialize(const AlgebraFile& file) {
  const AlgebraFile c = canonical(file);
  std::ostringstream os;
  os << "elements";
  for (const auto& name : c.elements) os << ' ' << name;
  os << '\n';
  for (const auto& t : c.sums) os << "sum " << t.x << ' ' << t.y << ' ' << t.z << '\n';
  return os.str();
}

SumTable to_table(const AlgebraFile& file) {
  const AlgebraFile c = canonical(file);
  SumTable t(c.elements, 0, static_cast<ElementId>(c.elements.size()) - 1);
  for (const auto& s : c.sums) {
    const auto x = t.find(s.x), y = t.find(s.y), z = t.find(s.z);
    if (!x || !y || !z) throw Error(ErrorKind::UnknownName, "unknown element in 'sum " + s.x + " " + s.y + " " + s.z + "'");
    t.add(*x, *y, *z);
  }
  return t;
}

EffectAlgebra load_algebra(std::string_view text) { return EffectAlgebra::validate(to_table(parse_algebra(text))); }

AlgebraFile to_file(const EffectAlgebra& e) {
  AlgebraFile f;
  f.elements.push_back(e.name(e.zero()));
  for (ElementId x : e.elements())
    if (x != e.zero() && x != e.unit()) f.elements.push_back(e.name(x));
  f.elements.push_back(e.name(e.unit()));
  for (ElementId x : e.elements())
    for (ElementId y : e.elements())
      if (x <= y && x != e.zero() && y != e.zero())
        if (auto z = e.sum(x, y)) f.sums.push_back({e.name(x), e.name(y), e.name(*z)});
  return canonical(f);
}

}  // namespace effalg
