#include "effalg/mvgen.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

namespace effalg {

namespace {

std::vector<std::string_view> split_ws(std::string_view row) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < row.size()) {
    if (row[i] == ' ' || row[i] == '\t' || row[i] == '\r') {
      ++i;
      continue;
    }
    if (row[i] == '#') break;
    const std::size_t start = i;
    while (i < row.size() && row[i] != ' ' && row[i] != '\t' && row[i] != '\r') ++i;
    out.push_back(row.substr(start, i - start));
  }
  return out;
}

bool parse_int(std::string_view s, long long& out) {
  if (s.empty()) return false;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

std::optional<Rational> parse_rational(std::string_view s) {
  long long num = 0, den = 1;
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!parse_int(s, num)) return std::nullopt;
  } else if (!parse_int(s.substr(0, slash), num) || !parse_int(s.substr(slash + 1), den) || den <= 0) {
    return std::nullopt;
  }
  return Rational(num, den);
}

bool in_unit_box(const MvVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r >= 0 && r <= 1; });
}

bool leq(const MvVector& a, const MvVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::optional<MvVector> bounded_sum(const MvVector& a, const MvVector& b) {
  MvVector s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    s[i] = a[i] + b[i];
    if (s[i] > 1) return std::nullopt;
  }
  return s;
}

std::string coordinate_name(const MvVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += format_rational(v[i]);
  }
  return s + ")";
}

}  // namespace

std::string format_rational(const Rational& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << '/' << r.denominator();
  return os.str();
}

MvGenSpec parse_mvgen_spec(std::string_view text) {
  MvGenSpec spec;
  int line = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    ++line;
    const auto toks = split_ws(text.substr(pos, end - pos));
    pos = end + 1;
    if (!toks.empty()) {
      auto fail = [&](const std::string& msg) -> SyntaxError {
        return SyntaxError(ErrorKind::Syntax, line, 1, msg);
      };
      if (toks[0] == "dim") {
        long long d = 0;
        if (toks.size() != 2 || !parse_int(toks[1], d) || d <= 0 || d > 64) throw fail("'dim' takes one positive integer");
        spec.dim = static_cast<int>(d);
      } else if (toks[0] == "gen" || toks[0] == "label") {
        if (spec.dim == 0) throw fail("'dim' must precede vectors");
        if (toks.size() != static_cast<std::size_t>(spec.dim) + 2)
          throw fail("expected a name and " + std::to_string(spec.dim) + " coordinates");
        NamedVector nv{std::string(toks[1]), {}};
        for (std::size_t i = 2; i < toks.size(); ++i) {
          auto r = parse_rational(toks[i]);
          if (!r) throw fail("bad rational '" + std::string(toks[i]) + "'");
          nv.coords.push_back(*r);
        }
        (toks[0] == "gen" ? spec.generators : spec.labels).push_back(std::move(nv));
      } else {
        throw fail("unknown directive '" + std::string(toks[0]) + "'");
      }
    }
    if (end == text.size()) break;
  }
  if (spec.dim == 0) throw SyntaxError(ErrorKind::Syntax, 1, 1, "missing 'dim'");
  return spec;
}

AlgebraFile mvgen(const MvGenSpec& spec, std::size_t cap) {
  if (spec.dim <= 0) throw Error(ErrorKind::PreconditionViolated, "dim must be positive");
  for (const auto* list : {&spec.generators, &spec.labels})
    for (const auto& g : *list) {
      if (g.coords.size() != static_cast<std::size_t>(spec.dim))
        throw Error(ErrorKind::PreconditionViolated, "vector '" + g.name + "' has the wrong dimension");
      if (!in_unit_box(g.coords))
        throw Error(ErrorKind::CoordinateOutOfRange, "vector '" + g.name + "' leaves [0,1]^" + std::to_string(spec.dim));
    }

  const MvVector zero(static_cast<std::size_t>(spec.dim), Rational(0));
  const MvVector one(static_cast<std::size_t>(spec.dim), Rational(1));

  std::set<MvVector> closure;
  std::vector<MvVector> all;
  auto insert = [&](const MvVector& v) {
    if (!closure.insert(v).second) return;
    if (closure.size() > cap)
      throw Error(ErrorKind::ClosureBudgetExceeded, "closure exceeds " + std::to_string(cap) + " elements");
    all.push_back(v);
  };
  insert(zero);
  insert(one);
  for (const auto& g : spec.generators) insert(g.coords);

  for (std::size_t i = 0; i < all.size(); ++i) {
    const MvVector v = all[i];
    MvVector c(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) c[k] = Rational(1) - v[k];
    insert(c);
    for (std::size_t j = 0; j <= i; ++j) {
      const MvVector w = all[j];
      if (auto s = bounded_sum(v, w)) insert(*s);
      if (leq(w, v)) {
        MvVector d(v.size());
        for (std::size_t k = 0; k < v.size(); ++k) d[k] = v[k] - w[k];
        insert(d);
      }
      if (leq(v, w)) {
        MvVector d(v.size());
        for (std::size_t k = 0; k < v.size(); ++k) d[k] = w[k] - v[k];
        insert(d);
      }
    }
  }

  std::map<MvVector, std::string> named;
  std::vector<MvVector> order{zero};
  named[zero] = "0";
  named[one] = "1";
  std::set<std::string> used{"0", "1"};
  for (const auto* list : {&spec.generators, &spec.labels})
    for (const auto& g : *list) {
      if (!closure.contains(g.coords))
        throw Error(ErrorKind::PreconditionViolated, "label '" + g.name + "' is not in the closure");
      if (named.contains(g.coords)) continue;
      if (!used.insert(g.name).second) throw Error(ErrorKind::PreconditionViolated, "name '" + g.name + "' used twice");
      named[g.coords] = g.name;
      order.push_back(g.coords);
    }
  for (const auto& v : closure)
    if (!named.contains(v)) {
      named[v] = coordinate_name(v);
      if (!used.insert(named[v]).second) throw Error(ErrorKind::PreconditionViolated, "name '" + named[v] + "' used twice");
      order.push_back(v);
    }
  order.push_back(one);

  AlgebraFile f;
  for (const auto& v : order) f.elements.push_back(named[v]);
  for (std::size_t i = 1; i + 1 < order.size(); ++i)
    for (std::size_t j = i; j + 1 < order.size(); ++j)
      if (auto s = bounded_sum(order[i], order[j])) f.sums.push_back({named[order[i]], named[order[j]], named[*s]});
  return canonical(f);
}

}  // namespace effalg
