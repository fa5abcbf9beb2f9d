#include "effalg/builtin.hpp"

#include <charconv>

namespace effalg {

namespace {

constexpr std::string_view kEx1 = R"(# two-dimensional, a = (3/4,0) b = (1/4,1/4) c = (0,3/4)
elements 0 a b c 2b 3b a+b b+c 1
sum a b a+b
sum a c 3b
sum b b 2b
sum b c b+c
sum b 2b 3b
sum b 3b 1
sum 2b 2b 1
sum a b+c 1
sum c a+b 1
)";

constexpr std::string_view kEx2 = R"(# two-dimensional, a = (5/6,0) b = (1/6,1/6) c = (0,5/6)
elements 0 a b c 2b 3b 4b 5b a+b b+c 1
sum a b a+b
sum a c 5b
sum b c b+c
sum b b 2b
sum b 2b 3b
sum b 3b 4b
sum b 4b 5b
sum b 5b 1
sum 2b 2b 4b
sum 2b 3b 5b
sum 2b 4b 1
sum 3b 3b 1
sum a b+c 1
sum c a+b 1
)";

// Three Boolean blocks {a,b,f}, {a,c,e}, {b,d,e} pasted along shared atoms.
constexpr std::string_view kEx3 = R"(elements 0 a b c d e f a' b' c' d' e' f' 1
sum a b f'
sum a f b'
sum b f a'
sum a c e'
sum a e c'
sum c e a'
sum b d e'
sum b e d'
sum d e b'
sum a a' 1
sum b b' 1
sum c c' 1
sum d d' 1
sum e e' 1
sum f f' 1
)";

constexpr std::string_view kEx1Mv = R"(dim 2
gen a 3/4 0
gen b 1/4 1/4
gen c 0 3/4
label 2b 1/2 1/2
label 3b 3/4 3/4
label a+b 1 1/4
label b+c 1/4 1
)";

constexpr std::string_view kEx2Mv = R"(dim 2
gen a 5/6 0
gen b 1/6 1/6
gen c 0 5/6
label 2b 1/3 1/3
label 3b 1/2 1/2
label 4b 2/3 2/3
label 5b 5/6 5/6
label a+b 1 1/6
label b+c 1/6 1
)";

constexpr std::string_view kEx3Mv = R"(dim 3
gen a 17/20 1/20 1/10
gen b 1/20 17/20 1/10
gen c 3/20 19/20 0
gen d 19/20 3/20 0
gen e 0 0 9/10
gen f 1/10 1/10 4/5
label a' 3/20 19/20 9/10
label b' 19/20 3/20 9/10
label c' 17/20 1/20 1
label d' 1/20 17/20 1
label e' 1 1 1/10
label f' 9/10 9/10 1/5
)";

int parse_param(std::string_view name, std::string_view prefix) {
  const std::string_view digits = name.substr(prefix.size());
  int n = 0;
  const auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (digits.empty() || ec != std::errc() || p != digits.data() + digits.size() || n < 1)
    throw Error(ErrorKind::UnknownBuiltin, "bad parameter in builtin '" + std::string(name) + "'");
  return n;
}

AlgebraFile chain(int n) {
  if (n + 1 > kMaxElements) throw Error(ErrorKind::CapExceeded, "chain:" + std::to_string(n) + " exceeds the element cap");
  auto nm = [n](int k) {
    if (k == 0) return std::string("0");
    if (k == n) return std::string("1");
    return k == 1 ? std::string("b") : std::to_string(k) + "b";
  };
  AlgebraFile f;
  for (int k = 0; k <= n; ++k) f.elements.push_back(nm(k));
  for (int i = 1; i <= n; ++i)
    for (int j = i; i + j <= n; ++j) f.sums.push_back({nm(i), nm(j), nm(i + j)});
  return canonical(f);
}

AlgebraFile boolean(int n) {
  if (n > 6) throw Error(ErrorKind::CapExceeded, "boolean:" + std::to_string(n) + " exceeds the element cap");
  const unsigned full = (1u << n) - 1;
  auto nm = [full](unsigned s) {
    if (s == 0) return std::string("0");
    if (s == full) return std::string("1");
    std::string r;
    for (int i = 0; i < 6; ++i)
      if (s & (1u << i)) r += static_cast<char>('p' + i);
    return r;
  };
  AlgebraFile f;
  for (unsigned s = 0; s <= full; ++s) f.elements.push_back(nm(s));
  for (unsigned s = 1; s <= full; ++s)
    for (unsigned t = s; t <= full; ++t)
      if ((s & t) == 0) f.sums.push_back({nm(s), nm(t), nm(s | t)});
  return canonical(f);
}

}  // namespace

AlgebraFile builtin(std::string_view name) {
  if (name == "ex1") return parse_algebra(kEx1);
  if (name == "ex2") return parse_algebra(kEx2);
  if (name == "ex3") return parse_algebra(kEx3);
  if (name.starts_with("chain:")) return chain(parse_param(name, "chain:"));
  if (name.starts_with("boolean:")) return boolean(parse_param(name, "boolean:"));
  throw Error(ErrorKind::UnknownBuiltin, "unknown builtin '" + std::string(name) + "'");
}

std::string builtin_text(std::string_view name) { return serialize(builtin(name)); }

std::string builtin_mvgen_text(std::string_view name) {
  if (name == "ex1") return std::string(kEx1Mv);
  if (name == "ex2") return std::string(kEx2Mv);
  if (name == "ex3") return std::string(kEx3Mv);
  throw Error(ErrorKind::UnknownBuiltin, "no embedding for '" + std::string(name) + "'");
}

MvGenSpec builtin_mvgen_spec(std::string_view name) { return parse_mvgen_spec(builtin_mvgen_text(name)); }

std::vector<std::string> builtin_names() { return {"ex1", "ex2", "ex3", "chain:n", "boolean:n"}; }

}  // namespace effalg
