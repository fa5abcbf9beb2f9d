#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "effalg/algebra.hpp"

namespace effalg {

struct SumTriple {
  std::string x, y, z;
  friend bool operator==(const SumTriple&, const SumTriple&) = default;
};

/// Contents of a `.ea` file:
///
///     # comment
///     elements a b c ...
///     sum x y z
///
/// `0` and `1` are added when not declared. Identity sums x + 0 = x are implicit.
struct AlgebraFile {
  std::vector<std::string> elements;
  std::vector<SumTriple> sums;
  friend bool operator==(const AlgebraFile&, const AlgebraFile&) = default;
};

/// Throws SyntaxError (kind Syntax or UnknownName) with 1-based line/column.
AlgebraFile parse_algebra(std::string_view text);

/// Canonical form: elements ordered 0, declared order, 1; each sum written
/// once with the lower-id summand first, sorted; identity sums dropped.
AlgebraFile canonical(const AlgebraFile& file);
std::string serialize(const AlgebraFile& file);

SumTable to_table(const AlgebraFile& file);
/// parse + to_table + validate.
EffectAlgebra load_algebra(std::string_view text);
/// Every defined sum of nonzero elements, in canonical form.
AlgebraFile to_file(const EffectAlgebra& e);

}  // namespace effalg
