#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "effalg/io.hpp"

namespace effalg {

using Rational = boost::rational<long long>;
using MvVector = std::vector<Rational>;

struct NamedVector {
  std::string name;
  MvVector coords;
};

/// Sub-effect algebra of [0,1]^dim generated by `generators`. `labels` only
/// name elements of the closure; they add nothing to it.
///
/// Text form, one directive per line, `#` comments:
///
///     dim 2
///     gen a 3/4 0
///     label 2b 1/2 1/2
struct MvGenSpec {
  int dim = 0;
  std::vector<NamedVector> generators;
  std::vector<NamedVector> labels;
};

inline constexpr std::size_t kMvGenCap = 4096;

MvGenSpec parse_mvgen_spec(std::string_view text);
std::string format_rational(const Rational& r);

/// Element order: 0, generators, labels, remaining vectors ascending, 1.
/// Unlabeled vectors are named by their coordinates, e.g. "(1/2,1/4)".
/// Throws CoordinateOutOfRange, ClosureBudgetExceeded, PreconditionViolated.
AlgebraFile mvgen(const MvGenSpec& spec, std::size_t cap = kMvGenCap);

}  // namespace effalg
