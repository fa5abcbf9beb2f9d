#pragma once

#include <string>
#include <utility>
#include <vector>

#include "effalg/classify.hpp"

namespace effalg {

/// Pairs (x, y) with x < y and nothing strictly between, ascending.
std::vector<std::pair<ElementId, ElementId>> covering_pairs(const EffectAlgebra& e);

/// Hasse diagram, bottom to top. Sharp elements are filled black, ultrameager
/// ones drawn as boxes; every node carries a `class` attribute listing its
/// classes (sharp, principal, central, meager, hypermeager, ultrameager).
std::string export_dot(const EffectAlgebra& e, const std::vector<ElementProfile>& profiles);

}  // namespace effalg
