#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "effalg/io.hpp"
#include "effalg/mvgen.hpp"

namespace effalg {

/// "ex1", "ex2", "ex3", "chain:n" (0 < b < 2b < ... < nb = 1) or "boolean:n".
/// Throws UnknownBuiltin, CapExceeded.
AlgebraFile builtin(std::string_view name);
std::string builtin_text(std::string_view name);

/// The embedding of ex1/ex2/ex3 into a product of unit intervals, with labels
/// matching the builtin element names. Throws UnknownBuiltin.
MvGenSpec builtin_mvgen_spec(std::string_view name);
std::string builtin_mvgen_text(std::string_view name);

std::vector<std::string> builtin_names();

}  // namespace effalg
