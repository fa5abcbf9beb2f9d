#pragma once

#include <random>
#include <string>
#include <vector>

#include "effalg/io.hpp"

namespace corpus {

struct Entry {
  std::string name;
  effalg::AlgebraFile file;
  enum Kind { Example, Chain, Boolean, Random, MvGen } kind;
};

/// ex1-ex3, chains n = 2..8, Booleans 2^1..2^4, 120 random tables of size
/// <= 10 and 12 mvgen algebras. Deterministic.
const std::vector<Entry>& all();

effalg::EffectAlgebra load(const Entry& entry);

// Builders used by the random part; exposed for tests of their own.
effalg::AlgebraFile relabel(const effalg::AlgebraFile& f, std::mt19937& rng, const std::string& prefix);
effalg::AlgebraFile horizontal_sum(const effalg::AlgebraFile& a, const effalg::AlgebraFile& b);
effalg::AlgebraFile product(const effalg::AlgebraFile& a, const effalg::AlgebraFile& b);

}  // namespace corpus
