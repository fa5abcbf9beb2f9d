#pragma once

// Definition-direct reference implementation used to cross-check the
// library. Works from the raw file contents and shares no code with src/.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "effalg/io.hpp"

namespace oracle {

using Mask = std::uint64_t;

class Naive {
 public:
  explicit Naive(const effalg::AlgebraFile& f);

  int n() const { return n_; }
  int zero() const { return 0; }
  int one() const { return n_ - 1; }
  const std::string& name(int x) const { return names_[x]; }
  int id(const std::string& name) const;
  Mask mask(std::initializer_list<const char*> names) const;
  Mask all() const { return n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1; }

  int sum(int x, int y) const { return sum_[x][y]; }  // -1 when undefined
  bool leq(int x, int y) const;
  int comp(int x) const;
  int minus(int y, int x) const;  // -1 unless x <= y
  int ord(int x) const;           // -1 for zero

  bool sharp(int x) const;
  bool principal(int x) const;
  bool central(int x) const;
  Mask sharp_set() const;
  Mask mea() const;
  Mask hmea() const;       // exists y with x <= y and x <= y'
  Mask self_orth() const;  // x + x defined
  Mask umea() const;
  Mask center() const;

  bool compatible(int x, int y) const;
  bool rdp() const;
  bool homogeneous() const;
  bool is_lattice() const;

  Mask lower_bounds(Mask s) const;
  Mask upper_bounds(Mask s) const;
  Mask maximal(Mask s) const;
  Mask minimal(Mask s) const;

  /// Pairs x < y with nothing in between: the order minus its square.
  std::vector<std::pair<int, int>> transitive_reduction() const;

  /// Sub-effect algebra: contains 0, 1 and is closed whenever two of
  /// x, y, x + y lie in it.
  bool sub_effect_algebra(Mask q) const;
  /// RDP of the restriction to q (decompositions taken inside q).
  bool rdp_within(Mask q) const;
  /// Every pair in q has a glb and lub inside q w.r.t. the order of q.
  bool lattice_within(Mask q) const;

  /// Inclusion-maximal sets P(F) over orthogonal families F of nonzero
  /// elements with 1 in P(F); for a finite algebra these are exactly the
  /// maximal internally compatible subsets containing 1.
  std::vector<Mask> maximal_ic_sets() const;
  /// Maximal sub-effect algebras with RDP, by scanning every subset.
  std::vector<Mask> maximal_rdp_subalgebras() const;
  /// M internally compatible: some orthogonal family from M has M among
  /// its partial sums.
  bool internally_compatible(Mask m) const;

 private:
  template <class F>
  void families(Mask allowed, F&& visit) const;

  int n_;
  std::vector<std::string> names_;
  std::vector<std::vector<int>> sum_;
};

/// Exhaustive search for a sum-preserving bijection (0 and 1 fixed).
bool isomorphic(const Naive& a, const Naive& b);
/// The name-preserving map is an isomorphism.
bool same_by_names(const Naive& a, const Naive& b);

int popcount(Mask m);

}  // namespace oracle
