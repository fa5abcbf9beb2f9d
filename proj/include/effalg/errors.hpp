#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "effalg/element_set.hpp"

namespace effalg {

enum class ErrorKind {
  Syntax,
  UnknownName,
  AxiomViolation,
  DuplicateContradiction,
  ZeroEqualsOne,
  CapExceeded,
  UnknownElement,
  NotBelow,
  ZeroHasNoOrder,
  NotOrthogonal,
  PreconditionViolated,
  NotSharplyDominating,
  NotLattice,
  NotAtomic,
  NotMeager,
  NotHomogeneous,
  NotInBlock,
  NoRefinementFound,
  NoStructureFound,
  Stuck,
  SearchBudgetExceeded,
  CoordinateOutOfRange,
  ClosureBudgetExceeded,
  UnknownBuiltin,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

enum class Axiom { Ei, Eii, Eiii, Eiv, Cancellation };

const char* to_string(Axiom axiom);

/// One failed instance of an effect-algebra axiom, with the element tuple
/// that exhibits it (ids into the table being validated).
struct AxiomFailure {
  Axiom axiom;
  std::vector<ElementId> witness;
  std::string detail;
};

class AxiomViolation : public Error {
 public:
  explicit AxiomViolation(AxiomFailure failure);
  const AxiomFailure& failure() const { return failure_; }

 private:
  AxiomFailure failure_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(ErrorKind kind, int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// A bounded search ran out of nodes before reaching a verdict.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, ElementSet undecided = {})
      : Error(ErrorKind::SearchBudgetExceeded, "search budget exceeded: " + what),
        undecided_(undecided) {}
  ElementSet undecided() const { return undecided_; }

 private:
  ElementSet undecided_;
};

/// Node counter shared by the exhaustive searches.
class Budget {
 public:
  static constexpr long long kDefault = 10'000'000;

  explicit Budget(long long limit = kDefault) : limit_(limit) {}
  void charge(const char* what, long long nodes = 1) {
    used_ += nodes;
    if (used_ > limit_) throw BudgetExceeded(what);
  }
  long long used() const { return used_; }
  long long limit() const { return limit_; }

 private:
  long long limit_;
  long long used_ = 0;
};

}  // namespace effalg
