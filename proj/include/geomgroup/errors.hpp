#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace geomgroup {

/// Base class for every error thrown by the library. Partial actions are not
/// errors: they are reported through `Partial<T>` (see operators.hpp).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. `offset` is the byte offset of the first problem.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class AddressOutsideSkeleton : public Error {
 public:
  explicit AddressOutsideSkeleton(const std::string& address)
      : Error("address outside skeleton: " + address), address_(address) {}
  const std::string& address() const noexcept { return address_; }

 private:
  std::string address_;
};

class EmptyInput : public Error {
 public:
  EmptyInput() : Error("empty input") {}
};

class MalformedPolish : public Error {
 public:
  explicit MalformedPolish(std::size_t position)
      : Error("malformed Polish expression at symbol " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UnboundLabel : public Error {
 public:
  explicit UnboundLabel(long label)
      : Error("substitution has no image for label " + std::to_string(label)), label_(label) {}
  long label() const noexcept { return label_; }

 private:
  long label_;
};

class NonInjectiveLabels : public Error {
 public:
  NonInjectiveLabels() : Error("tree labels are not pairwise distinct") {}
};

class UnexpandedAlias : public Error {
 public:
  UnexpandedAlias() : Error("word contains index-based letters; expand aliases first") {}
};

class NoHeir : public Error {
 public:
  explicit NoHeir(const std::string& address) : Error("address has no heir: " + address) {}
};

class TwistedNotSupported : public Error {
 public:
  TwistedNotSupported() : Error("twisted letters have no linear seed") {}
};

class SigmaHasNoLinearExpansion : public Error {
 public:
  SigmaHasNoLinearExpansion() : Error("sigma letters have no expansion into A/C letters") {}
};

class IllegalGenerator : public Error {
 public:
  IllegalGenerator(const std::string& letter, const std::string& regime)
      : Error("letter " + letter + " is not legal in regime " + regime) {}
};

class OverlappingSets : public Error {
 public:
  OverlappingSets() : Error("label sets are not disjoint") {}
};

class CapExceeded : public Error {
 public:
  explicit CapExceeded(std::size_t explored)
      : Error("orbit exploration cap exceeded after " + std::to_string(explored) + " states"),
        explored_(explored) {}
  std::size_t explored() const noexcept { return explored_; }

 private:
  std::size_t explored_;
};

class NotAnFSeed : public Error {
 public:
  NotAnFSeed() : Error("seed permutes labels; it does not realize an element of F") {}
};

class BudgetExhausted : public Error {
 public:
  explicit BudgetExhausted(std::size_t depth)
      : Error("natural tree would exceed depth budget " + std::to_string(depth)) {}
};

class NonCancellativeBracket : public Error {
 public:
  NonCancellativeBracket() : Error("bracket has no left division for this label") {}
};

class DomainNeverIntersects : public Error {
 public:
  DomainNeverIntersects() : Error("no sampled tree admitted both sides of the relation") {}
};

}  // namespace geomgroup
