#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace catalan_zeta {

/// Base class for all domain errors. `name()` is the stable machine-readable
/// identifier that the CLI prints next to the human-readable message.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string name, const std::string& message)
      : std::runtime_error(message), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// Step multiset is not balanced (north count != east count).
struct UnbalancedPath : DomainError {
  explicit UnbalancedPath(const std::string& m) : DomainError("UnbalancedPath", m) {}
};

/// A prefix contains more east than north steps; message carries the first
/// offending 1-based step index.
struct BelowDiagonal : DomainError {
  explicit BelowDiagonal(const std::string& m) : DomainError("BelowDiagonal", m) {}
};

/// Integer sequence fails the area-sequence conditions (first entry 0,
/// rises of at most one).
struct NotAreaSequence : DomainError {
  explicit NotAreaSequence(const std::string& m) : DomainError("NotAreaSequence", m) {}
};

struct NotPropertyA : DomainError {
  explicit NotPropertyA(const std::string& m) : DomainError("NotPropertyA", m) {}
};

struct NotPropertyB : DomainError {
  explicit NotPropertyB(const std::string& m) : DomainError("NotPropertyB", m) {}
};

/// The inverse zeta parse found a malformed segment. Cannot happen for
/// genuine images; kept as a guard for corrupted input.
struct NotZetaImageShape : DomainError {
  explicit NotZetaImageShape(const std::string& m) : DomainError("NotZetaImageShape", m) {}
};

struct NotSingleReturn : DomainError {
  explicit NotSingleReturn(const std::string& m) : DomainError("NotSingleReturn", m) {}
};

struct TooFewReturns : DomainError {
  explicit TooFewReturns(const std::string& m) : DomainError("TooFewReturns", m) {}
};

struct TooFewRises : DomainError {
  explicit TooFewRises(const std::string& m) : DomainError("TooFewRises", m) {}
};

struct TooFewCrucial : DomainError {
  explicit TooFewCrucial(const std::string& m) : DomainError("TooFewCrucial", m) {}
};

/// Vertex labels do not form a preorder, or parent links are inconsistent.
struct NotPlantedTree : DomainError {
  explicit NotPlantedTree(const std::string& m) : DomainError("NotPlantedTree", m) {}
};

/// Text input could not be parsed at all (bad character, empty word, ...).
struct InvalidFormat : DomainError {
  explicit InvalidFormat(const std::string& m) : DomainError("InvalidFormat", m) {}
};

}  // namespace catalan_zeta
