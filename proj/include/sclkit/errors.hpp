#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sclkit {

/// Input text did not match the word / automorphism / certificate grammar.
/// `offset` is the byte position of the offending character in the input.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& message, std::size_t offset)
      : std::runtime_error(message + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

/// A rewriting or search budget ran out. This signals "raise the budget",
/// never a mathematical answer; callers must report it as inconclusive.
class BudgetExceededError : public std::runtime_error {
public:
  explicit BudgetExceededError(std::uint64_t budget)
      : std::runtime_error("reduction budget of " + std::to_string(budget) +
                           " elementary steps exhausted"),
        budget_(budget) {}

  std::uint64_t budget() const noexcept { return budget_; }

private:
  std::uint64_t budget_;
};

/// Misuse of an operation: mixed alphabets, out-of-rank letters, inadmissible
/// braid words, malformed permutations and the like.
class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An equality engine was requested for a group that deliberately has none
/// (the stable mapping class placeholder family).
class NoEngineError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace sclkit
