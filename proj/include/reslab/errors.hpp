#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace reslab {

/// Raised when an argument falls outside an operation's precondition
/// (out-of-range vertex, bad family parameter, missing MDI vertex, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A size cap (vertex count, enumeration order) was exceeded.
class LimitExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Malformed graph6 input. `offset()` is the zero-based byte position of the
/// offending character within the record handed to the decoder.
class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Havel-Hakimi reduction failed; `step()` counts reductions already applied.
class NonGraphic : public std::domain_error {
 public:
  NonGraphic(const std::string& what, int step)
      : std::domain_error(what + " (step " + std::to_string(step) + ")"),
        step_(step) {}

  int step() const noexcept { return step_; }

 private:
  int step_;
};

/// The HH-guided Maxine run reached a graph with no HH-property vertex.
class NoHHVertex : public std::runtime_error {
 public:
  explicit NoHHVertex(int step)
      : std::runtime_error("no Havel-Hakimi property vertex at step " +
                           std::to_string(step)),
        step_(step) {}

  int step() const noexcept { return step_; }

 private:
  int step_;
};

}  // namespace reslab
