#pragma once

#include <stdexcept>
#include <string>

namespace mlaw {

/// Bad user input: malformed specs, undeclared symbols, shape mismatches.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Syntax error in presentation or cycle-notation text.
class ParseError : public InputError {
public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// A configured resource limit was hit (coset count, group order).
class LimitError : public std::runtime_error {
public:
  explicit LimitError(const std::string& what, long live = -1, long total = -1)
      : std::runtime_error(what), live_cosets(live), total_cosets(total) {}

  long live_cosets;   // live cosets at overflow, -1 if not applicable
  long total_cosets;  // cosets ever defined, -1 if not applicable
};

/// An internal invariant failed. Signals a bug, not bad input.
class InvariantError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

inline void check_invariant(bool cond, const char* msg) {
  if (!cond) throw InvariantError(msg);
}

}  // namespace mlaw
