#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace schub {

/// Raised on malformed user input (bad diagram address, invalid word,
/// out-of-range node, non-root vector, ...). The CLI maps it to exit code 2.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a structural invariant that the code relies on fails to hold.
/// Never triggered by user input alone. The CLI maps it to exit code 1.
struct internal_error : std::logic_error {
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

/// One of the simple diagram families A, B, C, D, E, F, G with its rank.
struct SimpleType {
  char family = 'A';
  int rank = 1;

  bool operator==(const SimpleType& o) const {
    return family == o.family && rank == o.rank;
  }
  bool operator!=(const SimpleType& o) const { return !(*this == o); }
  bool operator<(const SimpleType& o) const {
    return family != o.family ? family < o.family : rank < o.rank;
  }
};

/// Integer coefficient vector in the basis of simple roots; index i holds the
/// coefficient of the (i+1)-th simple root.
using Coeffs = std::vector<int>;

std::string to_string(const SimpleType& t);

}  // namespace schub
