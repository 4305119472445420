#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schub/schubert.hpp"

namespace schub {

/// Parsed "<FAMILY><rank>" or "<FAMILY><rank>:<node>" address. The node is
/// 1-based in text and stored 0-based here.
struct Address {
  SimpleType type{'A', 1};
  std::optional<int> k;
};

/// Parses a diagram address such as "F4:3" or "B3". Throws input_error with
/// a one-line message naming the offending token.
Address parse_address(const std::string& text);

/// As parse_address, but the marked node is mandatory.
MarkedDiagram parse_marked(const std::string& text);

/// Parses a whitespace-separated word of 1-based simple reflection letters
/// ("3 2 3 4") into 0-based letters. Empty text means the identity.
std::vector<int> parse_word(const std::string& text, int rank);

/// Parses a comma-separated 1-based node list ("2,3") into sorted 0-based
/// indices. Rejects duplicates and out-of-range entries.
std::vector<int> parse_nodes(const std::string& text, int rank);

/// 0-based letters -> "3 2 3 4" (1-based); "id" for the empty word.
std::string format_word(const std::vector<int>& word);

/// 0-based nodes -> "2,3" (1-based).
std::string format_nodes(const std::vector<int>& nodes);

}  // namespace schub
