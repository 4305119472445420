#include "schub/address.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "schub/root_system.hpp"

namespace schub {

namespace {

int parse_positive_int(const std::string& token, const std::string& what) {
  if (token.empty())
    throw input_error("missing " + what);
  for (char c : token)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw input_error("bad " + what + " '" + token + "'");
  try {
    return std::stoi(token);
  } catch (const std::exception&) {
    throw input_error("bad " + what + " '" + token + "'");
  }
}

}  // namespace

Address parse_address(const std::string& text) {
  if (text.empty()) throw input_error("empty diagram address");
  Address a;
  a.type.family = static_cast<char>(
      std::toupper(static_cast<unsigned char>(text[0])));
  const size_t colon = text.find(':');
  const std::string rank_txt = text.substr(1, colon == std::string::npos
                                                  ? std::string::npos
                                                  : colon - 1);
  a.type.rank = parse_positive_int(rank_txt, "rank in address '" + text + "'");
  root_system(a.type);  // validates family and rank
  if (colon != std::string::npos) {
    const int node = parse_positive_int(text.substr(colon + 1),
                                        "node in address '" + text + "'");
    if (node < 1 || node > a.type.rank)
      throw input_error("node " + std::to_string(node) + " out of range in '" +
                        text + "'");
    a.k = node - 1;
  }
  return a;
}

MarkedDiagram parse_marked(const std::string& text) {
  const Address a = parse_address(text);
  if (!a.k)
    throw input_error("address '" + text +
                      "' needs a marked node, e.g. " + to_string(a.type) +
                      ":1");
  return MarkedDiagram{a.type, *a.k};
}

std::vector<int> parse_word(const std::string& text, int rank) {
  std::vector<int> word;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    const int letter = parse_positive_int(token, "word letter");
    if (letter < 1 || letter > rank)
      throw input_error("word letter " + std::to_string(letter) +
                        " out of range 1.." + std::to_string(rank));
    word.push_back(letter - 1);
  }
  return word;
}

std::vector<int> parse_nodes(const std::string& text, int rank) {
  std::vector<int> nodes;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    const int node = parse_positive_int(token, "node");
    if (node < 1 || node > rank)
      throw input_error("node " + std::to_string(node) + " out of range 1.." +
                        std::to_string(rank));
    nodes.push_back(node - 1);
  }
  if (nodes.empty()) throw input_error("empty node list");
  std::sort(nodes.begin(), nodes.end());
  if (std::adjacent_find(nodes.begin(), nodes.end()) != nodes.end())
    throw input_error("duplicate node in list '" + text + "'");
  return nodes;
}

std::string format_word(const std::vector<int>& word) {
  if (word.empty()) return "id";
  std::ostringstream os;
  for (size_t t = 0; t < word.size(); ++t) os << (t ? " " : "") << word[t] + 1;
  return os.str();
}

std::string format_nodes(const std::vector<int>& nodes) {
  std::ostringstream os;
  for (size_t t = 0; t < nodes.size(); ++t)
    os << (t ? "," : "") << nodes[t] + 1;
  return os.str();
}

}  // namespace schub
