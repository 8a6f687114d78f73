#include <cctype>
#include <charconv>
#include <cstdio>
#include <sstream>

#include "ribbon/error.hpp"
#include "ribbon/graph.hpp"

namespace ribbon {

namespace {

bool is_name(std::string_view token) {
  if (token.empty()) return false;
  for (char c : token) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool is_decimal_literal(std::string_view s) {
  // digits with at most one '.', optional exponent
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  bool digits = false;
  bool dot = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits = true;
    } else if (c == '.' && !dot) {
      dot = true;
    } else {
      break;
    }
  }
  if (!digits) return false;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    bool exp_digits = false;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      exp_digits = true;
      ++i;
    }
    if (!exp_digits) return false;
  }
  return i == s.size();
}

}  // namespace

MetricGraph parse_graph(std::string_view text) {
  std::vector<NamedEdge> edges;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = split_ws(line);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (tokens[0] != "edge") {
      throw ParseError(line_no, "expected 'edge', found '" + std::string(tokens[0]) + "'");
    }
    if (tokens.size() != 5) {
      throw ParseError(line_no, "expected 'edge <name> <vertex> <vertex> <length>'");
    }
    for (std::size_t k = 1; k <= 3; ++k) {
      if (!is_name(tokens[k])) {
        throw ParseError(line_no, "invalid name '" + std::string(tokens[k]) + "'");
      }
    }
    if (!is_decimal_literal(tokens[4])) {
      throw ParseError(line_no, "invalid length '" + std::string(tokens[4]) + "'");
    }
    double length = 0.0;
    auto [ptr, ec] = std::from_chars(tokens[4].data(), tokens[4].data() + tokens[4].size(), length);
    if (ec != std::errc() || ptr != tokens[4].data() + tokens[4].size()) {
      throw ParseError(line_no, "invalid length '" + std::string(tokens[4]) + "'");
    }
    if (!(length > 0.0)) {
      throw ParseError(line_no, "non-positive length " + std::string(tokens[4]) + " for edge '" +
                                    std::string(tokens[1]) + "'");
    }
    for (const NamedEdge& e : edges) {
      if (e.name == tokens[1]) {
        throw ParseError(line_no, "duplicate edge name '" + std::string(tokens[1]) + "'");
      }
    }
    edges.push_back(NamedEdge{std::string(tokens[1]), std::string(tokens[2]), std::string(tokens[3]), length});
    if (end == text.size()) break;
  }
  if (edges.empty()) throw Error(ErrorKind::Validation, "graph file contains no edges");
  MetricGraph g = graph_from_edges(edges);
  if (!is_connected(g)) throw Error(ErrorKind::Validation, "graph is not connected");
  return g;
}

std::string format_graph(const MetricGraph& g) {
  std::ostringstream out;
  char buf[64];
  for (const Edge& e : g.edges()) {
    std::snprintf(buf, sizeof buf, "%.17g", e.length);
    out << "edge " << e.name << ' ' << g.vertex_name(e.tail) << ' ' << g.vertex_name(e.head) << ' ' << buf
        << '\n';
  }
  return out.str();
}

std::string graph_hash(const MetricGraph& g) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : format_graph(g)) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace ribbon
