#include "pairstab/graph6.hpp"

#include <fstream>
#include <istream>

#include "pairstab/errors.hpp"

namespace pairstab {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int sextet(char c) {
  if (c < 63 || c > 126) {
    throw InvalidInput("graph6: invalid character code " + std::to_string(static_cast<int>(c)));
  }
  return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw InvalidInput("graph6: empty input");
  std::size_t pos = 0;
  long n = 0;
  if (text[0] != 126) {
    n = sextet(text[0]);
    pos = 1;
  } else if (text.size() >= 2 && text[1] != 126) {
    if (text.size() < 4) throw InvalidInput("graph6: truncated order field");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | sextet(text[i]);
    pos = 4;
  } else {
    if (text.size() < 8) throw InvalidInput("graph6: truncated order field");
    for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | sextet(text[i]);
    pos = 8;
  }
  if (n > 100000) throw InvalidInput("graph6: order " + std::to_string(n) + " is too large");
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) {
    throw InvalidInput("graph6: expected " + std::to_string(bytes) + " data bytes for order " +
                       std::to_string(n) + ", got " + std::to_string(text.size() - pos));
  }
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = sextet(text[pos + k / 6]);
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  // Padding bits must be zero for the encoding to be canonical.
  if (bits % 6 != 0 && (sextet(text.back()) & ((1 << (6 - bits % 6)) - 1)) != 0) {
    throw InvalidInput("graph6: non-zero padding bits");
  }
  return Graph(static_cast<int>(n), edges);
}

std::string emit_graph6(const Graph& g) {
  const long n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  } else {
    out += "~~";
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  }
  int acc = 0;
  int used = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + 63));
  return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  return read_graph6_stream(in);
}

Graph read_graph(const std::string& path) {
  auto graphs = read_graph6_file(path);
  if (graphs.empty()) throw InvalidInput(path + ": no graph6 record");
  return graphs.front();
}

}  // namespace pairstab
