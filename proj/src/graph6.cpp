#include "symbreak/graph6.hpp"

#include <string>

namespace symbreak {

namespace {

void append_bits(std::string& out, const std::vector<bool>& bits) {
  for (size_t i = 0; i < bits.size(); i += 6) {
    int v = 0;
    for (size_t j = 0; j < 6; ++j) {
      v <<= 1;
      if (i + j < bits.size() && bits[i + j]) v |= 1;
    }
    out.push_back(static_cast<char>(v + 63));
  }
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const long long n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  }
  std::vector<bool> bits;
  bits.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j));
  append_bits(out, bits);
  return out;
}

Graph from_graph6(std::string_view line) {
  size_t pos = 0;
  if (line.rfind(">>graph6<<", 0) == 0) pos = 10;
  while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
  size_t end = line.size();
  while (end > pos && (line[end - 1] == '\n' || line[end - 1] == '\r' || line[end - 1] == ' '))
    --end;
  if (pos >= end) fail(Err::Parse, "empty graph6 line");

  auto byte = [&](size_t i) -> int {
    if (i >= end) fail(Err::Parse, "truncated graph6 header");
    int c = static_cast<unsigned char>(line[i]);
    if (c < 63 || c > 126) fail(Err::Parse, "invalid graph6 character");
    return c - 63;
  };

  long long n = 0;
  if (byte(pos) != 63) {
    n = byte(pos);
    ++pos;
  } else if (pos + 1 < end && byte(pos + 1) != 63) {
    n = 0;
    for (int k = 1; k <= 3; ++k) n = (n << 6) | byte(pos + k);
    pos += 4;
  } else {
    n = 0;
    for (int k = 2; k <= 7; ++k) n = (n << 6) | byte(pos + k);
    pos += 8;
  }
  if (n < 0 || n > 100000) fail(Err::Parse, "unreasonable graph6 order");

  const long long need_bits = n * (n - 1) / 2;
  const long long need_bytes = (need_bits + 5) / 6;
  if (static_cast<long long>(end - pos) != need_bytes)
    fail(Err::Parse, "graph6 body length mismatch");

  std::vector<std::pair<int, int>> edges;
  long long bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      int v = byte(pos + bit / 6);
      if ((v >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  return Graph(static_cast<int>(n), edges);
}

std::vector<Graph> read_graph6_lines(std::string_view text) {
  std::vector<Graph> out;
  size_t start = 0;
  while (start < text.size()) {
    size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(start, nl - start);
    bool blank = true;
    for (char c : line)
      if (c != ' ' && c != '\r' && c != '\t') blank = false;
    if (!blank) out.push_back(from_graph6(line));
    start = nl + 1;
  }
  return out;
}

}  // namespace symbreak
