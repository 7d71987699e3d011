#include "tsid/io.hpp"

#include <charconv>
#include <vector>

#include "tsid/errors.hpp"

namespace tsid {

namespace {

struct Line {
  int number;
  std::string_view text;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back({++number, line});
    pos = end + 1;
  }
  return lines;
}

// Skips leading comment lines.
std::size_t first_content(const std::vector<Line>& lines) {
  std::size_t i = 0;
  while (i < lines.size() && !lines[i].text.empty() && lines[i].text.front() == '#') ++i;
  return i;
}

std::vector<long long> parse_ints(const Line& line, std::size_t expected) {
  std::vector<long long> out;
  std::string_view s = line.text;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && s[i] == ' ') ++i;
    if (i >= s.size()) break;
    long long value = 0;
    auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + s.size(), value);
    if (ec != std::errc() || (ptr != s.data() + s.size() && *ptr != ' '))
      throw ParseError(line.number, "expected integers, got '" + std::string(s) + "'");
    out.push_back(value);
    i = static_cast<std::size_t>(ptr - s.data());
  }
  if (out.size() != expected)
    throw ParseError(line.number, "expected " + std::to_string(expected) + " integers, got " + std::to_string(out.size()));
  return out;
}

}  // namespace

std::string to_dgf(const Digraph& d) {
  std::string out = std::to_string(d.order()) + " " + std::to_string(d.edge_count()) + "\n";
  for (const Edge& e : d.edges()) out += std::to_string(e.from) + " " + std::to_string(e.to) + "\n";
  return out;
}

Digraph parse_dgf(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t i = first_content(lines);
  if (i >= lines.size()) throw ParseError(static_cast<int>(lines.size()) + 1, "missing DGF/1 header 'n m'");
  const auto header = parse_ints(lines[i], 2);
  if (header[0] < 0 || header[1] < 0 || header[0] > 1'000'000) throw ParseError(lines[i].number, "bad vertex or edge count");
  const int n = static_cast<int>(header[0]);
  const long long m = header[1];
  DigraphBuilder b(n);
  Edge previous{-1, -1};
  for (long long k = 0; k < m; ++k) {
    ++i;
    if (i >= lines.size()) throw ParseError(static_cast<int>(lines.size()) + 1, "expected " + std::to_string(m) + " edge lines");
    const auto uv = parse_ints(lines[i], 2);
    if (uv[0] < 0 || uv[1] < 0 || uv[0] >= n || uv[1] >= n) throw ParseError(lines[i].number, "endpoint out of range");
    const Edge e{static_cast<int>(uv[0]), static_cast<int>(uv[1])};
    if (!(previous < e)) throw ParseError(lines[i].number, "edges must be sorted lexicographically without repeats");
    previous = e;
    try {
      b.add_edge(e.from, e.to);
    } catch (const PreconditionError& err) {
      throw ParseError(lines[i].number, err.what());
    }
  }
  for (++i; i < lines.size(); ++i)
    if (!lines[i].text.empty()) throw ParseError(lines[i].number, "trailing content after edge list");
  return std::move(b).build();
}

std::string trn_bits(const Tournament& t) {
  std::string bits;
  for (bool b : t.bits()) bits.push_back(b ? '1' : '0');
  return bits;
}

std::string to_trn(const Tournament& t) {
  return std::to_string(t.order()) + "\n" + trn_bits(t) + "\n";
}

Tournament parse_trn(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t i = first_content(lines);
  if (i >= lines.size()) throw ParseError(static_cast<int>(lines.size()) + 1, "missing TRN/1 header 'n'");
  const auto header = parse_ints(lines[i], 1);
  if (header[0] < 0 || header[0] > 100'000) throw ParseError(lines[i].number, "bad vertex count");
  const int n = static_cast<int>(header[0]);
  const std::uint64_t pairs = pair_count(n);
  ++i;
  std::string_view bits_line;
  int bits_line_number = lines.empty() ? 1 : lines.back().number + 1;
  if (i < lines.size()) {
    bits_line = lines[i].text;
    bits_line_number = lines[i].number;
  } else if (pairs != 0) {
    throw ParseError(bits_line_number, "missing orientation string");
  }
  if (bits_line.size() != pairs)
    throw ParseError(bits_line_number, "orientation string has " + std::to_string(bits_line.size()) + " characters, expected " + std::to_string(pairs));
  std::vector<bool> bits;
  bits.reserve(pairs);
  for (char c : bits_line) {
    if (c != '0' && c != '1') throw ParseError(bits_line_number, "orientation string must use only '0' and '1'");
    bits.push_back(c == '1');
  }
  for (++i; i < lines.size(); ++i)
    if (!lines[i].text.empty()) throw ParseError(lines[i].number, "trailing content after orientation string");
  return Tournament::from_bits(n, bits);
}

}  // namespace tsid
