#include "ktdom/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include "ktdom/errors.hpp"

namespace ktdom {

std::string serialize_instance(const Graph& g, int k) {
  std::string out = "ktree-instance v1\n";
  out += "k " + std::to_string(k) + "\n";
  out += "n " + std::to_string(g.vertex_count()) + "\n";
  out += "m " + std::to_string(g.edge_count()) + "\n";
  for (int u = 0; u < g.vertex_count(); ++u) {
    for (int v : g.neighbors(u)) {
      if (v > u) {
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
      }
    }
  }
  return out;
}

namespace {

// Whole-token decimal parse; rejects signs, blanks, and stray characters.
bool parse_number(std::string_view tok, long long& out) {
  if (tok.empty()) return false;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

long long expect_numbered_line(std::istream& in, std::string_view key, int lineno) {
  std::string line;
  if (!std::getline(in, line)) {
    throw ParseError("line " + std::to_string(lineno) + ": expected \"" + std::string(key) +
                     " <value>\", got end of input");
  }
  const std::string prefix = std::string(key) + " ";
  long long value = 0;
  if (line.rfind(prefix, 0) != 0 || !parse_number(std::string_view(line).substr(prefix.size()), value) ||
      value < 0) {
    throw ParseError("line " + std::to_string(lineno) + ": expected \"" + std::string(key) +
                     " <value>\", got \"" + line + "\"");
  }
  return value;
}

}  // namespace

Instance parse_instance(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "ktree-instance v1") {
    throw ParseError("line 1: expected header \"ktree-instance v1\"");
  }
  const long long k = expect_numbered_line(in, "k", 2);
  if (k < 1) throw ParseError("line 2: k must be at least 1");
  const long long n = expect_numbered_line(in, "n", 3);
  if (n > 100'000'000) throw ParseError("line 3: vertex count too large");
  const long long m = expect_numbered_line(in, "m", 4);

  Instance inst;
  inst.k = static_cast<int>(k);
  inst.graph = Graph(static_cast<int>(n));

  long long prev_u = -1, prev_v = -1;
  for (long long i = 0; i < m; ++i) {
    const int lineno = static_cast<int>(i) + 5;
    if (!std::getline(in, line)) {
      throw ParseError("line " + std::to_string(lineno) + ": expected " + std::to_string(m) +
                       " edge lines, got " + std::to_string(i));
    }
    const std::size_t space = line.find(' ');
    long long u = 0, v = 0;
    if (space == std::string::npos ||
        !parse_number(std::string_view(line).substr(0, space), u) ||
        !parse_number(std::string_view(line).substr(space + 1), v)) {
      throw ParseError("line " + std::to_string(lineno) + ": malformed edge \"" + line + "\"");
    }
    if (u >= v) {
      throw ParseError("line " + std::to_string(lineno) + ": edges must satisfy u < v");
    }
    if (v >= n) {
      throw ParseError("line " + std::to_string(lineno) + ": vertex id " + std::to_string(v) +
                       " outside [0, " + std::to_string(n) + ")");
    }
    if (u < prev_u || (u == prev_u && v <= prev_v)) {
      throw ParseError("line " + std::to_string(lineno) +
                       ": edges must be in ascending lexicographic order without duplicates");
    }
    inst.graph.add_edge(static_cast<int>(u), static_cast<int>(v));
    prev_u = u;
    prev_v = v;
  }
  if (std::getline(in, line)) {
    throw ParseError("trailing content after " + std::to_string(m) + " edge lines: \"" + line + "\"");
  }
  return inst;
}

Instance parse_instance(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open \"" + path + "\" for reading");
  return parse_instance(in);
}

void save_instance(const std::string& path, const Graph& g, int k) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open \"" + path + "\" for writing");
  out << serialize_instance(g, k);
  if (!out) throw std::runtime_error("failed writing \"" + path + "\"");
}

}  // namespace ktdom
