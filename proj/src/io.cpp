#include "stight/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <vector>

#include "stight/errors.hpp"

namespace stight {
namespace {

bool parse_count(const std::string& token, std::size_t& value) {
  if (token.empty() || token.size() > 9) return false;
  value = 0;
  for (char c : token) {
    if (c < '0' || c > '9') return false;
    value = value * 10 + static_cast<std::size_t>(c - '0');
  }
  return true;
}

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

void write_edge_list(std::ostream& os, const Digraph& d) {
  os << d.order() << '\n';
  for (const Arc& a : d.arcs()) os << a.from << ' ' << a.to << '\n';
}

std::string to_edge_list(const Digraph& d) {
  std::ostringstream os;
  write_edge_list(os, d);
  return os.str();
}

Digraph read_digraph(std::istream& is) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t n = 0;
  bool have_header = false;
  std::vector<Arc> arcs;
  std::set<Arc> seen;
  while (std::getline(is, line)) {
    ++line_no;
    if (blank(line)) continue;
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (!have_header) {
      if (tokens.size() != 1 || !parse_count(tokens[0], n))
        throw InputError(where + "expected vertex count");
      have_header = true;
      continue;
    }
    std::size_t u = 0, v = 0;
    if (tokens.size() != 2 || !parse_count(tokens[0], u) || !parse_count(tokens[1], v))
      throw InputError(where + "expected 'u v'");
    if (u >= n || v >= n) throw InputError(where + "vertex out of range");
    if (u == v) throw InputError(where + "self-loop");
    const Arc a{static_cast<Vertex>(u), static_cast<Vertex>(v)};
    if (!seen.insert(a).second) throw InputError(where + "duplicate arc");
    arcs.push_back(a);
  }
  if (!have_header) throw InputError("empty edge list");
  return Digraph(n, arcs);
}

Digraph parse_digraph(std::string_view text) {
  std::istringstream is{std::string(text)};
  return read_digraph(is);
}

Orientation read_orientation(std::istream& is) {
  return Orientation(read_digraph(is));
}

Orientation parse_orientation(std::string_view text) {
  return Orientation(parse_digraph(text));
}

Orientation load_orientation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return read_orientation(in);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

void save_edge_list(const std::string& path, const Digraph& d) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  write_edge_list(out, d);
}

void write_dot(std::ostream& os, const Digraph& d, std::string_view name) {
  os << "digraph " << name << " {\n";
  for (Vertex v = 0; v < d.order(); ++v) os << "  " << v << ";\n";
  for (const Arc& a : d.arcs()) os << "  " << a.from << " -> " << a.to << ";\n";
  os << "}\n";
}

std::string to_dot(const Digraph& d, std::string_view name) {
  std::ostringstream os;
  write_dot(os, d, name);
  return os.str();
}

}  // namespace stight
