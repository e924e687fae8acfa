#include "stz/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace stz {

namespace {
constexpr int kSchemaVersion = 1;

std::string strip(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}
}  // namespace

Origami parse_origami(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int squares = -1;
  std::string hs, vs;
  bool have_h = false, have_v = false;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = strip(line);
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw MalformedSyntax("expected 'key: value' line: " + line);
    std::string key = strip(line.substr(0, colon));
    std::string value = strip(line.substr(colon + 1));
    if (key == "squares") {
      squares = std::stoi(value);
    } else if (key == "h") {
      hs = value;
      have_h = true;
    } else if (key == "v") {
      vs = value;
      have_v = true;
    } else {
      throw MalformedSyntax("unknown key '" + key + "'");
    }
  }
  if (squares < 1 || !have_h || !have_v)
    throw MalformedSyntax("origami file needs squares, h and v entries");
  return Origami(Permutation::parse_cycles(hs, squares), Permutation::parse_cycles(vs, squares));
}

Origami read_origami_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_origami(buf.str());
}

std::string format_origami(const Origami& o) {
  std::string s;
  s += "squares: " + std::to_string(o.squares()) + "\n";
  s += "h: " + o.h().cycle_string() + "\n";
  s += "v: " + o.v().cycle_string() + "\n";
  return s;
}

std::string orbit_to_dot(const OrbitGraph& g) {
  std::ostringstream out;
  out << "digraph orbit {\n";
  for (size_t i = 0; i < g.nodes.size(); ++i)
    out << "  n" << i << " [label=\"" << i << (static_cast<int>(i) == g.base_index ? "*" : "")
        << "\"];\n";
  for (size_t i = 0; i < g.nodes.size(); ++i)
    out << "  n" << i << " -> n" << g.t_edges[i] << " [style=solid, label=\"T\"];\n";
  for (size_t i = 0; i < g.nodes.size(); ++i)
    out << "  n" << i << " -> n" << g.s_edges[i] << " [style=dashed, label=\"S\"];\n";
  out << "}\n";
  return out.str();
}

std::string orbit_to_json(const OrbitGraph& g) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["base_index"] = g.base_index;
  j["t_edges"] = g.t_edges;
  j["s_edges"] = g.s_edges;
  nlohmann::json nodes = nlohmann::json::array();
  for (const Origami& node : g.nodes) {
    nodes.push_back({{"squares", node.squares()},
                     {"h", node.h().cycle_string()},
                     {"v", node.v().cycle_string()}});
  }
  j["nodes"] = std::move(nodes);
  return j.dump(2);
}

std::string matrix_to_json(const IntMat& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return rows.dump();
}

}  // namespace stz
