#include <fstream>
#include <map>
#include <sstream>

#include "kg/diagram.hpp"

namespace kg {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

NodeKind parse_kind(int line, const std::string& t) {
  if (t == "XPos") return NodeKind::XPos;
  if (t == "XNeg") return NodeKind::XNeg;
  if (t == "Vert") return NodeKind::Vert;
  if (t == "CVert") return NodeKind::CVert;
  throw ParseError(line, t, "unknown node kind");
}

int parse_int(int line, const std::string& t, const std::string& what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(t, &used);
    if (used == t.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError(line, t, "expected " + what);
}

}  // namespace

Diagram parse_diagram(const std::string& text) {
  struct Pending {
    int line;
    std::string from, to;
  };
  Diagram d;
  std::map<std::string, int> ids;
  std::vector<Pending> arcs;
  bool header = false;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    auto tok = split_ws(raw);
    if (tok.empty()) continue;
    const std::string& kw = tok[0];
    if (kw == "diagram") {
      if (tok.size() != 2) throw ParseError(lineno, kw, "expected 'diagram <name>' at");
      if (header) throw ParseError(lineno, kw, "second header");
      header = true;
      d.name = tok[1];
    } else if (kw == "node") {
      if (tok.size() != 3) throw ParseError(lineno, kw, "expected 'node <id> <kind>' at");
      if (ids.count(tok[1])) throw ParseError(lineno, tok[1], "duplicate node id");
      NodeKind k = parse_kind(lineno, tok[2]);
      ids[tok[1]] = d.node_count();
      d.nodes.push_back(k);
    } else if (kw == "arc") {
      if (tok.size() != 4 || tok[2] != "->") throw ParseError(lineno, kw, "expected 'arc <n>.<p> -> <n>.<p>' at");
      arcs.push_back({lineno, tok[1], tok[3]});
    } else if (kw == "loop") {
      if (tok.size() != 2) throw ParseError(lineno, kw, "expected 'loop <count>' at");
      int n = parse_int(lineno, tok[1], "loop count");
      if (n < 0) throw ParseError(lineno, tok[1], "negative loop count");
      d.free_loops += n;
    } else {
      throw ParseError(lineno, kw, "unknown keyword");
    }
  }
  if (!header) throw ParseError(lineno, "", "missing 'diagram <name>' header");
  auto endpoint = [&](int line, const std::string& t) {
    auto dot = t.rfind('.');
    if (dot == std::string::npos) throw ParseError(line, t, "expected <node>.<port>, got");
    auto it = ids.find(t.substr(0, dot));
    if (it == ids.end()) throw ParseError(line, t, "undefined node in arc endpoint");
    int slot = parse_int(line, t.substr(dot + 1), "port number");
    if (slot < 0 || slot > 3) throw ParseError(line, t, "port out of range 0..3 in");
    return Port{it->second, slot};
  };
  for (const auto& p : arcs) d.arcs.push_back({endpoint(p.line, p.from), endpoint(p.line, p.to)});
  return d;
}

std::string serialize(const Diagram& d) {
  std::ostringstream out;
  out << "diagram " << (d.name.empty() ? "unnamed" : d.name) << "\n";
  for (int i = 0; i < d.node_count(); ++i) out << "node " << i << " " << kind_name(d.nodes[i]) << "\n";
  for (const auto& a : d.arcs)
    out << "arc " << a.from.node << "." << a.from.slot << " -> " << a.to.node << "." << a.to.slot << "\n";
  if (d.free_loops > 0) out << "loop " << d.free_loops << "\n";
  return out.str();
}

Diagram load_diagram(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_diagram(ss.str());
}

}  // namespace kg
