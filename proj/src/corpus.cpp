#include "kg/corpus.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "kg/bracket.hpp"
#include "kg/graphinv.hpp"
#include "kg/parallel.hpp"
#include "kg/spinnet.hpp"
#include "kg/vassiliev.hpp"

namespace kg {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int parse_count(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error("expected " + what + ", got '" + s + "'");
}

struct Ctx {
  std::string path, args;
  Diagram diagram() const { return load_diagram(path); }
};

using Op = std::function<std::string(const Ctx&)>;

std::string z_of(const Diagram& d) { return z_eval(d).to_string(); }

int only_vertex(const Diagram& d) {
  for (int n = 0; n < d.node_count(); ++n)
    if (is_vertex(d.nodes[n])) return n;
  throw Error("no vertex in " + d.name);
}

const std::map<std::string, Op>& ops() {
  static const std::map<std::string, Op> m = {
      {"z_eval", [](const Ctx& c) { return z_of(c.diagram()); }},
      {"p_eval", [](const Ctx& c) { return p_eval(c.diagram()).to_string(); }},
      {"bracket_naive", [](const Ctx& c) { return bracket_naive(c.diagram()).to_string(); }},
      {"z_casimir", [](const Ctx& c) { return eval_with_casimir_marks(c.diagram()).to_string(); }},
      {"z_marked", [](const Ctx& c) { return eval_with_casimir_marks(c.diagram()).to_string(); }},
      {"z_unfold",
       [](const Ctx& c) {
         Diagram d = c.diagram();
         return z_of(replace_vertex(d, only_vertex(d), Replacement::Unfold));
       }},
      {"z_reversed",
       [](const Ctx& c) {
         Diagram d = c.diagram();
         return z_of(replace_vertex(d, only_vertex(d), Replacement::Reversed));
       }},
      {"graph_eval",
       [](const Ctx& c) {
         ResolutionScheme s = ResolutionScheme::vassiliev();
         if (c.args == "casimir") s = ResolutionScheme::casimir_plain();
         else if (c.args != "vassiliev") throw Error("unknown scheme " + c.args);
         return eval_graph(c.diagram(), s).to_string();
       }},
      {"resolve_coeffs",
       [](const Ctx& c) {
         FormalSum s = resolve_vertices(c.diagram(), ResolutionScheme::vassiliev());
         std::string out;
         for (const auto& t : s.terms) out += (out.empty() ? "" : ", ") + t.coeff.to_string();
         return out;
       }},
      {"summary",
       [](const Ctx& c) {
         Diagram d = c.diagram();
         return "components " + std::to_string(components(d)) + ", vertices " + std::to_string(count_vertices(d)) +
                ", writhe " + std::to_string(writhe(d));
       }},
      {"sign", [](const Ctx& c) { return std::to_string(crossing_sign(c.diagram(), parse_count(c.args, "node"))); }},
      {"move_invariance",
       [](const Ctx& c) {
         Diagram d = c.diagram();
         Move m = c.args == "R4" ? Move::R4 : c.args == "R5" ? Move::R5 : c.args == "R3" ? Move::R3 : Move::R2;
         auto sites = find_moves(d, m, false);
         if (sites.empty()) return std::string("no site");
         RationalFunc before = eval_graph(d, ResolutionScheme::vassiliev());
         for (const auto& s : sites)
           if (eval_graph(apply_move(d, s), ResolutionScheme::vassiliev()) != before) return std::string("changed");
         return std::string("invariant");
       }},
      {"fierz_form",
       [](const Ctx& c) {
         Diagram d = c.diagram();
         int v = only_vertex(d);
         if (d.nodes[v] != NodeKind::CVert) throw Error("fierz_form needs a marked vertex");
         Diagram plain = d;
         plain.nodes[v] = NodeKind::Vert;
         RationalFunc rhs = RationalFunc(fierz_unfold_coeff()) * eval_with_casimir_marks(replace_vertex(d, v, Replacement::Unfold)) +
                            RationalFunc(fierz_plain_coeff()) * eval_with_casimir_marks(plain);
         return (eval_with_casimir_marks(d) - rhs).to_string();
       }},
      {"casimir", [](const Ctx& c) { return casimir_decompose(c.diagram()).difference.to_string(); }},
      {"spinor", [](const Ctx& c) { return check_spinor(c.diagram()).residual.to_string(); }},
      {"spinor_case", [](const Ctx& c) { return std::to_string(check_spinor(c.diagram()).case_no); }},
      {"four_term",
       [](const Ctx& c) {
         auto f = [&](const char* w) { return load_diagram(c.path + "/" + w + ".dg"); };
         return check_four_term(f("N"), f("S"), f("E"), f("W")).residual.to_string();
       }},
      {"six_valent",
       [](const Ctx& c) {
         auto f = [&](const char* w) { return load_diagram(c.path + "/" + w + ".dg"); };
         SixValent s = six_valent_eval(f("N"), f("S"), f("E"), f("W"));
         return s.agree ? s.route1.to_string() : "disagree: " + s.route1.to_string() + " vs " + s.route2.to_string();
       }},
      {"vassiliev",
       [](const Ctx& c) { return vassiliev_series(c.diagram(), parse_count(c.args, "order")).series.to_string(); }},
      {"vanishing",
       [](const Ctx& c) {
         Report r = vanishing_order_check(parse_count(c.args, "vertex count"));
         return std::string(r.ok ? "ok " : "failed ") + std::to_string(r.lines.size()) + " graphs";
       }},
      {"prop31",
       [](const Ctx& c) {
         Prop31 p = derive_prop31();
         if (c.args == "a1") return p.a1.to_string();
         if (c.args == "a2") return p.a2.to_string();
         throw Error("prop31 takes a1 or a2");
       }},
      {"constant",
       [](const Ctx& c) {
         static const std::map<std::string, std::function<RationalFunc()>> k = {
             {"C1", vertex_C1}, {"C2", vertex_C2}, {"t", loop_t}};
         auto it = k.find(c.args);
         if (it == k.end()) throw Error("unknown constant " + c.args);
         return it->second().to_string();
       }},
      {"tensor", [](const Ctx& c) { return eval_tensor_diagram(parse_tensor_diagram(read_file(c.path))).to_string(); }},
      {"tensor_spinor",
       [](const Ctx&) { return check_tensor_spinor_identity().lines.back().substr(5); }},
      {"symmetrizer", [](const Ctx& c) { return symmetrizer(parse_count(c.args, "n")).to_string(); }},
      {"antisymmetrizer", [](const Ctx& c) { return antisymmetrizer(parse_count(c.args, "n")).to_string(); }},
      {"fierz",
       [](const Ctx&) {
         FierzCheck f = check_fierz();
         return to_string(f.unfold_coeff) + ", " + to_string(f.plain_coeff);
       }},
  };
  return m;
}

}  // namespace

std::vector<CorpusEntry> parse_manifest(const std::string& text) {
  std::vector<CorpusEntry> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty() || trim(line)[0] == '#') continue;
    std::vector<std::string> f;
    std::size_t start = 0;
    for (;;) {
      auto bar = line.find('|', start);
      f.push_back(trim(line.substr(start, bar == std::string::npos ? std::string::npos : bar - start)));
      if (bar == std::string::npos) break;
      start = bar + 1;
    }
    if (f.size() != 7) throw ParseError(lineno, trim(line).substr(0, 20), "expected 7 fields in manifest line");
    out.push_back({f[0], f[1], f[2], f[3], f[4], f[5], f[6]});
  }
  return out;
}

std::vector<std::string> corpus_ops() {
  std::vector<std::string> out;
  for (const auto& [k, v] : ops()) out.push_back(k);
  return out;
}

std::string run_op(const std::string& dir, const std::string& file, const std::string& op, const std::string& args) {
  auto it = ops().find(op);
  if (it == ops().end()) throw Error("unknown corpus op '" + op + "'");
  Ctx c{file == "-" ? "" : (std::filesystem::path(dir) / file).string(), args};
  return it->second(c);
}

int CorpusReport::passed() const {
  int n = 0;
  for (const auto& r : results) n += r.pass;
  return n;
}

std::string CorpusReport::to_string() const {
  std::string out;
  for (const auto& r : results) {
    const auto& e = r.entry;
    std::string id = e.name + "/" + e.op + (e.args.empty() ? "" : "[" + e.args + "]");
    if (r.pass) out += "PASS " + id + ": " + r.got + "\n";
    else out += "FAIL " + id + ": expected '" + e.expected + "' got '" + r.got + "'\n";
  }
  out += "corpus: " + std::to_string(passed()) + "/" + std::to_string(results.size()) + " passed\n";
  return out;
}

CorpusReport run_corpus(const std::string& dir) {
  auto entries = parse_manifest(read_file((std::filesystem::path(dir) / "manifest.txt").string()));
  CorpusReport rep;
  rep.results.resize(entries.size());
  parallel_for(static_cast<int>(entries.size()), [&](int i) {
    CorpusResult& r = rep.results[i];
    r.entry = entries[i];
    try {
      r.got = run_op(dir, r.entry.file, r.entry.op, r.entry.args);
    } catch (const std::exception& ex) {
      r.got = std::string("error: ") + ex.what();
    }
    r.pass = r.got == r.entry.expected;
  });
  return rep;
}

}  // namespace kg
