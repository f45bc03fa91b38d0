// One line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "kg/bracket.hpp"
#include "kg/cli.hpp"
#include "kg/graphinv.hpp"
#include "kg/spinnet.hpp"
#include "kg/vassiliev.hpp"
#include "support.hpp"

using namespace kg;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
  void require(bool c, const std::string& what) {
    if (!c) {
      ok = false;
      note += (note.empty() ? "" : "; ") + what;
    }
  }
};

const RationalFunc t = RationalFunc(A(2) + A(-2));

std::vector<std::string> names_with(std::function<bool(const Diagram&)> pred) {
  std::vector<std::string> out;
  for (const auto& n : named_diagram_names())
    if (pred(named_diagram(n))) out.push_back(n);
  return out;
}

bool has_marked(const Diagram& d) {
  for (auto k : d.nodes)
    if (k == NodeKind::CVert) return true;
  return false;
}

Outcome reference_values() {
  Outcome o;
  RationalFunc ref = RationalFunc(z_eval(named_diagram("two-circles")));
  o.require(ref == t, "two circles");
  o.require(eval_with_casimir_marks(named_diagram("G_a_vertex")) == (t - 1) * ref, "G_a loop");
  o.require(z_eval(named_diagram("G_b_pos")) == A(4) + A(-4), "G_b positive");
  o.require(z_eval(named_diagram("G_b_neg")) == A(2) + A(-2), "G_b negative");
  Diagram gb = named_diagram("G_b_vertex");
  o.require(eval_with_casimir_marks(gb) == RationalFunc(A(3) + A(-3)), "G_b vertex");
  o.require(z_eval(replace_vertex(gb, 0, Replacement::Unfold)) == A(3), "G_b unfold");
  return o;
}

Outcome relation_suite() {
  Outcome o;
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 200; ++i) {
    Diagram d = kgtest::random_braid(rng, 4, 7);
    int x = std::uniform_int_distribution<int>(0, d.node_count() - 1)(rng);
    Diagram plus = d, minus = d, v = d;
    v.nodes[x] = NodeKind::Vert;
    plus = replace_vertex(v, x, Replacement::Pos);
    minus = replace_vertex(v, x, Replacement::Neg);
    LaurentPoly z0 = z_eval(replace_vertex(v, x, Replacement::Unfold));
    o.require(A(1) * z_eval(plus) - A(-1) * z_eval(minus) == (A(2) - A(-2)) * z0, "skein");
    LaurentPoly z = z_eval(d);
    auto r1p = find_moves(d, Move::R1Pos, false), r1n = find_moves(d, Move::R1Neg, false);
    std::uniform_int_distribution<std::size_t> pick(0, r1p.size() - 1);
    o.require(z_eval(apply_move(d, r1p[pick(rng)])) == A(3) * z, "positive kink");
    o.require(z_eval(apply_move(d, r1n[pick(rng)])) == A(-3) * z, "negative kink");
    Diagram c = d;
    ++c.free_loops;
    o.require(z_eval(c) == (A(2) + A(-2)) * z, "circle");
  }
  return o;
}

Outcome move_invariance() {
  Outcome o;
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Diagram d = kgtest::random_braid(rng, 4, 6);
    o.require(check_reidemeister(d, 1, 3, rng()).ok, "p_eval trial " + std::to_string(i));
  }
  for (int i = 0; i < 200; ++i) {
    Diagram g = kgtest::random_braid(rng, 3, 4, 1 + i % 2);
    o.require(check_reidemeister(g, 1, 3, rng()).ok, "eval_graph trial " + std::to_string(i));
  }
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  int n = 0;
  for (const auto& name : names_with([](const Diagram& d) { return count_vertices(d) == 0 && count_crossings(d) <= 8; })) {
    Diagram d = named_diagram(name);
    o.require(z_eval(d) == bracket_naive(d), name);
    ++n;
  }
  o.note += (o.note.empty() ? "" : "; ") + std::to_string(n) + " diagrams";
  return o;
}

Outcome prop31() {
  Outcome o;
  Prop31 p = derive_prop31();
  o.require(p.a1 == RationalFunc(2) * (t - 2), "a1");
  RationalFunc coef = RationalFunc(A(4) + A(-4)) / (t - 1) - RationalFunc(Rational(1, 4)) * (t + 1) / (t - 1) * p.a1;
  o.require(p.a2 == coef, "a2");
  o.require(p.report.ok, "report");
  return o;
}

Outcome spinor() {
  Outcome o;
  bool c1 = false, c2 = false;
  for (const auto& name : names_with([](const Diagram& d) { return count_vertices(d) == 1 || count_vertices(d) == 2; })) {
    Diagram d = named_diagram(name);
    for (int v = 0; v < d.node_count(); ++v) {
      if (d.nodes[v] != NodeKind::Vert) continue;
      SpinorCheck s = check_spinor(d, v);
      o.require(s.residual.is_zero(), name);
      c1 = c1 || s.case_no == 1;
      c2 = c2 || s.case_no == 2;
    }
  }
  o.require(c1 && c2, "both cases");
  return o;
}

Outcome casimir() {
  Outcome o;
  for (const auto& name :
       names_with([](const Diagram& d) { return count_vertices(d) == 1 && !has_marked(d); })) {
    CasimirDecomposition c = casimir_decompose(named_diagram(name));
    o.require(c.report.ok, name);
  }
  return o;
}

Outcome four_term() {
  Outcome o;
  for (int q = 1; q <= 5; ++q) {
    std::string b = "ft-quad-" + std::to_string(q) + "/";
    Diagram n = named_diagram(b + "N"), s = named_diagram(b + "S"), e = named_diagram(b + "E"), w = named_diagram(b + "W");
    o.require(check_four_term(n, s, e, w).residual.is_zero(), b + " four-term");
    o.require(six_valent_eval(n, s, e, w).agree, b + " six-valent");
  }
  return o;
}

Outcome vanishing() {
  Outcome o;
  for (int j = 1; j <= 3; ++j) o.require(vanishing_order_check(j).ok, "order " + std::to_string(j));
  Report r = classical_value_check();
  int bad = 0;
  for (const auto& l : r.lines) bad += l.rfind("FAIL", 0) == 0;
  o.require(r.ok, "h^0 = 1 fails on " + std::to_string(bad) + " multi-component links (value 2^(c-1))");
  return o;
}

Outcome tensors() {
  Outcome o;
  o.require(check_tensor_spinor_identity().ok, "spinor identity");
  FierzCheck f = check_fierz();
  o.require(f.report.ok, "fierz");
  o.require(f.unfold_coeff == Rational(1, 2) && f.plain_coeff == Rational(-1, 4), "coefficients");
  o.require(is_zero_on_dim2(antisymmetrizer(3)), "antisymmetrizer(3)");
  for (int n = 1; n <= 4; ++n) o.require(check_projector(n).ok, "projector " + std::to_string(n));
  return o;
}

Outcome determinism() {
  Outcome o;
  const std::string dir = KG_CORPUS_DIR;
  std::vector<std::vector<std::string>> cmds = {{"corpus", "--dir", dir}};
  for (const auto& n : named_diagram_names()) {
    Diagram d = named_diagram(n);
    if (n.find('/') != std::string::npos) continue;
    std::string f = dir + "/" + n + ".dg";
    if (count_vertices(d) == 0) cmds.push_back({"eval", f});
    else if (!has_marked(d)) cmds.push_back({"resolve", f});
    else cmds.push_back({"graph-eval", f, "--scheme", "casimir"});
  }
  for (const auto& c : cmds) {
    std::string first;
    for (int threads : {1, 2, 4, 1}) {
      std::vector<std::string> args = {"--threads", std::to_string(threads)};
      args.insert(args.end(), c.begin(), c.end());
      std::ostringstream out, err;
      int code = run_cli(args, out, err);
      std::string all = std::to_string(code) + out.str() + err.str();
      if (first.empty()) first = all;
      else if (all != first) o.require(false, c[0] + " " + c[1]);
    }
  }
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"reference values", reference_values},
      {"skein, kink and circle relations", relation_suite},
      {"move invariance", move_invariance},
      {"contraction matches state sum", oracle_equivalence},
      {"a1 and a2", prop31},
      {"spinor identity", spinor},
      {"casimir insertion", casimir},
      {"four-term and 6-valent", four_term},
      {"vassiliev vanishing", vanishing},
      {"tensor identities", tensors},
      {"determinism", determinism},
  };
  bool all = true;
  int k = 0;
  for (const auto& [name, run] : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    all = all && o.ok;
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << "criterion " << ++k << " " << (o.ok ? "PASS" : "FAIL") << " " << name << " (" << secs << " s)";
    if (!o.note.empty()) line << ": " << o.note;
    std::cout << line.str() << std::endl;
  }
  return all ? 0 : 1;
}
