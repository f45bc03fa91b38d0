#include "kg/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "kg/bracket.hpp"
#include "kg/corpus.hpp"
#include "kg/graphinv.hpp"
#include "kg/parallel.hpp"
#include "kg/spinnet.hpp"
#include "kg/vassiliev.hpp"

namespace kg {

namespace {

int max_crossings() {
  const char* env = std::getenv("MAX_CROSSINGS");
  if (!env || !*env) return 20;
  try {
    return std::stoi(env);
  } catch (const std::exception&) {
    throw Error(std::string("MAX_CROSSINGS is not a number: ") + env);
  }
}

Diagram load_capped(const std::string& path) {
  Diagram d = load_diagram(path);
  require_valid(d);
  int n = d.node_count(), cap = max_crossings();
  if (n > cap)
    throw Error(path + " has " + std::to_string(n) + " nodes; MAX_CROSSINGS is " + std::to_string(cap));
  return d;
}

bool has_marked(const Diagram& d) {
  return std::any_of(d.nodes.begin(), d.nodes.end(), [](NodeKind k) { return k == NodeKind::CVert; });
}

ResolutionScheme parse_scheme(const std::string& s) {
  if (s == "vassiliev") return ResolutionScheme::vassiliev();
  if (s == "casimir") return ResolutionScheme::casimir_plain();
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string p;
  while (std::getline(ss, p, ',')) parts.push_back(p);
  if (parts.size() != 3) throw Error("scheme must be vassiliev, casimir or a,b,c; got '" + s + "'");
  return {parse_rational_func(parts[0]), parse_rational_func(parts[1]), parse_rational_func(parts[2])};
}

Level parse_level(const std::string& s) {
  if (s == "P") return Level::P;
  if (s == "Z") return Level::Z;
  throw Error("level must be P or Z");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kauffman bracket and rigid-vertex graph invariants", "kg"};
  app.require_subcommand(1);
  int threads = 1;
  app.add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

  std::string file, scheme = "vassiliev", level = "P", what, dir = "corpus";
  int order = 4, trials = 20, steps = 3, n = 0;
  std::uint64_t seed = 1;
  bool raw = false;

  auto* eval = app.add_subcommand("eval", "Z of a link diagram");
  eval->add_option("file", file)->required();
  auto* jones = app.add_subcommand("jones", "P of a link diagram");
  jones->add_option("file", file)->required();
  auto* graph = app.add_subcommand("graph-eval", "graph invariant");
  graph->add_option("file", file)->required();
  graph->add_option("--scheme", scheme, "vassiliev | casimir | a,b,c");
  graph->add_option("--level", level, "P or Z");
  auto* resolve = app.add_subcommand("resolve", "vertex resolution as a formal sum");
  resolve->add_option("file", file)->required();
  resolve->add_option("--scheme", scheme, "vassiliev | casimir | a,b,c");
  resolve->add_flag("--raw", raw, "do not merge equal diagrams");
  auto* vass = app.add_subcommand("vassiliev", "series in h with A = exp(h)");
  vass->add_option("file", file)->required();
  vass->add_option("--order", order)->check(CLI::NonNegativeNumber);
  auto* check = app.add_subcommand("check", "run a verification");
  check->add_option("what", what)->required()->check(
      CLI::IsMember({"spinor", "four-term", "fierz", "projector", "reidemeister"}));
  check->add_option("file", file);
  check->add_option("--n", n, "projector size (default 1..4)");
  check->add_option("--trials", trials);
  check->add_option("--steps", steps);
  check->add_option("--seed", seed);
  auto* corpus = app.add_subcommand("corpus", "run the corpus manifest");
  corpus->add_option("--dir", dir);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }
  set_thread_count(threads);

  auto need_file = [&] {
    if (file.empty()) throw Error("check " + what + " needs a path");
  };
  try {
    if (*eval) {
      out << z_eval(load_capped(file)).to_string() << "\n";
    } else if (*jones) {
      out << p_eval(load_capped(file)).to_string() << "\n";
    } else if (*graph) {
      Diagram d = load_capped(file);
      Level lv = parse_level(level);
      if (has_marked(d)) {
        if (scheme != "casimir") throw Error("marked vertices need --scheme casimir");
        out << eval_with_casimir_marks(d, lv == Level::P).to_string() << "\n";
      } else {
        out << eval_graph(d, parse_scheme(scheme), lv).to_string() << "\n";
      }
    } else if (*resolve) {
      FormalSum s = resolve_vertices(load_capped(file), parse_scheme(scheme));
      out << to_string(raw ? s : collect(s));
    } else if (*vass) {
      out << vassiliev_series(load_capped(file), order).to_string();
    } else if (*check) {
      Report r;
      if (what == "spinor") {
        need_file();
        r = check_spinor(load_capped(file)).report;
      } else if (what == "four-term") {
        need_file();
        namespace fs = std::filesystem;
        auto part = [&](const char* w) { return load_capped((fs::path(file) / (std::string(w) + ".dg")).string()); };
        FourTerm f = check_four_term(part("N"), part("S"), part("E"), part("W"));
        out << "residual: " << f.residual.to_string() << "\n";
        return f.residual.is_zero() ? 0 : 1;
      } else if (what == "fierz") {
        r = check_fierz().report;
      } else if (what == "projector") {
        r.name = "projectors";
        for (int k = n ? n : 1; k <= (n ? n : 4); ++k) {
          Report p = check_projector(k);
          for (const auto& l : p.lines) r.lines.push_back(std::to_string(k) + ": " + l);
          r.ok = r.ok && p.ok;
        }
      } else {
        need_file();
        r = check_reidemeister(load_capped(file), trials, steps, seed);
      }
      out << r.to_string();
      return r.ok ? 0 : 1;
    } else if (*corpus) {
      CorpusReport rep = run_corpus(dir);
      out << rep.to_string();
      return rep.ok() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace kg
