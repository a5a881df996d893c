// Command-line front end. Exit codes: 0 success, 1 property violation,
// 2 usage or input error, 3 feasibility cap.

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "tubelat/cycle_lattice.hpp"
#include "tubelat/error.hpp"
#include "tubelat/forcing.hpp"
#include "tubelat/io.hpp"
#include "tubelat/irreducibles.hpp"
#include "tubelat/poset.hpp"
#include "tubelat/verify.hpp"

using namespace tubelat;

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

// Largest n enumerate and the poset commands accept without --force.
int enumerate_cap(GraphKind kind) { return kind == GraphKind::path ? 12 : 9; }
int poset_cap(GraphKind kind) { return kind == GraphKind::path ? 9 : 7; }

void check_cap(int n, int cap, bool force, const std::string& what) {
  if (n > cap && !force)
    throw CapExceeded(what + " is capped at n = " + std::to_string(cap) + "; pass --force to override");
}

void print(const Tubing& t) { std::cout << tubing_to_string(t) << '\n'; }

bool is_cycle(const Tubing& t) { return t.graph().kind() == GraphKind::cycle; }

void require_same_graph(const Tubing& a, const Tubing& b) {
  if (!(a.graph() == b.graph())) throw InvalidInput("tubings live on different graphs");
}

Tubing join_any(const Tubing& a, const Tubing& b, bool meet) {
  require_same_graph(a, b);
  if (is_cycle(a)) return meet ? meet_cycle(a, b) : join_cycle(a, b);
  if (a.graph().kind() == GraphKind::path) return meet ? meet_path(a, b) : join_path(a, b);
  throw InvalidInput("join and meet support path and cycle graphs");
}

bool leq_any(const Tubing& a, const Tubing& b) {
  require_same_graph(a, b);
  if (is_cycle(a)) return leq_cycle(a, b);
  if (a.graph().kind() == GraphKind::path) return leq_path(a, b);
  throw InvalidInput("order supports path and cycle graphs");
}

struct Options {
  std::string graph = "cycle";
  int n = 0;
  std::string format;
  std::string a, b, base, word, input, selector = "all";
  int i = 0, k = 0;
  bool force = false, labels = false, words = false;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximal tubings of graphs, the cycle lattice, and its verification suites"};
  app.require_subcommand(1);
  Options o;
  std::map<std::string, GraphKind> kinds{
      {"path", GraphKind::path}, {"cycle", GraphKind::cycle}, {"complete", GraphKind::complete}};

  auto graph_opts = [&](CLI::App* c) {
    c->add_option("--graph", o.graph, "path, cycle or complete")->check(CLI::IsMember({"path", "cycle", "complete"}));
    c->add_option("--n", o.n, "number of vertices")->required();
    c->add_flag("--force", o.force, "ignore the feasibility cap");
  };

  auto* enumerate = app.add_subcommand("enumerate", "list maximal tubings in canonical order");
  graph_opts(enumerate);
  o.format = "json";
  enumerate->add_option("--format", o.format, "count or json")->check(CLI::IsMember({"count", "json"}));

  auto* order = app.add_subcommand("order", "compare two tubings");
  order->add_option("--j", o.a, "first tubing file")->required();
  order->add_option("--k", o.b, "second tubing file")->required();

  auto* join = app.add_subcommand("join", "join of two tubings");
  auto* meet = app.add_subcommand("meet", "meet of two tubings");
  for (auto* c : {join, meet}) {
    c->add_option("--a", o.a, "tubing file")->required();
    c->add_option("--b", o.b, "tubing file")->required();
  }

  auto* cut_cmd = app.add_subcommand("cut", "cut a cycle tubing to the path");
  cut_cmd->add_option("--j", o.a, "cycle tubing file")->required();

  auto* sew_cmd = app.add_subcommand("sew", "sew a path tubing along a shuffle word");
  sew_cmd->add_option("--base", o.base, "path tubing file")->required();
  sew_cmd->add_option("--word", o.word, "shuffle word, e.g. 9137 or 9,1,3,7")->required();

  auto* fiber_cmd = app.add_subcommand("fiber", "all cycle tubings that cut to a path tubing");
  fiber_cmd->add_option("--base", o.base, "path tubing file")->required();
  fiber_cmd->add_flag("--words", o.words, "print shuffle words instead of tubings");

  auto* lift_cmd = app.add_subcommand("lift", "least tubing above j in the fiber of x");
  lift_cmd->add_option("--j", o.a, "cycle tubing file")->required();
  lift_cmd->add_option("--x", o.b, "path tubing file with cut(j) <= x")->required();

  auto* gtree_cmd = app.add_subcommand("gtree", "convert between tubings and G-trees");
  gtree_cmd->add_option("--in", o.input, "tubing or G-tree JSON file")->required();
  gtree_cmd->add_option("--graph", o.graph, "graph of a G-tree input")->check(CLI::IsMember({"path", "cycle", "complete"}));
  o.format = "json";
  gtree_cmd->add_option("--format", o.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));

  auto* ji_cmd = app.add_subcommand("ji", "the canonical join irreducible j_{i,k} of the cycle");
  auto* kappa_cmd = app.add_subcommand("kappa", "kappa of the join irreducible J_{i,k}");
  for (auto* c : {ji_cmd, kappa_cmd}) {
    c->add_option("--n", o.n, "number of vertices")->required();
    c->add_option("--i", o.i, "chain index")->required();
    c->add_option("--k", o.k, "height")->required();
  }
  ji_cmd->add_option("--format", o.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));

  auto* forcing_cmd = app.add_subcommand("forcing", "factorization and forcing relations as JSON");
  forcing_cmd->add_option("--n", o.n, "number of vertices")->required();

  auto* hasse_cmd = app.add_subcommand("hasse", "Hasse diagram as DOT");
  graph_opts(hasse_cmd);
  hasse_cmd->add_flag("--labels", o.labels, "label nodes with serialized tubings");

  auto* mobius_cmd = app.add_subcommand("mobius", "nonzero Mobius values as CSV");
  graph_opts(mobius_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite on the cycle");
  verify_cmd->add_option("--selector", o.selector, "suite name")->check(CLI::IsMember(verify_selectors()));
  verify_cmd->add_option("--n", o.n, "number of vertices")->required();
  verify_cmd->add_flag("--force", o.force, "ignore the feasibility cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    GraphKind kind = kinds.at(o.graph);
    if (*enumerate) {
      check_cap(o.n, enumerate_cap(kind), o.force, "enumerate");
      Graph g = make_graph(kind, o.n);
      auto all = enumerate_maximal_tubings(g);
      if (o.format == "count") {
        std::cout << all.size() << '\n';
      } else {
        for (const Tubing& t : all) print(t);
      }
    } else if (*order) {
      Tubing j = read_tubing_file(o.a), k = read_tubing_file(o.b);
      Json out;
      out["leq"] = leq_any(j, k);
      out["geq"] = leq_any(k, j);
      std::cout << out.dump() << '\n';
    } else if (*join || *meet) {
      print(join_any(read_tubing_file(o.a), read_tubing_file(o.b), meet->parsed()));
    } else if (*cut_cmd) {
      print(cut(read_tubing_file(o.a)));
    } else if (*sew_cmd) {
      Tubing base = read_tubing_file(o.base);
      print(sew(base, ShuffleWord::parse(base, o.word)));
    } else if (*fiber_cmd) {
      Tubing base = read_tubing_file(o.base);
      for (const ShuffleWord& w : shuffle_words(base)) {
        if (o.words)
          std::cout << w.to_string() << '\n';
        else
          print(sew(base, w));
      }
    } else if (*lift_cmd) {
      print(lift(read_tubing_file(o.a), read_tubing_file(o.b)));
    } else if (*gtree_cmd) {
      Json in = read_json_file(o.input);
      if (in.contains("tubes")) {
        GTree tree = gtree_of(tubing_from_json(in));
        std::cout << (o.format == "dot" ? gtree_to_dot(tree) : gtree_to_json(tree).dump() + "\n");
      } else {
        GTree tree = gtree_from_json(in);
        print(tubing_of(make_graph(kind, tree.n()), tree));
      }
    } else if (*ji_cmd) {
      GTree tree = canonical_ji(o.n, o.i, o.k);
      if (o.format == "dot") {
        std::cout << gtree_to_dot(tree);
      } else {
        Json out;
        out["i"] = o.i;
        out["k"] = o.k;
        out["tree"] = gtree_to_json(tree);
        out["tubing"] = tubing_to_json(ji_tubing(o.n, o.i, o.k));
        std::cout << out.dump() << '\n';
      }
    } else if (*kappa_cmd) {
      MiIndex m = kappa(o.n, o.i, o.k);
      Json out;
      out["j"] = {o.i, o.k};
      out["kappa"] = {m.i, m.k};
      out["tubing"] = tubing_to_json(mi_tubing(o.n, m.i, m.k));
      std::cout << out.dump() << '\n';
    } else if (*forcing_cmd) {
      std::cout << forcing_to_json(forcing_system(o.n)).dump() << '\n';
    } else if (*hasse_cmd || *mobius_cmd) {
      check_cap(o.n, poset_cap(kind), o.force, *hasse_cmd ? "hasse" : "mobius");
      TubingPoset tp = build_poset(make_graph(kind, o.n));
      std::cout << (*hasse_cmd ? hasse_to_dot(tp.poset, o.labels) : mobius_to_csv(mobius(tp.poset)));
    } else if (*verify_cmd) {
      VerifyResult r = run_verify(o.selector, o.n, o.force);
      for (const std::string& line : r.report) std::cout << line << '\n';
      if (!r.ok) {
        std::cout << "FAIL\n";
        std::cerr << r.counterexample.dump() << '\n';
        return kExitViolation;
      }
      std::cout << "PASS\n";
    }
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return 0;
}
