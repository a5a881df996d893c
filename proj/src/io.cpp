#include "tubelat/io.hpp"

#include <fstream>
#include <sstream>

#include "tubelat/error.hpp"

namespace tubelat {

namespace {

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InvalidInput(std::string("expected an integer for ") + what);
  return j.get<int>();
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field: ") + key);
  return j.at(key);
}

}  // namespace

Json graph_to_json(const Graph& g) {
  Json j;
  j["kind"] = to_string(g.kind());
  j["n"] = g.n();
  if (g.kind() == GraphKind::custom) {
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = edges;
  }
  return j;
}

Graph graph_from_json(const Json& j) {
  if (!field(j, "kind").is_string()) throw InvalidInput("graph kind must be a string");
  GraphKind kind = parse_graph_kind(j.at("kind").get<std::string>());
  int n = as_int(field(j, "n"), "n");
  if (kind != GraphKind::custom) return make_graph(kind, n);
  std::vector<std::pair<int, int>> edges;
  for (const Json& e : field(j, "edges")) {
    if (!e.is_array() || e.size() != 2) throw InvalidInput("edges are pairs of vertices");
    edges.emplace_back(as_int(e[0], "edge"), as_int(e[1], "edge"));
  }
  return Graph::from_edges(n, edges);
}

Json tubing_to_json(const Tubing& t) {
  Json j;
  j["graph"] = graph_to_json(t.graph());
  Json tubes = Json::array();
  for (Mask tube : t.tubes()) tubes.push_back(vertices_of(tube));
  j["tubes"] = tubes;
  return j;
}

Tubing tubing_from_json(const Json& j) {
  Graph g = graph_from_json(field(j, "graph"));
  std::vector<Mask> tubes;
  const Json& list = field(j, "tubes");
  if (!list.is_array()) throw InvalidInput("tubes must be an array");
  for (const Json& tube : list) {
    if (!tube.is_array() || tube.empty()) throw InvalidInput("each tube is a nonempty array");
    Mask m = 0;
    for (const Json& v : tube) {
      int x = as_int(v, "vertex");
      if (x < 1 || x > g.n()) throw InvalidInput("vertex out of range: " + std::to_string(x));
      m |= bit(x);
    }
    tubes.push_back(m);
  }
  return Tubing(g, tubes);
}

std::string tubing_to_string(const Tubing& t) { return tubing_to_json(t).dump(); }

Tubing parse_tubing(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("invalid JSON: ") + e.what());
  }
  return tubing_from_json(j);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

Tubing read_tubing_file(const std::string& path) { return tubing_from_json(read_json_file(path)); }

Json gtree_to_json(const GTree& tree) {
  Json j;
  j["n"] = tree.n();
  j["root"] = tree.root();
  Json parent = Json::object();
  for (int v = 1; v <= tree.n(); ++v)
    if (tree.parent(v)) parent[std::to_string(v)] = tree.parent(v);
  j["parent"] = parent;
  return j;
}

GTree gtree_from_json(const Json& j) {
  int n = as_int(field(j, "n"), "n");
  if (n < 1 || n > kMaxVertices) throw InvalidInput("tree size out of range");
  int root = as_int(field(j, "root"), "root");
  std::vector<int> parent(n + 1, -1);
  const Json& map = field(j, "parent");
  if (!map.is_object()) throw InvalidInput("parent must be an object");
  for (auto it = map.begin(); it != map.end(); ++it) {
    int v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(it.key(), &used);
      if (used != it.key().size()) throw InvalidInput("bad vertex key");
    } catch (const std::logic_error&) {
      throw InvalidInput("bad vertex key: " + it.key());
    }
    if (v < 1 || v > n) throw InvalidInput("vertex out of range: " + it.key());
    parent[v] = as_int(it.value(), "parent");
  }
  if (root < 1 || root > n || parent[root] != -1) throw InvalidInput("bad root");
  parent[root] = 0;
  for (int v = 1; v <= n; ++v)
    if (parent[v] < 0) throw InvalidInput("vertex " + std::to_string(v) + " has no parent");
  return GTree(n, std::move(parent));
}

std::string gtree_to_dot(const GTree& tree) {
  std::ostringstream out;
  out << "digraph gtree {\n";
  for (int v = 1; v <= tree.n(); ++v)
    out << "  " << v << " [shape=" << (v == tree.root() ? "doublecircle" : "circle") << "];\n";
  for (int v = 1; v <= tree.n(); ++v)
    if (tree.parent(v)) out << "  " << v << " -> " << tree.parent(v) << ";\n";
  out << "}\n";
  return out.str();
}

std::string hasse_to_dot(const FinitePoset& p, bool use_labels) {
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n";
  for (int a = 0; a < p.size(); ++a) {
    out << "  " << a << " [label=\"" << (use_labels ? p.label(a) : std::to_string(a)) << "\"];\n";
  }
  for (int a = 0; a < p.size(); ++a)
    for (int b : p.upper_covers(a)) out << "  " << a << " -> " << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string mobius_to_csv(const std::vector<std::vector<long long>>& mu) {
  std::ostringstream out;
  out << "a,b,mu\n";
  for (std::size_t a = 0; a < mu.size(); ++a)
    for (std::size_t b = 0; b < mu[a].size(); ++b)
      if (mu[a][b] != 0) out << a << ',' << b << ',' << mu[a][b] << '\n';
  return out.str();
}

Json forcing_to_json(const ForcingSystem& fs) {
  Json j;
  j["n"] = fs.n;
  Json elements = Json::array();
  for (const JiIndex& e : fs.elements) elements.push_back({e.i, e.k});
  j["elements"] = elements;
  auto dump = [&fs](const Relation& r) {
    Json arr = Json::array();
    for (auto [a, b] : r.pairs()) {
      const JiIndex& x = fs.elements[a];
      const JiIndex& y = fs.elements[b];
      arr.push_back(Json::array({Json::array({x.i, x.k}), Json::array({y.i, y.k})}));
    }
    return arr;
  };
  j["to"] = dump(fs.to);
  j["onto"] = dump(fs.onto);
  j["into"] = dump(fs.into);
  j["force"] = dump(fs.force);
  return j;
}

}  // namespace tubelat
