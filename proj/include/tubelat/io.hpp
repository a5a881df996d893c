#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "tubelat/forcing.hpp"
#include "tubelat/gtree.hpp"
#include "tubelat/poset.hpp"
#include "tubelat/tubing.hpp"

namespace tubelat {

using Json = nlohmann::ordered_json;

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

// {"graph": {...}, "tubes": [[...], ...]} with tubes in canonical order.
Json tubing_to_json(const Tubing& t);
Tubing tubing_from_json(const Json& j);
std::string tubing_to_string(const Tubing& t);
Tubing parse_tubing(const std::string& text);
Tubing read_tubing_file(const std::string& path);

// {"n": 9, "root": 5, "parent": {"1": 3, ...}}
Json gtree_to_json(const GTree& tree);
GTree gtree_from_json(const Json& j);
std::string gtree_to_dot(const GTree& tree);

Json read_json_file(const std::string& path);

std::string hasse_to_dot(const FinitePoset& p, bool use_labels);
std::string mobius_to_csv(const std::vector<std::vector<long long>>& mu);
Json forcing_to_json(const ForcingSystem& fs);

}  // namespace tubelat
