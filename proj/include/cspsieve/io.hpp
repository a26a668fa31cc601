#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "cspsieve/csp.hpp"
#include "cspsieve/graphs.hpp"
#include "cspsieve/perm.hpp"
#include "cspsieve/qpoly.hpp"

namespace cspsieve {

// {"terms": [[exp, coeff], ...]} sorted by exponent, offsets folded in.
nlohmann::json poly_to_json(const IntLaurentPoly& f);

// {"n": int, "edges": [[u, v], ...], "family": {"name":..., "params":...}}
// with u < v and the edge list sorted; family is null when untagged.
nlohmann::json graph_to_json(const Graph& g);

// image array
nlohmann::json perm_to_json(const Permutation& p);

// list of lists of vertex ids
nlohmann::json sets_to_json(const std::vector<VertexSet>& sets);

nlohmann::json report_to_json(const CspReport& report);

// one set per line, comma-separated ids
std::string sets_to_text(const std::vector<VertexSet>& sets);

std::string report_to_text(const CspReport& report);

} // namespace cspsieve
