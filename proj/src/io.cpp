#include "cspsieve/io.hpp"

#include <cstdint>
#include <limits>
#include <sstream>

namespace cspsieve {

namespace {

// Desk-scale values fit in 64 bits; anything larger is emitted as a decimal
// string so nothing is silently truncated.
nlohmann::json int_to_json(const Int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return v.convert_to<std::int64_t>();
    return v.str();
}

} // namespace

nlohmann::json poly_to_json(const IntLaurentPoly& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : f.terms()) terms.push_back({e, int_to_json(c)});
    return {{"terms", terms}};
}

nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    nlohmann::json family;
    if (g.family()) {
        nlohmann::json params = nlohmann::json::object();
        for (const auto& [key, val] : g.family()->params) params[key] = val;
        family = {{"name", g.family()->name}, {"params", params}};
    }
    return {{"n", g.n_vertices()}, {"edges", edges}, {"family", family}};
}

nlohmann::json perm_to_json(const Permutation& p) {
    return nlohmann::json(p.image());
}

nlohmann::json sets_to_json(const std::vector<VertexSet>& sets) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& s : sets) out.push_back(s);
    return out;
}

nlohmann::json report_to_json(const CspReport& report) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : report.rows) {
        nlohmann::json r = {
            {"d", row.d},
            {"element", row.element},
            {"poly_value", row.poly_value ? int_to_json(*row.poly_value) : nlohmann::json()},
            {"fixed_count", int_to_json(row.fixed_count)},
            {"quotient_count",
             row.quotient_count ? int_to_json(*row.quotient_count) : nlohmann::json()},
            {"pass", row.pass},
        };
        rows.push_back(std::move(r));
    }
    nlohmann::json out = {{"label", report.label},
                          {"group_order", report.group_order},
                          {"rows", rows},
                          {"pass", report.pass}};
    if (!report.notes.empty()) out["notes"] = report.notes;
    return out;
}

std::string sets_to_text(const std::vector<VertexSet>& sets) {
    std::ostringstream os;
    for (const auto& s : sets) {
        for (size_t i = 0; i < s.size(); ++i) {
            if (i) os << ",";
            os << s[i];
        }
        os << "\n";
    }
    return os.str();
}

std::string report_to_text(const CspReport& report) {
    std::ostringstream os;
    os << report.label << "  (group order " << report.group_order << ")\n";
    for (const auto& note : report.notes) os << "note: " << note << "\n";
    os << "  d  element  poly_value  fixed  quotient  verdict\n";
    for (const auto& row : report.rows) {
        os << "  " << row.d << "  g^" << row.element << "  ";
        if (row.poly_value)
            os << *row.poly_value;
        else
            os << "non-rational";
        os << "  " << row.fixed_count << "  ";
        if (row.quotient_count)
            os << *row.quotient_count;
        else
            os << "-";
        os << "  " << (row.pass ? "ok" : "FAIL") << "\n";
    }
    os << (report.pass ? "PASS" : "FAIL") << "\n";
    return os.str();
}

} // namespace cspsieve
