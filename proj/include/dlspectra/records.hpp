#pragma once

#include <cstdio>
#include <cstdlib>
#include <limits>
#include <string>

#include <json.hpp>

#include "dlspectra/checks.hpp"
#include "dlspectra/graph6.hpp"
#include "dlspectra/search.hpp"

namespace dlspectra {

using json = nlohmann::json;

inline double round_sig12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::strtod(buf, nullptr);
}

// Rationals serialize as plain integers where possible, "p/q" strings
// otherwise, so records stay exact.
inline json rat_to_json(const Rat& r) {
    if (rat_den(r) == 1) {
        const Int& n = rat_num(r);
        if (n >= std::numeric_limits<long long>::min() && n <= std::numeric_limits<long long>::max())
            return static_cast<long long>(n);
    }
    return r.str();
}

inline json params_to_json(const Graph& g, const GraphParams& p) {
    return json{{"n", g.n},
                {"m", g.edge_count()},
                {"alpha", p.alpha},
                {"chi", p.chi},
                {"gamma", p.gamma},
                {"pendants", p.pendants},
                {"complement_components", p.complement_component_count},
                {"diameter", p.diameter},
                {"bipartite", p.bipartite},
                {"tr_max", p.tr_max}};
}

inline json report_to_json(const CheckReport& r) {
    json j{{"id", r.id},
           {"applicable", r.applicable},
           {"holds", r.holds},
           {"equality", r.equality},
           {"bound", rat_to_json(r.bound)},
           {"attained", rat_to_json(r.attained)}};
    if (!r.witness.empty()) j["witness"] = r.witness;
    return j;
}

// Self-contained record for one graph: everything re-verifiable from the
// embedded graph6 string.
inline json run_record(const GraphAnalysis& a, bool with_checks) {
    Spectrum s = spectrum_of(distance_laplacian(a.g, a.dist), a.dl);
    json spectrum = json::array();
    for (double v : s.values) spectrum.push_back(round_sig12(v));
    json exact = json::array();
    for (const auto& [value, mult] : s.int_roots)
        exact.push_back(json{{"value", rat_to_json(Rat(value))}, {"multiplicity", mult}});
    json j{{"graph6", to_graph6(a.g)},
           {"params", params_to_json(a.g, a.params)},
           {"spectrum", spectrum},
           {"exact_integer_eigenvalues", exact}};
    if (with_checks) {
        json checks = json::array();
        for (const CheckReport& r : run_all(a)) checks.push_back(report_to_json(r));
        j["checks"] = checks;
    }
    return j;
}

inline json finding_to_json(const EqualityFinding& f) {
    return json{{"problem", f.problem}, {"graph6", f.graph6}, {"n", f.n},
                {"alpha", f.alpha},    {"chi", f.chi},        {"gamma", f.gamma},
                {"counts", json{{"count", f.count}, {"bound", f.bound}}}};
}

// Flat CSV views (spectrum rows / one-line parameter table).
inline std::string spectrum_csv(const GraphAnalysis& a) {
    Spectrum s = spectrum_of(distance_laplacian(a.g, a.dist), a.dl);
    std::string out = "kind,value,multiplicity\n";
    for (double v : s.values) {
        char buf[48];
        std::snprintf(buf, sizeof buf, "numeric,%.12g,\n", v);
        out += buf;
    }
    for (const auto& [value, mult] : s.int_roots)
        out += "exact," + value.str() + "," + std::to_string(mult) + "\n";
    return out;
}

inline std::string params_csv(const Graph& g, const GraphParams& p) {
    std::string out =
        "graph6,n,m,alpha,chi,gamma,pendant_count,complement_components,diameter,bipartite,tr_"
        "max\n";
    out += to_graph6(g) + "," + std::to_string(g.n) + "," + std::to_string(g.edge_count()) + "," +
           std::to_string(p.alpha) + "," + std::to_string(p.chi) + "," + std::to_string(p.gamma) +
           "," + std::to_string(p.pendant_count()) + "," +
           std::to_string(p.complement_component_count) + "," + std::to_string(p.diameter) + "," +
           (p.bipartite ? "true" : "false") + "," + std::to_string(p.tr_max) + "\n";
    return out;
}

}  // namespace dlspectra
