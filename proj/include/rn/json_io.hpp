#pragma once

// JSON projections of the library types for the CLI's data stream.
// Big integers are rendered as decimal strings so consumers never lose
// precision to double conversion; rationals appear as num/den string pairs.

#include <json.hpp>

#include "rn/construct.hpp"
#include "rn/corpus.hpp"
#include "rn/equation.hpp"
#include "rn/search.hpp"

namespace rn {

using Json = nlohmann::ordered_json;

inline std::string to_decimal(const Int& v) { return v.get_str(); }

inline Json to_json(const Equation& eq) {
    return Json{{"A", to_decimal(eq.A)},
                {"B", to_decimal(eq.B)},
                {"C", to_decimal(eq.C)},
                {"D", to_decimal(eq.D)}};
}

inline Json to_json(const Solution& s) {
    return Json{{"n", s.n},
                {"z_num", to_decimal(s.z.get_num())},
                {"z_den", to_decimal(s.z.get_den())}};
}

inline Json to_json(const SolutionReport& report) {
    Json j = to_json(report.eq);
    j["n_min"] = report.n_min;
    j["n_max"] = report.n_max;
    j["K"] = report.K();
    Json sols = Json::array();
    for (const auto& s : report.solutions) sols.push_back(to_json(s));
    j["solutions"] = std::move(sols);
    return j;
}

inline Json to_json(const Reduction& red) {
    Json j;
    j["equation"] = to_json(red.eq);
    j["n_shift"] = red.n_shift;
    j["z_scale_num"] = to_decimal(red.z_scale.get_num());
    j["z_scale_den"] = to_decimal(red.z_scale.get_den());
    return j;
}

inline Json to_json(const PrimitivityReport& rep) {
    return Json{{"primitive", rep.primitive}, {"violated", rep.violated}};
}

inline Json to_json(const DoubleSpec& spec) {
    return Json{{"A", to_decimal(spec.A)}, {"B", to_decimal(spec.B)},
                {"C", to_decimal(spec.C)}, {"n1", spec.n1},
                {"n2", spec.n2},           {"E", to_decimal(spec.E)},
                {"F", to_decimal(spec.F)}};
}

inline Json to_json(const ConstructedTriple& t) {
    Json j = to_json(t.eq);
    j["exponents"] = t.exponents;
    j["X2_num"] = to_decimal(t.X2.get_num());
    j["X2_den"] = to_decimal(t.X2.get_den());
    return j;
}

inline Json to_json(const SearchHit& hit) {
    return Json{{"D", to_decimal(hit.D)}, {"K", hit.K()}, {"n", hit.exponents}};
}

inline Json to_json(const CorpusRow& row) {
    return Json{{"table", row.table_id},
                {"A", row.A},
                {"B", row.B},
                {"C", row.C},
                {"D", row.D},
                {"K", row.K_claimed},
                {"K_is_lower_bound", row.K_is_lower_bound},
                {"exponents", row.exponents},
                {"params", row.params},
                {"constraints", row.constraints},
                {"suspect", row.suspect},
                {"line", row.line}};
}

inline Json to_json(const VerificationOutcome& o) {
    Json j;
    j["table"] = o.row.table_id;
    j["line"] = o.row.line;
    j["instantiation"] = o.instantiation;
    j["A"] = o.row.A;
    j["B"] = o.row.B;
    j["C"] = o.row.C;
    j["D"] = o.row.D;
    j["status"] = to_string(o.status);
    j["suspect"] = o.row.suspect;
    if (o.observed) {
        Json obs = Json::array();
        for (const auto& s : o.observed->solutions) obs.push_back(s.n);
        j["observed_n"] = std::move(obs);
        j["observed_K"] = o.observed->K();
    }
    return j;
}

}  // namespace rn
