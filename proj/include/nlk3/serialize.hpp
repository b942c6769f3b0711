#pragma once

// JSON/CSV emission. All numeric output is an exact rational string
// ("num" or "num/den"); ordering is by ascending exponent or index.

#include <nlk3/bridge.hpp>
#include <nlk3/lattice.hpp>
#include <nlk3/modforms.hpp>
#include <nlk3/qseries.hpp>

#include <json.hpp>

#include <string>

namespace nlk3 {

using Json = nlohmann::ordered_json;

inline Json series_json(const FracSeries& s) {
    Json terms = Json::array();
    for (const auto& [k, v] : s.terms())
        terms.push_back(Json::array({rat_str(s.exponent_at(k)), rat_str(v)}));
    return Json{{"N", s.grading()}, {"trunc", rat_str(s.truncation())}, {"terms", terms}};
}

inline Json vvform_json(const VVForm& f) {
    Json comps = Json::array();
    for (const auto& c : f.components) comps.push_back(series_json(c));
    return Json{{"level", f.level},
                {"weight", std::to_string(f.weight_num2) + "/2"},
                {"components", comps}};
}

// CSV rows for an NL table: h, d, disc, coset, value
inline std::string nl_table_csv(const NLTable& table) {
    std::string out = "h,d,disc,coset,value\n";
    for (const auto& [key, value] : table.values) {
        LatticePair lp{table.l, key.first, key.second};
        out += std::to_string(key.first) + "," + std::to_string(key.second) + "," +
               std::to_string(lp.disc()) + "," + std::to_string(lp.coset()) + "," +
               rat_str(value) + "\n";
    }
    return out;
}

}  // namespace nlk3
