#pragma once

// JSON wire format for MellinIntegrand:
//   {num:[[a,b],...], den:[[a,b],...], scalar, powers:[[base,a,b],...]}

#include <json.hpp>

#include "mlfrac/core.hpp"
#include "mlfrac/mellin_barnes.hpp"

namespace mlfrac {

inline nlohmann::json integrand_to_json(const MellinIntegrand& f) {
    nlohmann::json j;
    j["num"] = nlohmann::json::array();
    for (const auto& g : f.numerator) {
        j["num"].push_back({g.coeff, g.shift});
    }
    j["den"] = nlohmann::json::array();
    for (const auto& g : f.denominator) {
        j["den"].push_back({g.coeff, g.shift});
    }
    j["scalar"] = f.scalar;
    j["powers"] = nlohmann::json::array();
    for (const auto& p : f.base_powers) {
        j["powers"].push_back({p.base, p.a, p.b});
    }
    return j;
}

inline MellinIntegrand integrand_from_json(const nlohmann::json& j) {
    auto fail = []() -> MellinIntegrand {
        throw domain_error("json-shape",
                           "expected {num:[[a,b],...], den:[[a,b],...], scalar, "
                           "powers:[[base,a,b],...]}");
    };
    if (!j.is_object() || !j.contains("num") || !j.contains("den") ||
        !j.contains("scalar") || !j.contains("powers")) {
        return fail();
    }
    MellinIntegrand f;
    for (const char* key : {"num", "den"}) {
        if (!j[key].is_array()) return fail();
        for (const auto& row : j[key]) {
            if (!row.is_array() || row.size() != 2 || !row[0].is_number() ||
                !row[1].is_number()) {
                return fail();
            }
            GammaFactor g{row[0].get<double>(), row[1].get<double>()};
            if (key[0] == 'n') {
                f.numerator.push_back(g);
            } else {
                f.denominator.push_back(g);
            }
        }
    }
    if (!j["scalar"].is_number()) return fail();
    f.scalar = j["scalar"].get<double>();
    if (!j["powers"].is_array()) return fail();
    for (const auto& row : j["powers"]) {
        if (!row.is_array() || row.size() != 3 || !row[0].is_number() ||
            !row[1].is_number() || !row[2].is_number()) {
            return fail();
        }
        f.base_powers.push_back(
            {row[0].get<double>(), row[1].get<double>(), row[2].get<double>()});
    }
    return f;
}

}  // namespace mlfrac
