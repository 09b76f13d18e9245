//------------------------------------------------------------------------------
// Copyright 2026 The jmcell Authors
// SPDX-License-Identifier: Apache-2.0
//------------------------------------------------------------------------------
#include "scenario.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "jmcell/error.hpp"

namespace jmuplink {
namespace {

using nlohmann::json;

constexpr std::array<std::string_view, 15> kKnownKeys = {
    "lambda0",        "kappa",          "r_c",
    "c2",             "lambda_u",       "alpha_pl",
    "bandwidth",      "n_realizations", "seed",
    "window_halfwidth_factor",          "output_path",
    "thresholds_db",  "kappas",         "validation_scale",
    "description",
};

bool is_known(const std::string& key)
{
    for (auto k : kKnownKeys) {
        if (k == key) {
            return true;
        }
    }
    return false;
}

}  // namespace

Scenario parse_scenario(std::string_view json_text)
{
    Scenario sc;
    try {
        const json doc = json::parse(json_text);
        if (!doc.is_object()) {
            throw jmcell::InvalidArgument("scenario must be a JSON object");
        }
        for (const auto& item : doc.items()) {
            if (!is_known(item.key())) {
                throw jmcell::InvalidArgument("unknown scenario key '" + item.key() + "'");
            }
        }
        auto& cfg = sc.cfg;
        cfg.lambda0 = doc.value("lambda0", cfg.lambda0);
        cfg.c2 = doc.value("c2", cfg.c2);
        if (doc.contains("kappa") && doc.contains("r_c")) {
            throw jmcell::InvalidArgument("give either kappa or r_c, not both");
        }
        if (doc.contains("r_c")) {
            const double r_c = doc.at("r_c").get<double>();
            if (!(r_c > 0)) {
                throw jmcell::InvalidArgument("r_c must be positive");
            }
            cfg.kappa = jmcell::kappa_for_radius(cfg.lambda0, r_c, cfg.c2);
        } else {
            cfg.kappa = doc.value("kappa", cfg.kappa);
        }
        cfg.lambda_u = doc.value("lambda_u", 200 * cfg.lambda0);
        cfg.alpha_pl = doc.value("alpha_pl", cfg.alpha_pl);
        cfg.bandwidth = doc.value("bandwidth", cfg.bandwidth);
        cfg.validate();

        sc.n_realizations = doc.value("n_realizations", sc.n_realizations);
        sc.seed = doc.value("seed", sc.seed);
        sc.window_halfwidth_factor = doc.value("window_halfwidth_factor", sc.window_halfwidth_factor);
        sc.output_path = doc.value("output_path", sc.output_path);
        sc.thresholds_db = doc.value("thresholds_db", sc.thresholds_db);
        sc.kappas = doc.value("kappas", sc.kappas);
        sc.validation_scale = doc.value("validation_scale", sc.validation_scale);
    } catch (const json::exception& e) {
        throw jmcell::InvalidArgument(std::string("malformed scenario: ") + e.what());
    }
    if (sc.n_realizations == 0) {
        throw jmcell::InvalidArgument("n_realizations must be positive");
    }
    if (!(sc.window_halfwidth_factor > 0)) {
        throw jmcell::InvalidArgument("window_halfwidth_factor must be positive");
    }
    if (!(sc.validation_scale > 0)) {
        throw jmcell::InvalidArgument("validation_scale must be positive");
    }
    for (double k : sc.kappas) {
        if (!(k > 0)) {
            throw jmcell::InvalidArgument("kappas must be positive");
        }
    }
    return sc;
}

Scenario load_scenario(const std::filesystem::path& file)
{
    std::ifstream in(file);
    if (!in) {
        throw jmcell::InvalidArgument("cannot open scenario file " + file.string());
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_scenario(text.str());
}

}  // namespace jmuplink
