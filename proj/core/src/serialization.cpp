//------------------------------------------------------------------------------
// Copyright 2026 The jmcell Authors
// SPDX-License-Identifier: Apache-2.0
//------------------------------------------------------------------------------
#include "jmcell/serialization.hpp"

#include <cmath>

#include <json.hpp>

#include "jmcell/error.hpp"

namespace jmcell {

using nlohmann::json;

std::string area_model_to_json(const BetaMixtureAreaModel& model, double c2, int indent)
{
    model.validate();
    json doc;
    doc["schema_version"] = kAreaModelSchemaVersion;
    doc["lambda0"] = model.lambda0;
    doc["r_c"] = model.r_c;
    doc["kappa"] = kappa_for_radius(model.lambda0, model.r_c, c2);
    doc["alpha"] = model.shape_alpha;
    doc["beta"] = model.shape_beta;
    doc["p_e1"] = model.dirac_weight;
    doc["supports"] = {
        {"trunc", {model.trunc_support.lo, model.trunc_support.hi}},
        {"full", {model.full_support.lo, model.full_support.hi}},
    };
    doc["dirac_location"] = model.dirac_location;
    const double normalizer = model.normalizer();
    doc["normalizer"] = std::isfinite(normalizer) ? json(normalizer) : json(nullptr);
    doc["log_normalizer"] = model.log_normalizer;
    doc["variance_mismatch"] = model.variance_mismatch;
    return doc.dump(indent);
}

BetaMixtureAreaModel area_model_from_json(std::string_view text)
{
    BetaMixtureAreaModel m;
    try {
        const json doc = json::parse(text);
        const int version = doc.at("schema_version").get<int>();
        if (version != kAreaModelSchemaVersion) {
            throw InvalidArgument("unsupported area model schema_version "
                                  + std::to_string(version));
        }
        m.lambda0 = doc.at("lambda0").get<double>();
        m.r_c = doc.at("r_c").get<double>();
        m.shape_alpha = doc.at("alpha").get<double>();
        m.shape_beta = doc.at("beta").get<double>();
        m.dirac_weight = doc.at("p_e1").get<double>();
        const auto& trunc = doc.at("supports").at("trunc");
        const auto& full = doc.at("supports").at("full");
        m.trunc_support = {trunc.at(0).get<double>(), trunc.at(1).get<double>()};
        m.full_support = {full.at(0).get<double>(), full.at(1).get<double>()};
        m.dirac_location = doc.at("dirac_location").get<double>();
        if (doc.contains("log_normalizer")) {
            m.log_normalizer = doc.at("log_normalizer").get<double>();
        } else {
            m.log_normalizer = std::log(doc.at("normalizer").get<double>());
        }
        m.variance_mismatch = doc.value("variance_mismatch", 0.0);
    } catch (const json::exception& e) {
        throw InvalidArgument(std::string("malformed area model JSON: ") + e.what());
    }
    m.validate();
    return m;
}

}  // namespace jmcell
