//------------------------------------------------------------------------------
// Copyright 2026 The jmcell Authors
// SPDX-License-Identifier: Apache-2.0
//------------------------------------------------------------------------------
#include "jmcell/serialization.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include "jmcell/error.hpp"

namespace jmcell {
namespace {

TEST(AreaModelJson, RoundTrip)
{
    for (double r_c : {100.0, 250.0, 1000.0}) {
        const BetaMixtureAreaModel m = fit_area_model(4e-6, r_c);
        const BetaMixtureAreaModel back = area_model_from_json(area_model_to_json(m));
        EXPECT_EQ(back.lambda0, m.lambda0);
        EXPECT_EQ(back.r_c, m.r_c);
        EXPECT_EQ(back.shape_alpha, m.shape_alpha);
        EXPECT_EQ(back.shape_beta, m.shape_beta);
        EXPECT_EQ(back.dirac_weight, m.dirac_weight);
        EXPECT_EQ(back.dirac_location, m.dirac_location);
        EXPECT_EQ(back.log_normalizer, m.log_normalizer);
        EXPECT_EQ(back.trunc_support.hi, m.trunc_support.hi);
        EXPECT_EQ(back.full_support.hi, m.full_support.hi);
        EXPECT_EQ(area_cdf(back, 0.5 * m.dirac_location), area_cdf(m, 0.5 * m.dirac_location));
    }
}

TEST(AreaModelJson, Keys)
{
    const auto doc = nlohmann::json::parse(area_model_to_json(fit_area_model(4e-6, 250)));
    for (const char* key : {"schema_version", "lambda0", "r_c", "kappa", "alpha", "beta", "p_e1",
                            "supports", "dirac_location", "normalizer", "log_normalizer"}) {
        EXPECT_TRUE(doc.contains(key)) << key;
    }
    EXPECT_EQ(doc["schema_version"], kAreaModelSchemaVersion);
    EXPECT_NEAR(doc["kappa"].get<double>(), kappa_for_radius(4e-6, 250), 1e-12);
}

TEST(AreaModelJson, Rejections)
{
    EXPECT_THROW(area_model_from_json("{"), InvalidArgument);
    EXPECT_THROW(area_model_from_json("{\"schema_version\": 1}"), InvalidArgument);
    auto doc = nlohmann::json::parse(area_model_to_json(fit_area_model(4e-6, 250)));
    doc["schema_version"] = 99;
    EXPECT_THROW(area_model_from_json(doc.dump()), InvalidArgument);
    doc["schema_version"] = 1;
    doc["alpha"] = -2.0;
    EXPECT_THROW(area_model_from_json(doc.dump()), InvalidShape);
}

}  // namespace
}  // namespace jmcell
