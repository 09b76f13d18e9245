//------------------------------------------------------------------------------
// Copyright 2026 The jmcell Authors
// SPDX-License-Identifier: Apache-2.0
//------------------------------------------------------------------------------
//! \file jmcell/serialization.hpp
//! JSON documents for fitted area models, so tools can reuse a fit.
//------------------------------------------------------------------------------
#pragma once

#include <string>
#include <string_view>

#include "jmcell/area_model.hpp"
#include "jmcell/uplink.hpp"

namespace jmcell {

inline constexpr int kAreaModelSchemaVersion = 1;

//! Keys: schema_version, lambda0, r_c, kappa, alpha, beta, p_e1,
//! supports {trunc: [v, w], full: [y, z]}, dirac_location, normalizer,
//! log_normalizer, variance_mismatch. normalizer is null when it overflows.
std::string area_model_to_json(const BetaMixtureAreaModel& model, double c2 = kDefaultC2,
                               int indent = 2);

//! Throws InvalidArgument on malformed documents and InvalidShape when the
//! decoded model violates its invariants.
BetaMixtureAreaModel area_model_from_json(std::string_view text);

}  // namespace jmcell
