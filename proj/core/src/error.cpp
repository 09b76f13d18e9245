//------------------------------------------------------------------------------
// Copyright 2026 The jmcell Authors
// SPDX-License-Identifier: Apache-2.0
//------------------------------------------------------------------------------
#include "jmcell/error.hpp"

namespace jmcell {

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::NoRoot: return "NoRoot";
    case ErrorCode::WindowTooSmall: return "WindowTooSmall";
    case ErrorCode::RejectionBudgetExceeded: return "RejectionBudgetExceeded";
    case ErrorCode::InvalidMoments: return "InvalidMoments";
    case ErrorCode::InvalidShape: return "InvalidShape";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::DivergentMoment: return "DivergentMoment";
    case ErrorCode::NoInterferers: return "NoInterferers";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace jmcell
