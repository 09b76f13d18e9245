//------------------------------------------------------------------------------
// Copyright 2026 The jmcell Authors
// SPDX-License-Identifier: Apache-2.0
//------------------------------------------------------------------------------
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace jmcell {

//! Machine-readable failure category carried by every library exception.
enum class ErrorCode {
    NonConvergence,
    NoRoot,
    WindowTooSmall,
    RejectionBudgetExceeded,
    InvalidMoments,
    InvalidShape,
    DomainError,
    DivergentMoment,
    NoInterferers,
    InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

#define JMCELL_DEFINE_ERROR(Name)                                                   \
    class Name : public Error {                                                     \
    public:                                                                         \
        explicit Name(const std::string& what) : Error(ErrorCode::Name, what) {}    \
    }

JMCELL_DEFINE_ERROR(NonConvergence);
JMCELL_DEFINE_ERROR(NoRoot);
JMCELL_DEFINE_ERROR(WindowTooSmall);
JMCELL_DEFINE_ERROR(RejectionBudgetExceeded);
JMCELL_DEFINE_ERROR(InvalidMoments);
JMCELL_DEFINE_ERROR(InvalidShape);
JMCELL_DEFINE_ERROR(DomainError);
JMCELL_DEFINE_ERROR(DivergentMoment);
JMCELL_DEFINE_ERROR(NoInterferers);
JMCELL_DEFINE_ERROR(InvalidArgument);

#undef JMCELL_DEFINE_ERROR

}  // namespace jmcell
