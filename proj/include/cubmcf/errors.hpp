// SPDX-License-Identifier: MIT
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cubmcf {

enum class Errc {
    ZeroElement,
    ZeroDivisor,
    NotIrreducible,
    NotTotallyReal,
    NotAUnit,
    DecompositionNotFound,
    NonIntegralTrace,
    ParameterOutOfRange,
    BoundViolated,
    NotGalois,
    SignatureMismatch,
    DegenerateBasis,
    MissingUnits,
    NotPeriodic,
    ZeroPivot,
    NegativeComponent,
    NotTotallyPositive,
    Parse,
};

std::string_view errc_name(Errc c) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace cubmcf
