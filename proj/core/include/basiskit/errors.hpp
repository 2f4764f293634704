#pragma once

#include <stdexcept>
#include <string>

namespace basiskit {

/// Input data does not satisfy a schema or a structural invariant.
struct SchemaError : std::runtime_error {
    explicit SchemaError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A constrained problem has no feasible point on the search domain.
struct InfeasibleError : std::runtime_error {
    explicit InfeasibleError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Not enough observations to evaluate an estimator.
struct InsufficientDataError : std::runtime_error {
    explicit InsufficientDataError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Portfolio equity denominator is non-positive; the share is undefined.
struct DegenerateEquityError : std::runtime_error {
    explicit DegenerateEquityError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Price ratio lies beyond the liquidation point of the marked share map.
struct LiquidatedRegionError : std::runtime_error {
    explicit LiquidatedRegionError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace basiskit
