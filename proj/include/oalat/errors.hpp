#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace oalat {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Elements or operators living on different grids were mixed.
struct GridMismatchError : Error {
    using Error::Error;
};

/// A precondition on the call's inputs does not hold.
struct ContractError : Error {
    using Error::Error;
};

/// Exhaustive enumeration refused: support exceeds the configured cap.
struct SupportTooLargeError : Error {
    SupportTooLargeError(const std::string& msg, std::size_t support_size, std::size_t cap)
        : Error(msg), support(support_size), cap(cap) {}
    std::size_t support;
    std::size_t cap;
};

/// Operation not defined for this operator kind.
struct UnsupportedError : Error {
    using Error::Error;
};

/// Evaluation produced a non-finite value.
struct NumericError : Error {
    using Error::Error;
};

/// The grid cannot resolve the requested epsilon. Carries the smallest
/// single-fragment norm that was achieved and the cell achieving it.
struct GridTooCoarseError : Error {
    GridTooCoarseError(const std::string& msg, double achieved, std::size_t cell_index)
        : Error(msg), achieved_norm(achieved), cell(cell_index) {}
    double achieved_norm;
    std::size_t cell;
};

/// Malformed experiment/operator/element spec. `field` names the offending entry.
struct SpecError : Error {
    SpecError(const std::string& msg, std::string field_path)
        : Error(msg), field(std::move(field_path)) {}
    std::string field;
};

}  // namespace oalat
