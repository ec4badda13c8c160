#pragma once

#include <stdexcept>
#include <string>

namespace biclique {

/// Violated parameter precondition (ranges, mismatched sizes, bad flags).
class ParameterError : public std::invalid_argument {
public:
    explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed or out-of-contract instance data (weights, matrices, files).
class InstanceError : public std::invalid_argument {
public:
    explicit InstanceError(const std::string& what) : std::invalid_argument(what) {}
};

/// An input object that fails a documented contract (e.g. a matching that
/// is not maximum where a maximum matching is required).
class ContractError : public std::invalid_argument {
public:
    explicit ContractError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace biclique
