#pragma once

#include <stdexcept>
#include <string>

namespace girreg {

/// A graph or group does not satisfy the hypothesis a construction needs.
class HypothesisError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An exhaustive search would exceed its budget, or a search range ran out.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace girreg
