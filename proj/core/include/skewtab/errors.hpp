#pragma once

#include <stdexcept>
#include <string>

namespace skewtab {

// Malformed text input (shape strings, orth specs, JSON documents).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Well-formed input that violates a mathematical precondition.
struct ConstraintError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A check that should hold by construction failed.
struct InvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

// Iso search ran out of its node budget.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace skewtab
