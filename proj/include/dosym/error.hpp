#pragma once

#include <stdexcept>

namespace dosym {

// Numeric non-convergence (iterative solvers, quadrature budgets).
// Precondition violations use std::invalid_argument instead.
class convergence_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace dosym
