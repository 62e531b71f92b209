#pragma once

#include <stdexcept>

namespace trinomia {

// Thrown when two independently computed sides of a proved identity differ;
// reaching this means the implementation (not the mathematics) is wrong.
struct theorem_violation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace trinomia
