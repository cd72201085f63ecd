#pragma once

#include <stdexcept>
#include <string>

namespace lefkit {

// Failure to make sense of user-supplied text (word files, plumbing specs).
// The CLI maps this to exit code 2.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A mathematical hypothesis of an operation is not met (signature of a
// non-relator word, sphere-base homology without a section, ...).
// The CLI maps this to exit code 3.
struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace lefkit
