#ifndef SEPKIT_ERRORS_HPP
#define SEPKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sepkit {

// Malformed input file (edge list, DIMACS, ...).
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configurable resource cap was exceeded or an input is over the
// admissible size for an exhaustive routine. Results are inconclusive,
// never wrong.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Evidence that should be impossible for valid inputs (e.g. a separator
// selecting both truth values of one variable). Raised as a correctness
// alarm rather than swallowed.
struct contradiction_error : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace sepkit

#endif
