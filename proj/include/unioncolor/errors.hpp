#pragma once

#include <stdexcept>
#include <string>

namespace unioncolor {

/// Malformed or out-of-contract input: bad files, bad parameters,
/// violated preconditions.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An input document could not be parsed; carries the offending line.
struct parse_error : input_error {
    parse_error(int line_number, const std::string& what)
        : input_error("line " + std::to_string(line_number) + ": " + what),
          line(line_number) {}
    int line;
};

/// The graph has a component of order at most two, so no union
/// vertex-distinguishing edge coloring exists.
struct eligibility_error : input_error {
    using input_error::input_error;
};

/// A search budget (node cap, wall clock, or color cap) ran out before the
/// question was decided. Distinct from a refutation.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace unioncolor
