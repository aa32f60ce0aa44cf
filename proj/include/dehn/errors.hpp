#pragma once

#include <stdexcept>
#include <string>

namespace dehn {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An operation was called on input that violates its stated precondition
// (invalid diagram, bad surgery site, out-of-range query).
struct precondition_error : error {
    using error::error;
};

// An internal invariant broke. For connected_sum this indicates a
// mistranscribed piping fragment rather than bad user input.
struct internal_error : error {
    using error::error;
};

// Census hit its configured resource cap; partial results are discarded.
struct resource_limit_error : error {
    using error::error;
};

enum class ParseCode {
    lexical,
    bad_header,
    bad_section,
    unknown_curve,
    unknown_point,
    duplicate_curve,
    duplicate_point,
    duplicate_word,
    slot_reused,
    slot_missing,
    sign_missing,
    sign_duplicate,
    triplet_arity,
    point_unassigned,
    missing_section,
    bad_number,
};

const char* parse_code_name(ParseCode code);

struct parse_error : error {
    ParseCode code;
    int line;
    int column;

    parse_error(ParseCode code, int line, int column, const std::string& what);
};

} // namespace dehn
