#pragma once

#include <stdexcept>
#include <string>

namespace ivg {

// Input that could not be parsed at all: malformed graph6, bad CSV row,
// non-numeric permutation text, broken JSON.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Structurally well-formed input that is not a valid code word: wrong color
// multiplicities, degree profile outside the expected range, non-bijective
// image.
struct InvalidCodeError : std::runtime_error {
    explicit InvalidCodeError(const std::string& what) : std::runtime_error(what) {}
};

// A request whose exact cost is known to be out of reach (too many vertices
// for the enumeration stage, or for a packed key).  The message names the
// offending size and the cost that made us refuse.
struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ivg
