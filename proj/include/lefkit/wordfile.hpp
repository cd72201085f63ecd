#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lefkit/fibration.hpp"
#include "lefkit/twist.hpp"

namespace lefkit {

// A parsed word file. Grammar (one item per line, '#' starts a comment):
//
//   genus <g>                          required, before any twist line
//   base disk|sphere                   required, before any twist line
//   section <k>                        optional (sphere-base h1 needs it)
//   twist <name>                       atlas curve: B0..Bg, a, b, c
//   twist <exp> <2g integers>          explicit class, exponent first,
//                                      basis order (a_1, b_1, ..., a_g, b_g)
//   twist <exp> <2g zeros> separating  explicit separating (zero) class
//
// A zero-class explicit line without the trailing `separating` token is
// accepted as separating with a recorded warning; strict mode makes it a
// parse error. A `separating` token on a nonzero class is always an error.
struct WordFile {
    TwistWord word;
    Base base = Base::disk;
    std::optional<mpz_class> section_square;
    std::vector<std::string> warnings;
};

// Throws parse_error with a line number for any grammar violation.
WordFile parse_word_file(std::istream& in, bool strict = false);
WordFile parse_word_file_text(const std::string& text, bool strict = false);

// Deterministic serialization; letters whose (class, exponent, separating)
// match an atlas curve are written by name, everything else explicitly.
// parse(serialize(w)) reproduces w exactly.
std::string serialize_word_file(const TwistWord& w, Base base,
                                const std::optional<mpz_class>& section = std::nullopt);

} // namespace lefkit
