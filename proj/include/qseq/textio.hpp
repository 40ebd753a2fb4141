#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qseq/sequence.hpp"

namespace qseq {

// Compact text form, one token per entry:
//   + - i I j J k K   the Q8 elements (capital = negation)
//   q Q               +q and -q, q = (1+i+j+k)/2
//   ~x                q * (element of x's token), x in {+,-,i,I,j,J,k,K};
//                     ~+ and ~- are accepted on input and emitted as q, Q
// Whitespace between tokens is ignored on input.  Entries outside Q+ have
// no compact token and are rejected; use the JSON form for them.

struct SeqParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Seq parse_sequence(std::string_view text);

std::string format_entry(Unit u);
std::string format_sequence(const Seq& s);

// JSON form: array of [w2, x2, y2, z2] doubled-coordinate integer tuples.
nlohmann::json sequence_to_json(const Seq& s);
Seq sequence_from_json(const nlohmann::json& j);

// Line-oriented catalog format:
//   name length properties sequence
// where properties is a comma-separated list of tokens among
//   palindromic antipalindromic symmetric antisymmetric
//   perfect odd-perfect q8 qplus
// '#' starts a comment, blank lines are skipped, and whitespace inside the
// sequence field is ignored.
struct CatalogEntry {
    std::string name;
    std::size_t declared_length = 0;
    std::vector<std::string> properties;
    std::string sequence_text;
};

struct CatalogEntryReport {
    std::string name;
    bool pass = false;
    std::string detail;  // empty on pass, first violated check otherwise
};

struct CatalogReport {
    std::vector<CatalogEntryReport> entries;
    std::vector<std::string> parse_errors;
    bool all_pass = false;
};

CatalogReport verify_catalog(std::istream& in);
CatalogReport verify_catalog_file(const std::string& path);

}  // namespace qseq
