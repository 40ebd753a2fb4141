#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qseq/design.hpp"

namespace qseq {

// Bit-packed {1,-1} sequences (bit r set means entry r is -1) with integer
// correlation kernels.  The kernels are used to drive exhaustive searches;
// every survivor is re-verified through the generic quaternion path, and
// the two routes are compared directly by the property tests.
namespace packed {

struct PackedSeq {
    std::uint64_t bits = 0;
    std::size_t n = 0;
};

// Requires a {1,-1} sequence of length 1..63.
PackedSeq pack(const Seq& x);
Seq unpack(const PackedSeq& x);

std::int64_t aperiodic_cross(const PackedSeq& a, const PackedSeq& b, std::size_t t);
std::int64_t periodic_cross(const PackedSeq& a, const PackedSeq& b, std::int64_t t);
std::int64_t negaperiodic_cross(const PackedSeq& a, const PackedSeq& b, std::int64_t t);

}  // namespace packed

// Deterministic display order: entrywise comparison of canonical unit
// indices (1, -1, i, -i, j, -j, k, -k, then the half-coordinate units),
// first entry most significant; shorter sequences come first.  For {1,-1}
// sequences this is the usual lexicographic order with '+' before '-'.
bool seq_display_less(const Seq& a, const Seq& b);

enum class SearchKind {
    perfect,
    odd_perfect,
    golay_pair,
    williamson,
    williamson_type,
    nega_williamson,
};

enum class SearchAlphabet { q8, qplus };

struct SearchSpec {
    SearchKind kind = SearchKind::perfect;
    std::size_t length = 1;
    SearchAlphabet alphabet = SearchAlphabet::q8;       // perfect / odd_perfect only
    NegaSymmetry nega_symmetry = NegaSymmetry::none;    // nega_williamson only
    bool require_q8_property = false;                   // quadruple kinds only
    std::size_t result_cap = 0;                         // stored survivors; 0 keeps all
};

// Raised when a search's space exceeds the supported exhaustive range; the
// message names the limit.
struct SearchBoundsError : std::domain_error {
    using std::domain_error::domain_error;
};

// Raw (unreduced) survivors of an exhaustive scan, in display order.
// `matches` is always the exact count; the stored lists are truncated to
// the result cap when one is set.  Exactly one of seqs/pairs/quads is
// populated, matching the kind.
struct SearchResult {
    SearchSpec spec;
    std::uint64_t candidates = 0;  // size of the scanned space
    std::uint64_t matches = 0;     // satisfying assignments, exact
    std::vector<Seq> seqs;
    std::vector<std::pair<Seq, Seq>> pairs;
    std::vector<Quad> quads;
};

// Exhaustive, deterministic enumeration.  Supported ranges: perfect and
// odd-perfect sequences up to length 8 over Q8 and length 5 over Q+; Golay
// pairs up to length 10; Williamson quadruples up to length 8; Williamson-
// type quadruples up to length 6; nega-Williamson quadruples up to length
// 6 unconstrained and length 8 with a palindromic or antipalindromic
// symmetry requirement.  Beyond these, SearchBoundsError is raised.
SearchResult enumerate_designs(const SearchSpec& spec);

// Number of Williamson quadruples of length n with the Q8-property.
std::uint64_t count_williamson_q8(std::size_t n);

}  // namespace qseq
