#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qseq/correlation.hpp"
#include "qseq/design.hpp"

namespace qseq {

// Raised when a construction's inputs fail its preconditions or when a
// produced value fails its own postcondition re-check.
struct ConstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Provenance of a constructed value.  Every construction re-checks its
// postconditions before returning; `verified` lists the checks that passed
// (a failed check raises ConstructionError instead).  `notes` carries
// non-gating observations.
struct Receipt {
    std::string construction;
    std::vector<std::string> inputs;
    std::vector<std::string> verified;
    std::vector<std::string> notes;
    std::vector<Receipt> steps;
};

template <class T>
struct Constructed {
    T value;
    Receipt receipt;
};

// r-th entry x_{r mod n} * y_{r mod m} for 0 <= r < nm.  Requires coprime
// lengths, x perfect over Q8, y perfect over Q+; the product is perfect,
// and symmetric when both inputs are.
Constructed<Seq> periodic_product(const Seq& x, const Seq& y);

// r-th entry (-1)^(floor(r/n) + floor(r/m)) x_{r mod n} * y_{r mod m}.
// Requires coprime lengths with exactly one even and both inputs odd
// perfect; the product is odd perfect, and antipalindromic when both
// inputs are palindromic.
Constructed<Seq> odd_product(const Seq& x, const Seq& y);

// Alternating negation of every member; for odd lengths this exchanges
// periodic complementarity and negacomplementarity.  Involution.
Constructed<Quad> alternation_transfer(const Quad& q);

// (A,B,C,D) Williamson of even length n and (A',B',C',D') antipalindromic
// nega-Williamson of length n produce the length-4n Williamson quadruple
// with members interleave(doubled(X), negadoubled(X')).
Constructed<Quad> williamson_double_even(const Quad& williamson, const Quad& nega);

// Odd-length variant.  Takes the pre-shifted designs: members of
// `williamson_shifted` must be palindromic with the set periodic
// complementary ((n-1)/2 cyclic shifts of a Williamson set), members of
// `nega_shifted` must be antisymmetric with the set negacomplementary
// ((n+1)/2 negacyclic shifts of a palindromic nega-Williamson set).
// Output members are interleave(negadoubled(X'), doubled(X)), a Williamson
// quadruple of length 4n.
Constructed<Quad> williamson_double_odd(const Quad& williamson_shifted, const Quad& nega_shifted);

// Convenience wrapper: applies the (n-1)/2 cyclic and (n+1)/2 negacyclic
// shifts to the unshifted designs, then calls williamson_double_odd.
Constructed<Quad> williamson_double_odd_from_designs(const Quad& williamson, const Quad& nega);

// n/2 negacyclic shifts of every member of an even-length nega-Williamson
// quadruple, converting between the palindromic and antipalindromic
// classes.  `target` names the desired output class.
Constructed<Quad> pal_antipal_convert(const Quad& nega, NegaSymmetry target);

// Negadoubling every member of an aperiodic-complementary set yields a
// negacomplementary set of doubled length.
Constructed<std::vector<Seq>> negadouble_set(const std::vector<Seq>& seqs);

// Palindromic nega-Williamson quadruples with the Q8-property built from a
// Golay pair (A, B) of length n by block concatenation; `which` selects
// the length-4n (1) or length-8n (2) family.
Constructed<Quad> nega_quad_from_golay(const Seq& a, const Seq& b, int which);

enum class OddConvert { williamson_to_nega, nega_to_williamson };

// Odd-length correspondence: alternate-negate every member and apply
// (n-1)/2 negacyclic shifts, turning a Williamson quadruple into a
// palindromic nega-Williamson quadruple; the inverse direction undoes it.
Constructed<Quad> williamson_nega_convert_odd(const Quad& q, OddConvert direction);

// [-A; jB; k rev(B); i rev(A); iA; kB; j rev(B); -rev(A)] for a Golay pair
// (A, B) of length n: a palindromic odd perfect Q8-sequence of length 8n.
Constructed<Seq> odd_perfect_from_golay(const Seq& a, const Seq& b);

// (A, B) -> (interleave(A, B), interleave(A, -B)): a Golay pair of doubled
// length.
Constructed<std::pair<Seq, Seq>> golay_interleave_double(const Seq& a, const Seq& b);

// Williamson quadruple of length 2^t with the Q8-property together with
// its encoding, a symmetric perfect Q8-sequence.  Every intermediate is
// re-verified; receipts record the per-level inputs (the length-(2^t / 4)
// antipalindromic nega quadruples come from the length-4n family at level
// 16 and the length-8n family from level 32 upward, which is what makes
// the n >= 32 outputs qualify for matrix extraction).
struct PipelineResult {
    Quad williamson;
    Seq perfect;
    Receipt receipt;
};

PipelineResult power_of_two_pipeline(int t);

// Row-major (n/cols) x cols matrix of the sequence entries.  The receipt
// notes whether the matrix has array orthogonality (true for pipeline
// outputs of length 16 and of length >= 32).
Constructed<Matrix> matrix_from_perfect(const Seq& p, std::size_t cols = 4);

// Exhaustive confirmation that no antipalindromic nega-Williamson
// quadruple of odd length n > 1 exists, with the row-sum counting argument
// that explains it.  For n = 1 reports the quadruple that does exist.
struct NonexistenceCertificate {
    std::size_t n = 0;
    bool exists = false;
    std::uint64_t candidates_checked = 0;
    std::string rowsum_argument;
};

NonexistenceCertificate antipal_nega_odd_nonexistence(std::size_t n);

}  // namespace qseq
