#pragma once

#include <array>
#include <cstdint>

#include "qseq/correlation.hpp"
#include "qseq/sequence.hpp"

namespace qseq {

// Ordered quadruple (A, B, C, D) of equal-length {+1,-1} sequences.
struct Quad {
    std::array<Seq, 4> m{};

    std::size_t length() const { return m[0].size(); }

    friend bool operator==(const Quad&, const Quad&) = default;
};

// Throws unless all four members have the same nonzero length and {+1,-1}
// entries.
void require_pm1_quad(const Quad& q);

// C_A(t) + C_B(t) = 0 for all 1 <= t < n, both sequences {+1,-1}.
bool is_golay_pair(const Seq& a, const Seq& b);

// All four members symmetric and the quadruple periodic complementary.
bool is_williamson(const Quad& q);

enum class NegaSymmetry { none, palindromic, antipalindromic };

// Negacomplementary, with an optional uniform symmetry-class requirement on
// every member.
bool is_nega_williamson(const Quad& q, NegaSymmetry require = NegaSymmetry::none);

// a_r * b_r * c_r * d_r = +1 for every position r.
bool has_q8_property(const Quad& q);

// R_{X,Y}(t) = R_{Y,X}(t) for all t and all member pairs.
bool is_amicable(const Quad& q);

// Periodic complementary and pairwise amicable.
bool is_williamson_type(const Quad& q);

// Entrywise correspondence between sign quadruples and the sixteen
// elements of Q+ = Q8 union q*Q8:
//   (a,b,c,d): ----  +--+  ++--  +-+-  +---  ++-+  +++-  +-++
//   value    :  1     i     j     k     q     qi    qj    qk
// with (-a,-b,-c,-d) mapped to the negated value.  The map is a bijection
// {+-1}^4 <-> Q+.
Unit entry_encode(Unit a, Unit b, Unit c, Unit d);
std::array<Unit, 4> entry_decode(Unit s);

// Entrywise encoding of a quadruple.  Always computable for {+1,-1} quads;
// the output is perfect precisely when the quad is Williamson-type, so the
// result reports whether that precondition held.
struct QuadEncoding {
    Seq seq;
    bool williamson_type_verified = false;
};

QuadEncoding quad_encode(const Quad& q);

// Inverse of quad_encode; every entry must lie in Q+.
Quad quad_decode(const Seq& s);

}  // namespace qseq
