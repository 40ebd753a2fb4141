#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qseq/quaternion.hpp"

namespace qseq {

// A finite sequence of unit Hurwitz quaternions.  Operations never mutate
// their inputs; they return new sequences.
using Seq = std::vector<Unit>;

bool is_pm1(const Seq& x);

// Entrywise negation.
Seq negated(const Seq& x);

// count applications of [a_0,...,a_{n-1}] -> [a_{n-1},a_0,...,a_{n-2}].
// Any integer count is accepted and reduced modulo the period n.
Seq cyclic_shift(const Seq& x, std::int64_t count);

// count applications of [a_0,...,a_{n-1}] -> [-a_{n-1},a_0,...,a_{n-2}];
// the period is 2n.  Any integer count is accepted.
Seq negacyclic_shift(const Seq& x, std::int64_t count);

// Entry r multiplied by (-1)^r.  Involution.
Seq alternate_negate(const Seq& x);

// [x_0,...,x_{n-1},x_0,...,x_{n-1}]
Seq doubled(const Seq& x);

// [x_0,...,x_{n-1},-x_0,...,-x_{n-1}]
Seq negadoubled(const Seq& x);

// [x_0,y_0,x_1,y_1,...,x_{n-1},y_{n-1}]; lengths must match.
Seq interleave(const Seq& x, const Seq& y);

// (even-index entries, odd-index entries); inverse of interleave.
// The length must be even.
std::pair<Seq, Seq> deinterleave(const Seq& x);

Seq reversed(const Seq& x);

Seq concat(const Seq& x, const Seq& y);

// Multiplies every entry on the left by u.
Seq scalar_premul(Unit u, const Seq& x);

// Sum of the entries.
Quat rowsum(const Seq& x);

// The four symmetry predicates, with index ranges exactly as defined:
//   symmetric       a_t = a_{n-t}      for 1 <= t < n
//   palindromic     a_t = a_{n-t-1}    for 0 <= t < n
//   antipalindromic a_t = -a_{n-t-1}   for 0 <= t < (n-1)/2
//   antisymmetric   a_t = -a_{n-t}     for 1 <= t < n/2
// A length-1 sequence satisfies all four (every constraint range is empty).
struct SymmetryClass {
    bool symmetric = false;
    bool palindromic = false;
    bool antipalindromic = false;
    bool antisymmetric = false;
};

SymmetryClass classify_symmetry(const Seq& x);

bool is_symmetric(const Seq& x);
bool is_palindromic(const Seq& x);
bool is_antipalindromic(const Seq& x);
bool is_antisymmetric(const Seq& x);

}  // namespace qseq
