#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qseq/sequence.hpp"

namespace qseq {

enum class CorrKind { aperiodic, periodic, negaperiodic };

// Aperiodic crosscorrelation C_{A,B}(t) = sum_{r=0}^{n-t-1} a_r * conj(b_{r+t})
// for 0 <= t <= n (the value at t = n is the empty sum).  The factor order
// a_r * conj(b_{r+t}) matters; entries do not commute.
Quat aperiodic_cross(const Seq& a, const Seq& b, std::int64_t t);

// Periodic crosscorrelation, extended form over any integer t:
//   R_{A,B}(t) = sum_{r=0}^{n-1} a_r * conj(b_{(r+t) mod n}).
// For 0 <= t < n this equals C_{A,B}(t) + conj(C_{B,A}(n-t)).
Quat periodic_cross(const Seq& a, const Seq& b, std::int64_t t);

// Negaperiodic crosscorrelation, extended form over any integer t:
//   R^_{A,B}(t) = sum_{r=0}^{n-1} (-1)^floor((r+t)/n) a_r * conj(b_{(r+t) mod n})
// with floor toward minus infinity.  For 0 <= t < n this equals
// C_{A,B}(t) - conj(C_{B,A}(n-t)), and R^(t+n) = -R^(t).
Quat negaperiodic_cross(const Seq& a, const Seq& b, std::int64_t t);

Quat aperiodic_auto(const Seq& a, std::int64_t t);
Quat periodic_auto(const Seq& a, std::int64_t t);
Quat negaperiodic_auto(const Seq& a, std::int64_t t);

// Crosscorrelation values of the given kind for shifts t in [0, n).
struct CorrelationProfile {
    CorrKind kind = CorrKind::periodic;
    std::vector<Quat> values;
};

CorrelationProfile correlation_profile(const Seq& a, const Seq& b, CorrKind kind);

// R_A(t) = 0 for all 1 <= t < n.
bool is_perfect(const Seq& a);

// R^_A(t) = 0 for all 1 <= t < n.
bool is_odd_perfect(const Seq& a);

// Sum over the set of the chosen autocorrelation vanishes for 1 <= t < n.
bool is_complementary_set(std::span<const Seq> seqs, CorrKind kind);

// Every ordered pair of distinct members has R_{A,B}(t) = 0 for ALL
// 0 <= t < n (including t = 0).
bool is_periodically_uncorrelated(std::span<const Seq> seqs);

// Row-major grid of units.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Unit> cells;

    Unit at(std::size_t r, std::size_t c) const { return cells[r * cols + c]; }
    Seq column(std::size_t c) const;
    Seq concat_rows() const;
};

// Columns are periodic complementary and pairwise periodically
// uncorrelated.  Requires the column length to be a multiple of the column
// count.
bool has_array_orthogonality(const Matrix& m);

// sum_{r,s} a_{r,s} * conj(a_{(r+t) mod rows, (s+t') mod cols}) = 0 for all
// (t, t') != (0, 0).
bool is_perfect_array(const Matrix& m);

}  // namespace qseq
