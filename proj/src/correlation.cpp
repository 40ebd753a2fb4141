#include "qseq/correlation.hpp"

#include <stdexcept>

namespace qseq {

namespace {

void require_same_length(const Seq& a, const Seq& b) {
    if (a.size() != b.size()) throw std::invalid_argument("correlation: length mismatch");
    if (a.empty()) throw std::invalid_argument("correlation: empty sequence");
}

// floor division toward minus infinity.
std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t quot = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --quot;
    return quot;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t b) { return a - floor_div(a, b) * b; }

}  // namespace

Quat aperiodic_cross(const Seq& a, const Seq& b, std::int64_t t) {
    require_same_length(a, b);
    const auto n = static_cast<std::int64_t>(a.size());
    if (t < 0 || t > n) throw std::invalid_argument("aperiodic_cross: shift out of range");
    Quat sum{};
    for (std::int64_t r = 0; r + t < n; ++r) sum += (a[r] * b[r + t].conj()).value();
    return sum;
}

Quat periodic_cross(const Seq& a, const Seq& b, std::int64_t t) {
    require_same_length(a, b);
    const auto n = static_cast<std::int64_t>(a.size());
    const std::int64_t shift = floor_mod(t, n);
    Quat sum{};
    for (std::int64_t r = 0; r < n; ++r) {
        const std::int64_t s = r + shift >= n ? r + shift - n : r + shift;
        sum += (a[r] * b[s].conj()).value();
    }
    return sum;
}

Quat negaperiodic_cross(const Seq& a, const Seq& b, std::int64_t t) {
    require_same_length(a, b);
    const auto n = static_cast<std::int64_t>(a.size());
    // (-1)^floor((r+t)/n) depends on t only through its residue class mod 2n.
    const std::int64_t shift = floor_mod(t, 2 * n);
    Quat sum{};
    for (std::int64_t r = 0; r < n; ++r) {
        const std::int64_t pos = r + shift;
        const Quat term = (a[r] * b[pos % n].conj()).value();
        if ((pos / n) & 1)
            sum -= term;
        else
            sum += term;
    }
    return sum;
}

Quat aperiodic_auto(const Seq& a, std::int64_t t) { return aperiodic_cross(a, a, t); }
Quat periodic_auto(const Seq& a, std::int64_t t) { return periodic_cross(a, a, t); }
Quat negaperiodic_auto(const Seq& a, std::int64_t t) { return negaperiodic_cross(a, a, t); }

CorrelationProfile correlation_profile(const Seq& a, const Seq& b, CorrKind kind) {
    require_same_length(a, b);
    const auto n = static_cast<std::int64_t>(a.size());
    CorrelationProfile p;
    p.kind = kind;
    p.values.reserve(a.size());
    for (std::int64_t t = 0; t < n; ++t) {
        switch (kind) {
            case CorrKind::aperiodic: p.values.push_back(aperiodic_cross(a, b, t)); break;
            case CorrKind::periodic: p.values.push_back(periodic_cross(a, b, t)); break;
            case CorrKind::negaperiodic: p.values.push_back(negaperiodic_cross(a, b, t)); break;
        }
    }
    return p;
}

bool is_perfect(const Seq& a) {
    const auto n = static_cast<std::int64_t>(a.size());
    for (std::int64_t t = 1; t < n; ++t)
        if (!periodic_auto(a, t).is_zero()) return false;
    return true;
}

bool is_odd_perfect(const Seq& a) {
    const auto n = static_cast<std::int64_t>(a.size());
    for (std::int64_t t = 1; t < n; ++t)
        if (!negaperiodic_auto(a, t).is_zero()) return false;
    return true;
}

bool is_complementary_set(std::span<const Seq> seqs, CorrKind kind) {
    if (seqs.empty()) throw std::invalid_argument("is_complementary_set: empty set");
    const std::size_t n = seqs.front().size();
    for (const Seq& s : seqs)
        if (s.size() != n) throw std::invalid_argument("is_complementary_set: length mismatch");
    for (std::int64_t t = 1; t < static_cast<std::int64_t>(n); ++t) {
        Quat sum{};
        for (const Seq& s : seqs) {
            switch (kind) {
                case CorrKind::aperiodic: sum += aperiodic_auto(s, t); break;
                case CorrKind::periodic: sum += periodic_auto(s, t); break;
                case CorrKind::negaperiodic: sum += negaperiodic_auto(s, t); break;
            }
        }
        if (!sum.is_zero()) return false;
    }
    return true;
}

bool is_periodically_uncorrelated(std::span<const Seq> seqs) {
    if (seqs.empty()) throw std::invalid_argument("is_periodically_uncorrelated: empty set");
    const std::size_t n = seqs.front().size();
    for (const Seq& s : seqs)
        if (s.size() != n)
            throw std::invalid_argument("is_periodically_uncorrelated: length mismatch");
    for (std::size_t i = 0; i < seqs.size(); ++i)
        for (std::size_t j = 0; j < seqs.size(); ++j) {
            if (i == j) continue;
            for (std::int64_t t = 0; t < static_cast<std::int64_t>(n); ++t)
                if (!periodic_cross(seqs[i], seqs[j], t).is_zero()) return false;
        }
    return true;
}

Seq Matrix::column(std::size_t c) const {
    Seq out;
    out.reserve(rows);
    for (std::size_t r = 0; r < rows; ++r) out.push_back(at(r, c));
    return out;
}

Seq Matrix::concat_rows() const { return cells; }

bool has_array_orthogonality(const Matrix& m) {
    if (m.rows == 0 || m.cols == 0) throw std::invalid_argument("array orthogonality: empty matrix");
    if (m.rows % m.cols != 0)
        throw std::invalid_argument("array orthogonality: column length not a multiple of column count");
    std::vector<Seq> cols;
    cols.reserve(m.cols);
    for (std::size_t c = 0; c < m.cols; ++c) cols.push_back(m.column(c));
    return is_complementary_set(cols, CorrKind::periodic) && is_periodically_uncorrelated(cols);
}

bool is_perfect_array(const Matrix& m) {
    if (m.rows == 0 || m.cols == 0) throw std::invalid_argument("is_perfect_array: empty matrix");
    const auto n = static_cast<std::int64_t>(m.rows);
    const auto mm = static_cast<std::int64_t>(m.cols);
    for (std::int64_t t = 0; t < n; ++t)
        for (std::int64_t tp = 0; tp < mm; ++tp) {
            if (t == 0 && tp == 0) continue;
            Quat sum{};
            for (std::int64_t r = 0; r < n; ++r)
                for (std::int64_t s = 0; s < mm; ++s) {
                    const Unit x = m.at(static_cast<std::size_t>(r), static_cast<std::size_t>(s));
                    const Unit y = m.at(static_cast<std::size_t>((r + t) % n),
                                        static_cast<std::size_t>((s + tp) % mm));
                    sum += (x * y.conj()).value();
                }
            if (!sum.is_zero()) return false;
        }
    return true;
}

}  // namespace qseq
