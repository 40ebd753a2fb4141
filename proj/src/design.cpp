#include "qseq/design.hpp"

#include <stdexcept>

namespace qseq {

namespace {

// 4-bit pattern with bit 3..0 = (a,b,c,d), bit set = entry is -1.
int sign_pattern(Unit a, Unit b, Unit c, Unit d) {
    if (!a.is_pm1() || !b.is_pm1() || !c.is_pm1() || !d.is_pm1())
        throw std::invalid_argument("entry_encode: entries must be +-1");
    return (a == unit_minus_one ? 8 : 0) | (b == unit_minus_one ? 4 : 0) |
           (c == unit_minus_one ? 2 : 0) | (d == unit_minus_one ? 1 : 0);
}

struct CorrespondenceTable {
    std::array<Unit, 16> encode{};  // sign pattern -> Q+ element
    std::array<int, 24> decode{};   // unit index -> sign pattern, -1 outside Q+
};

CorrespondenceTable build_correspondence() {
    CorrespondenceTable t;
    const Unit qi = unit_q * unit_i;
    const Unit qj = unit_q * unit_j;
    const Unit qk = unit_q * unit_k;
    const std::array<std::pair<int, Unit>, 8> base{{
        {0b1111, unit_one},
        {0b0110, unit_i},
        {0b0011, unit_j},
        {0b0101, unit_k},
        {0b0111, unit_q},
        {0b0010, qi},
        {0b0001, qj},
        {0b0100, qk},
    }};
    for (const auto& [pattern, value] : base) {
        t.encode[pattern] = value;
        t.encode[pattern ^ 0b1111] = -value;  // (-a,-b,-c,-d) -> -s
    }
    t.decode.fill(-1);
    for (int p = 0; p < 16; ++p) {
        const int idx = t.encode[p].index();
        if (t.decode[idx] != -1) throw std::logic_error("correspondence table is not injective");
        t.decode[idx] = p;
    }
    return t;
}

const CorrespondenceTable& correspondence() {
    static const CorrespondenceTable t = build_correspondence();
    return t;
}

}  // namespace

void require_pm1_quad(const Quad& q) {
    const std::size_t n = q.m[0].size();
    if (n == 0) throw std::invalid_argument("quad: empty sequences");
    for (const Seq& s : q.m) {
        if (s.size() != n) throw std::invalid_argument("quad: length mismatch");
        if (!is_pm1(s)) throw std::invalid_argument("quad: entries must be +-1");
    }
}

bool is_golay_pair(const Seq& a, const Seq& b) {
    if (a.size() != b.size() || a.empty())
        throw std::invalid_argument("is_golay_pair: length mismatch");
    if (!is_pm1(a) || !is_pm1(b))
        throw std::invalid_argument("is_golay_pair: entries must be +-1");
    const auto n = static_cast<std::int64_t>(a.size());
    for (std::int64_t t = 1; t < n; ++t)
        if (!(aperiodic_auto(a, t) + aperiodic_auto(b, t)).is_zero()) return false;
    return true;
}

bool is_williamson(const Quad& q) {
    require_pm1_quad(q);
    for (const Seq& s : q.m)
        if (!is_symmetric(s)) return false;
    return is_complementary_set(q.m, CorrKind::periodic);
}

bool is_nega_williamson(const Quad& q, NegaSymmetry require) {
    require_pm1_quad(q);
    for (const Seq& s : q.m) {
        if (require == NegaSymmetry::palindromic && !is_palindromic(s)) return false;
        if (require == NegaSymmetry::antipalindromic && !is_antipalindromic(s)) return false;
    }
    return is_complementary_set(q.m, CorrKind::negaperiodic);
}

bool has_q8_property(const Quad& q) {
    require_pm1_quad(q);
    for (std::size_t r = 0; r < q.length(); ++r)
        if (q.m[0][r] * q.m[1][r] * q.m[2][r] * q.m[3][r] != unit_one) return false;
    return true;
}

bool is_amicable(const Quad& q) {
    require_pm1_quad(q);
    const auto n = static_cast<std::int64_t>(q.length());
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            for (std::int64_t t = 0; t < n; ++t)
                if (periodic_cross(q.m[i], q.m[j], t) != periodic_cross(q.m[j], q.m[i], t))
                    return false;
    return true;
}

bool is_williamson_type(const Quad& q) {
    return is_amicable(q) && is_complementary_set(q.m, CorrKind::periodic);
}

Unit entry_encode(Unit a, Unit b, Unit c, Unit d) {
    return correspondence().encode[sign_pattern(a, b, c, d)];
}

std::array<Unit, 4> entry_decode(Unit s) {
    const int pattern = correspondence().decode[s.index()];
    if (pattern < 0) throw std::invalid_argument("entry_decode: entry outside Q+");
    const auto sign = [pattern](int bit) {
        return (pattern >> bit) & 1 ? unit_minus_one : unit_one;
    };
    return {sign(3), sign(2), sign(1), sign(0)};
}

QuadEncoding quad_encode(const Quad& q) {
    require_pm1_quad(q);
    QuadEncoding out;
    out.seq.reserve(q.length());
    for (std::size_t r = 0; r < q.length(); ++r)
        out.seq.push_back(entry_encode(q.m[0][r], q.m[1][r], q.m[2][r], q.m[3][r]));
    out.williamson_type_verified = is_williamson_type(q);
    return out;
}

Quad quad_decode(const Seq& s) {
    if (s.empty()) throw std::invalid_argument("quad_decode: empty sequence");
    Quad q;
    for (Seq& member : q.m) member.reserve(s.size());
    for (Unit u : s) {
        const auto signs = entry_decode(u);
        for (std::size_t i = 0; i < 4; ++i) q.m[i].push_back(signs[i]);
    }
    return q;
}

}  // namespace qseq
