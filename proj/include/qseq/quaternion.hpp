#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>

namespace qseq {

// Exact quaternion w + x*i + y*j + z*k with half-integer coordinates,
// stored doubled: (w2, x2, y2, z2) = (2w, 2x, 2y, 2z).  All arithmetic is
// integer arithmetic on the doubled coordinates; nothing here is floating
// point.
struct Quat {
    std::int64_t w2 = 0;
    std::int64_t x2 = 0;
    std::int64_t y2 = 0;
    std::int64_t z2 = 0;

    friend constexpr bool operator==(const Quat&, const Quat&) = default;

    constexpr bool is_zero() const { return w2 == 0 && x2 == 0 && y2 == 0 && z2 == 0; }
};

// Quaternion with integer coordinates (w, x, y, z), stored doubled.
constexpr Quat quat_from_int(std::int64_t w, std::int64_t x, std::int64_t y, std::int64_t z) {
    return Quat{2 * w, 2 * x, 2 * y, 2 * z};
}

constexpr Quat operator+(const Quat& p, const Quat& q) {
    return Quat{p.w2 + q.w2, p.x2 + q.x2, p.y2 + q.y2, p.z2 + q.z2};
}

constexpr Quat operator-(const Quat& p, const Quat& q) {
    return Quat{p.w2 - q.w2, p.x2 - q.x2, p.y2 - q.y2, p.z2 - q.z2};
}

constexpr Quat operator-(const Quat& p) { return Quat{-p.w2, -p.x2, -p.y2, -p.z2}; }

constexpr Quat& operator+=(Quat& p, const Quat& q) {
    p.w2 += q.w2;
    p.x2 += q.x2;
    p.y2 += q.y2;
    p.z2 += q.z2;
    return p;
}

constexpr Quat& operator-=(Quat& p, const Quat& q) {
    p.w2 -= q.w2;
    p.x2 -= q.x2;
    p.y2 -= q.y2;
    p.z2 -= q.z2;
    return p;
}

// Hamilton product.  The doubled coordinates of p*q are the integer
// quaternion product of the doubled tuples divided by 2; the division is
// exact exactly when both operands lie in the Hurwitz ring (all coordinates
// integral or all half-integral), which every value in this library does.
constexpr Quat quat_mul(const Quat& p, const Quat& q) {
    const std::int64_t w = p.w2 * q.w2 - p.x2 * q.x2 - p.y2 * q.y2 - p.z2 * q.z2;
    const std::int64_t x = p.w2 * q.x2 + p.x2 * q.w2 + p.y2 * q.z2 - p.z2 * q.y2;
    const std::int64_t y = p.w2 * q.y2 - p.x2 * q.z2 + p.y2 * q.w2 + p.z2 * q.x2;
    const std::int64_t z = p.w2 * q.z2 + p.x2 * q.y2 - p.y2 * q.x2 + p.z2 * q.w2;
    if ((w | x | y | z) & 1)
        throw std::invalid_argument("quat_mul: operands not in the Hurwitz ring");
    return Quat{w / 2, x / 2, y / 2, z / 2};
}

constexpr Quat quat_conj(const Quat& p) { return Quat{p.w2, -p.x2, -p.y2, -p.z2}; }

// 4 * (squared norm); equals 4 for the 24 unit Hurwitz quaternions.
constexpr std::int64_t norm4(const Quat& p) {
    return p.w2 * p.w2 + p.x2 * p.x2 + p.y2 * p.y2 + p.z2 * p.z2;
}

namespace detail {

// Canonical ordering of the 24 unit Hurwitz quaternions:
//   0..7   : 1, -1, i, -i, j, -j, k, -k
//   8..23  : the 16 half-coordinate units (+-1 +- i +- j +- k)/2 in
//            sign-lexicographic order, w sign most significant, + before -;
//            so index 8 is q = (1+i+j+k)/2 and index 23 is -q.
struct UnitTables {
    std::array<Quat, 24> value{};
    std::array<std::array<std::uint8_t, 24>, 24> mul{};
    std::array<std::uint8_t, 24> conj{};
    std::array<std::uint8_t, 24> neg{};
    std::array<bool, 24> in_qq8{};          // membership in q*Q8
    std::array<std::uint8_t, 24> qq8_of{};  // u with value[idx] == q * value[u], else 0xFF
};

constexpr UnitTables build_unit_tables() {
    UnitTables t{};
    t.value[0] = quat_from_int(1, 0, 0, 0);
    t.value[1] = quat_from_int(-1, 0, 0, 0);
    t.value[2] = quat_from_int(0, 1, 0, 0);
    t.value[3] = quat_from_int(0, -1, 0, 0);
    t.value[4] = quat_from_int(0, 0, 1, 0);
    t.value[5] = quat_from_int(0, 0, -1, 0);
    t.value[6] = quat_from_int(0, 0, 0, 1);
    t.value[7] = quat_from_int(0, 0, 0, -1);
    for (int s = 0; s < 16; ++s) {
        const auto sign = [s](int bit) { return (s >> (3 - bit)) & 1 ? -1 : 1; };
        t.value[8 + s] = Quat{sign(0), sign(1), sign(2), sign(3)};
    }

    const auto index_of = [&t](const Quat& v) -> int {
        for (int u = 0; u < 24; ++u)
            if (t.value[u] == v) return u;
        throw std::logic_error("unit table: product left the 24 units");
    };

    for (int a = 0; a < 24; ++a) {
        for (int b = 0; b < 24; ++b)
            t.mul[a][b] = static_cast<std::uint8_t>(index_of(quat_mul(t.value[a], t.value[b])));
        t.conj[a] = static_cast<std::uint8_t>(index_of(quat_conj(t.value[a])));
        t.neg[a] = static_cast<std::uint8_t>(index_of(-t.value[a]));
    }

    for (auto& f : t.qq8_of) f = 0xFF;
    constexpr int q_index = 8;
    for (int u = 0; u < 8; ++u) {
        const int p = index_of(quat_mul(t.value[q_index], t.value[u]));
        t.in_qq8[p] = true;
        t.qq8_of[p] = static_cast<std::uint8_t>(u);
    }
    return t;
}

inline constexpr UnitTables unit_tables = build_unit_tables();

}  // namespace detail

// One of the 24 unit Hurwitz quaternions, interned as an index into the
// canonical ordering above.  Products, conjugates, and negations are table
// lookups; the tables are built at compile time from quat_mul.
class Unit {
public:
    static constexpr int count = 24;

    constexpr Unit() = default;  // 1

    static constexpr Unit from_index(int idx) {
        if (idx < 0 || idx >= count) throw std::out_of_range("Unit::from_index");
        Unit u;
        u.idx_ = static_cast<std::uint8_t>(idx);
        return u;
    }

    static constexpr std::optional<Unit> from_quat(const Quat& v) {
        for (int u = 0; u < count; ++u)
            if (detail::unit_tables.value[u] == v) return from_index(u);
        return std::nullopt;
    }

    constexpr int index() const { return idx_; }
    constexpr const Quat& value() const { return detail::unit_tables.value[idx_]; }

    constexpr bool in_q8() const { return idx_ < 8; }
    constexpr bool in_qq8() const { return detail::unit_tables.in_qq8[idx_]; }
    constexpr bool in_qplus() const { return in_q8() || in_qq8(); }
    constexpr bool is_pm1() const { return idx_ < 2; }

    // For u in q*Q8, the Q8 unit v with u == q * v.
    constexpr std::optional<Unit> qq8_factor() const {
        const std::uint8_t f = detail::unit_tables.qq8_of[idx_];
        if (f == 0xFF) return std::nullopt;
        return from_index(f);
    }

    constexpr Unit conj() const { return from_index(detail::unit_tables.conj[idx_]); }

    friend constexpr Unit operator*(Unit a, Unit b) {
        return from_index(detail::unit_tables.mul[a.idx_][b.idx_]);
    }

    friend constexpr Unit operator-(Unit a) { return from_index(detail::unit_tables.neg[a.idx_]); }

    friend constexpr bool operator==(Unit, Unit) = default;

private:
    std::uint8_t idx_ = 0;
};

inline constexpr Unit unit_one = Unit::from_index(0);
inline constexpr Unit unit_minus_one = Unit::from_index(1);
inline constexpr Unit unit_i = Unit::from_index(2);
inline constexpr Unit unit_j = Unit::from_index(4);
inline constexpr Unit unit_k = Unit::from_index(6);
inline constexpr Unit unit_q = Unit::from_index(8);  // (1+i+j+k)/2

struct AlphabetMembership {
    bool in_q8 = false;
    bool in_qplus = false;
    bool in_qq8 = false;
};

constexpr AlphabetMembership alphabet_membership(Unit u) {
    return AlphabetMembership{u.in_q8(), u.in_qplus(), u.in_qq8()};
}

}  // namespace qseq
