#include "qseq/sequence.hpp"

#include <algorithm>
#include <stdexcept>

namespace qseq {

bool is_pm1(const Seq& x) {
    return std::all_of(x.begin(), x.end(), [](Unit u) { return u.is_pm1(); });
}

Seq negated(const Seq& x) {
    Seq out(x.size());
    std::transform(x.begin(), x.end(), out.begin(), [](Unit u) { return -u; });
    return out;
}

namespace {

// count mod m as a true mathematical residue in [0, m).
std::int64_t residue(std::int64_t count, std::int64_t m) {
    std::int64_t r = count % m;
    if (r < 0) r += m;
    return r;
}

}  // namespace

Seq cyclic_shift(const Seq& x, std::int64_t count) {
    if (x.empty()) throw std::invalid_argument("cyclic_shift: empty sequence");
    const auto n = static_cast<std::int64_t>(x.size());
    const std::int64_t k = residue(count, n);
    Seq out(x.size());
    for (std::int64_t r = 0; r < n; ++r) out[(r + k) % n] = x[r];
    return out;
}

Seq negacyclic_shift(const Seq& x, std::int64_t count) {
    if (x.empty()) throw std::invalid_argument("negacyclic_shift: empty sequence");
    const auto n = static_cast<std::int64_t>(x.size());
    const std::int64_t k = residue(count, 2 * n);
    Seq out(x.size());
    for (std::int64_t r = 0; r < n; ++r) {
        // Entry r travels to position r+k; every full wrap past the end
        // negates it once.
        const std::int64_t pos = r + k;
        const std::int64_t wraps = pos / n;
        const Unit v = (wraps & 1) ? -x[r] : x[r];
        out[pos % n] = v;
    }
    return out;
}

Seq alternate_negate(const Seq& x) {
    Seq out(x.size());
    for (std::size_t r = 0; r < x.size(); ++r) out[r] = (r & 1) ? -x[r] : x[r];
    return out;
}

Seq doubled(const Seq& x) {
    Seq out;
    out.reserve(2 * x.size());
    out.insert(out.end(), x.begin(), x.end());
    out.insert(out.end(), x.begin(), x.end());
    return out;
}

Seq negadoubled(const Seq& x) {
    Seq out;
    out.reserve(2 * x.size());
    out.insert(out.end(), x.begin(), x.end());
    for (Unit u : x) out.push_back(-u);
    return out;
}

Seq interleave(const Seq& x, const Seq& y) {
    if (x.size() != y.size()) throw std::invalid_argument("interleave: length mismatch");
    Seq out;
    out.reserve(2 * x.size());
    for (std::size_t r = 0; r < x.size(); ++r) {
        out.push_back(x[r]);
        out.push_back(y[r]);
    }
    return out;
}

std::pair<Seq, Seq> deinterleave(const Seq& x) {
    if (x.size() % 2 != 0) throw std::invalid_argument("deinterleave: odd length");
    Seq even, odd;
    even.reserve(x.size() / 2);
    odd.reserve(x.size() / 2);
    for (std::size_t r = 0; r < x.size(); r += 2) {
        even.push_back(x[r]);
        odd.push_back(x[r + 1]);
    }
    return {std::move(even), std::move(odd)};
}

Seq reversed(const Seq& x) { return Seq(x.rbegin(), x.rend()); }

Seq concat(const Seq& x, const Seq& y) {
    Seq out;
    out.reserve(x.size() + y.size());
    out.insert(out.end(), x.begin(), x.end());
    out.insert(out.end(), y.begin(), y.end());
    return out;
}

Seq scalar_premul(Unit u, const Seq& x) {
    Seq out(x.size());
    std::transform(x.begin(), x.end(), out.begin(), [u](Unit v) { return u * v; });
    return out;
}

Quat rowsum(const Seq& x) {
    Quat sum{};
    for (Unit u : x) sum += u.value();
    return sum;
}

SymmetryClass classify_symmetry(const Seq& x) {
    const auto n = static_cast<std::int64_t>(x.size());
    SymmetryClass c{true, true, true, true};
    for (std::int64_t t = 1; t < n; ++t)
        if (x[t] != x[n - t]) {
            c.symmetric = false;
            break;
        }
    for (std::int64_t t = 0; t < n; ++t)
        if (x[t] != x[n - t - 1]) {
            c.palindromic = false;
            break;
        }
    // 0 <= t < (n-1)/2, i.e. 2t < n-1.
    for (std::int64_t t = 0; 2 * t < n - 1; ++t)
        if (x[t] != -x[n - t - 1]) {
            c.antipalindromic = false;
            break;
        }
    // 1 <= t < n/2, i.e. 2t < n.
    for (std::int64_t t = 1; 2 * t < n; ++t)
        if (x[t] != -x[n - t]) {
            c.antisymmetric = false;
            break;
        }
    return c;
}

bool is_symmetric(const Seq& x) { return classify_symmetry(x).symmetric; }
bool is_palindromic(const Seq& x) { return classify_symmetry(x).palindromic; }
bool is_antipalindromic(const Seq& x) { return classify_symmetry(x).antipalindromic; }
bool is_antisymmetric(const Seq& x) { return classify_symmetry(x).antisymmetric; }

}  // namespace qseq
