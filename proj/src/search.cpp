#include "qseq/search.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "parallel.hpp"

namespace qseq {

namespace packed {

namespace {

constexpr std::uint64_t mask_bits(std::size_t k) {
    return k >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << k) - 1);
}

std::int64_t floor_mod(std::int64_t a, std::int64_t b) {
    std::int64_t m = a % b;
    if (m < 0) m += b;
    return m;
}

void require_pair(const PackedSeq& a, const PackedSeq& b) {
    if (a.n != b.n || a.n == 0)
        throw std::invalid_argument("packed correlation: length mismatch or empty");
}

}  // namespace

PackedSeq pack(const Seq& x) {
    if (x.empty() || x.size() > 63)
        throw std::invalid_argument("pack: length must be between 1 and 63");
    PackedSeq p;
    p.n = x.size();
    for (std::size_t r = 0; r < x.size(); ++r) {
        if (x[r] == unit_minus_one)
            p.bits |= std::uint64_t{1} << r;
        else if (!(x[r] == unit_one))
            throw std::invalid_argument("pack: entries must be +1 or -1");
    }
    return p;
}

Seq unpack(const PackedSeq& x) {
    Seq s;
    s.reserve(x.n);
    for (std::size_t r = 0; r < x.n; ++r)
        s.push_back((x.bits >> r) & 1 ? unit_minus_one : unit_one);
    return s;
}

std::int64_t aperiodic_cross(const PackedSeq& a, const PackedSeq& b, std::size_t t) {
    require_pair(a, b);
    if (t > a.n) throw std::invalid_argument("packed aperiodic_cross: shift out of range");
    const std::size_t w = a.n - t;
    const auto disagree = std::popcount((a.bits ^ (b.bits >> t)) & mask_bits(w));
    return static_cast<std::int64_t>(w) - 2 * static_cast<std::int64_t>(disagree);
}

std::int64_t periodic_cross(const PackedSeq& a, const PackedSeq& b, std::int64_t t) {
    require_pair(a, b);
    const auto n = a.n;
    const auto s = static_cast<std::size_t>(floor_mod(t, static_cast<std::int64_t>(n)));
    const std::uint64_t rot = ((b.bits >> s) | (b.bits << (n - s))) & mask_bits(n);
    const auto disagree = std::popcount((a.bits ^ rot) & mask_bits(n));
    return static_cast<std::int64_t>(n) - 2 * static_cast<std::int64_t>(disagree);
}

std::int64_t negaperiodic_cross(const PackedSeq& a, const PackedSeq& b, std::int64_t t) {
    require_pair(a, b);
    const auto n = a.n;
    const auto reduced = static_cast<std::size_t>(floor_mod(t, 2 * static_cast<std::int64_t>(n)));
    const bool negate = reduced >= n;
    const std::size_t s = negate ? reduced - n : reduced;
    const auto d1 = std::popcount((a.bits ^ (b.bits >> s)) & mask_bits(n - s));
    std::int64_t value = static_cast<std::int64_t>(n - s) - 2 * static_cast<std::int64_t>(d1);
    if (s > 0) {
        const auto d2 = std::popcount(((a.bits >> (n - s)) ^ b.bits) & mask_bits(s));
        value -= static_cast<std::int64_t>(s) - 2 * static_cast<std::int64_t>(d2);
    }
    return negate ? -value : value;
}

}  // namespace packed

bool seq_display_less(const Seq& a, const Seq& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t r = 0; r < a.size(); ++r)
        if (a[r].index() != b[r].index()) return a[r].index() < b[r].index();
    return false;
}

namespace {

using packed::PackedSeq;

constexpr std::uint64_t mask_bits(std::size_t k) {
    return k >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << k) - 1);
}

[[noreturn]] void refuse(const std::string& what, std::size_t limit) {
    throw SearchBoundsError(what + "; the supported exhaustive range ends at length " +
                            std::to_string(limit));
}

// ---------------------------------------------------------------------------
// Packed predicate kernels over candidates (bit r set = entry r is -1).

std::uint64_t rot_n(std::uint64_t x, std::size_t n, std::size_t t) {
    return ((x >> t) | (x << (n - t))) & mask_bits(n);
}

std::int64_t packed_periodic(std::uint64_t a, std::uint64_t b, std::size_t n, std::size_t t) {
    return static_cast<std::int64_t>(n) -
           2 * static_cast<std::int64_t>(std::popcount(a ^ rot_n(b, n, t)));
}

std::int64_t packed_nega(std::uint64_t a, std::uint64_t b, std::size_t n, std::size_t t) {
    const auto d1 = std::popcount((a ^ (b >> t)) & mask_bits(n - t));
    std::int64_t value = static_cast<std::int64_t>(n - t) - 2 * static_cast<std::int64_t>(d1);
    if (t > 0) {
        const auto d2 = std::popcount(((a >> (n - t)) ^ b) & mask_bits(t));
        value -= static_cast<std::int64_t>(t) - 2 * static_cast<std::int64_t>(d2);
    }
    return value;
}

std::int64_t packed_aperiodic(std::uint64_t a, std::uint64_t b, std::size_t n, std::size_t t) {
    return static_cast<std::int64_t>(n - t) -
           2 * static_cast<std::int64_t>(std::popcount((a ^ (b >> t)) & mask_bits(n - t)));
}

bool packed_periodic_complementary(const std::uint64_t x[4], std::size_t n) {
    for (std::size_t t = 1; t < n; ++t) {
        std::int64_t sum = 0;
        for (int i = 0; i < 4; ++i) sum += packed_periodic(x[i], x[i], n, t);
        if (sum != 0) return false;
    }
    return true;
}

bool packed_negacomplementary(const std::uint64_t x[4], std::size_t n) {
    for (std::size_t t = 1; t < n; ++t) {
        std::int64_t sum = 0;
        for (int i = 0; i < 4; ++i) sum += packed_nega(x[i], x[i], n, t);
        if (sum != 0) return false;
    }
    return true;
}

bool packed_amicable(const std::uint64_t x[4], std::size_t n) {
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (std::size_t t = 0; t < n; ++t)
                if (packed_periodic(x[i], x[j], n, t) != packed_periodic(x[j], x[i], n, t))
                    return false;
    return true;
}

bool packed_golay(std::uint64_t a, std::uint64_t b, std::size_t n) {
    for (std::size_t t = 1; t < n; ++t)
        if (packed_aperiodic(a, a, n, t) + packed_aperiodic(b, b, n, t) != 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Candidate decoding.  Codes ascend in display order: member A's entries
// occupy the most significant bits, entry 0 highest, a set bit meaning -1,
// so ascending codes match the lexicographic order with '+' before '-'.

enum class MemberShape { full, symmetric, palindromic, antipalindromic };

std::size_t shape_free_count(MemberShape shape, std::size_t n) {
    switch (shape) {
        case MemberShape::full: return n;
        case MemberShape::symmetric: return n / 2 + 1;
        default: return (n + 1) / 2;
    }
}

std::uint64_t expand_member(std::uint64_t chunk, MemberShape shape, std::size_t n) {
    const std::size_t f = shape_free_count(shape, n);
    const auto free_bit = [&](std::size_t idx) { return (chunk >> (f - 1 - idx)) & 1; };
    std::uint64_t out = 0;
    for (std::size_t r = 0; r < n; ++r) {
        std::uint64_t bit = 0;
        switch (shape) {
            case MemberShape::full: bit = free_bit(r); break;
            case MemberShape::symmetric: bit = free_bit(2 * r <= n ? r : n - r); break;
            case MemberShape::palindromic: bit = free_bit(2 * r < n ? r : n - 1 - r); break;
            case MemberShape::antipalindromic:
                bit = 2 * r < n ? free_bit(r) : free_bit(n - 1 - r) ^ 1;
                break;
        }
        out |= bit << r;
    }
    return out;
}

Quad quad_from_packed(const std::uint64_t x[4], std::size_t n) {
    Quad q;
    for (int i = 0; i < 4; ++i) q.m[i] = packed::unpack({x[i], n});
    return q;
}

// ---------------------------------------------------------------------------
// Parallel block scan: contiguous code ranges, slots merged in order.

template <class Hit, class ScanRange>
std::pair<std::uint64_t, std::vector<Hit>> scan_space(std::uint64_t total, ScanRange&& scan) {
    struct Block {
        std::uint64_t matches = 0;
        std::vector<Hit> hits;
    };
    const std::size_t nblocks = total > (std::uint64_t{1} << 14) ? 256 : 1;
    std::vector<Block> slots(nblocks);
    detail::parallel_for(nblocks, [&](std::size_t b0, std::size_t b1) {
        for (std::size_t b = b0; b < b1; ++b) {
            const std::uint64_t lo = total * b / nblocks;
            const std::uint64_t hi = total * (b + 1) / nblocks;
            scan(lo, hi, slots[b].matches, slots[b].hits);
        }
    });
    std::uint64_t matches = 0;
    std::vector<Hit> hits;
    for (auto& blk : slots) {
        matches += blk.matches;
        hits.insert(hits.end(), std::make_move_iterator(blk.hits.begin()),
                    std::make_move_iterator(blk.hits.end()));
    }
    return {matches, std::move(hits)};
}

// Disagreement between the packed kernel and the generic quaternion path is
// a defect, never a data condition.
[[noreturn]] void kernel_disagreement(const char* where) {
    throw std::logic_error(std::string("search: packed kernel and generic predicate disagree in ") +
                           where);
}

// ---------------------------------------------------------------------------
// Engines.

std::vector<Unit> alphabet_units(SearchAlphabet alphabet) {
    std::vector<Unit> units;
    for (std::uint8_t idx = 0; idx < Unit::count; ++idx) {
        const Unit u = Unit::from_index(idx);
        if (alphabet == SearchAlphabet::q8 ? u.in_q8() : u.in_qplus()) units.push_back(u);
    }
    return units;
}

SearchResult run_sequence_search(const SearchSpec& spec) {
    const std::size_t n = spec.length;
    const std::vector<Unit> units = alphabet_units(spec.alphabet);
    const std::size_t base = units.size();

    std::uint64_t total = 1;
    for (std::size_t r = 0; r < n; ++r) total *= base;

    const bool odd = spec.kind == SearchKind::odd_perfect;
    auto [matches, hits] = scan_space<Seq>(
        total, [&](std::uint64_t lo, std::uint64_t hi, std::uint64_t& m, std::vector<Seq>& out) {
            std::vector<std::size_t> digit(n, 0);
            std::uint64_t code = lo;
            for (std::size_t r = n; r-- > 0;) {
                digit[r] = code % base;
                code /= base;
            }
            Seq x(n, unit_one);
            for (std::size_t r = 0; r < n; ++r) x[r] = units[digit[r]];
            for (std::uint64_t c = lo; c < hi; ++c) {
                bool ok = true;
                for (std::size_t t = 1; t < n && ok; ++t) {
                    const Quat v = odd ? negaperiodic_auto(x, static_cast<std::int64_t>(t))
                                       : periodic_auto(x, static_cast<std::int64_t>(t));
                    ok = v.is_zero();
                }
                if (ok) {
                    ++m;
                    out.push_back(x);
                }
                // odometer step, least significant digit last
                for (std::size_t r = n; r-- > 0;) {
                    if (++digit[r] < base) {
                        x[r] = units[digit[r]];
                        break;
                    }
                    digit[r] = 0;
                    x[r] = units[0];
                }
            }
        });

    SearchResult result;
    result.spec = spec;
    result.candidates = total;
    result.matches = matches;
    result.seqs = std::move(hits);
    return result;
}

SearchResult run_golay_search(const SearchSpec& spec) {
    const std::size_t n = spec.length;
    const std::uint64_t total = std::uint64_t{1} << (2 * n);

    auto [matches, hits] = scan_space<std::pair<Seq, Seq>>(
        total, [&](std::uint64_t lo, std::uint64_t hi, std::uint64_t& m,
                   std::vector<std::pair<Seq, Seq>>& out) {
            for (std::uint64_t code = lo; code < hi; ++code) {
                const std::uint64_t a = expand_member(code >> n, MemberShape::full, n);
                const std::uint64_t b = expand_member(code & mask_bits(n), MemberShape::full, n);
                if (!packed_golay(a, b, n)) continue;
                Seq sa = packed::unpack({a, n}), sb = packed::unpack({b, n});
                if (!is_golay_pair(sa, sb)) kernel_disagreement("the Golay scan");
                ++m;
                out.emplace_back(std::move(sa), std::move(sb));
            }
        });

    SearchResult result;
    result.spec = spec;
    result.candidates = total;
    result.matches = matches;
    result.pairs = std::move(hits);
    return result;
}

SearchResult run_quad_search(const SearchSpec& spec, MemberShape shape) {
    const std::size_t n = spec.length;
    const std::size_t f = shape_free_count(shape, n);
    const std::uint64_t total = std::uint64_t{1} << (4 * f);

    auto accept_packed = [&](const std::uint64_t x[4]) {
        if (spec.require_q8_property && (x[0] ^ x[1] ^ x[2] ^ x[3]) != 0) return false;
        switch (spec.kind) {
            case SearchKind::williamson: return packed_periodic_complementary(x, n);
            case SearchKind::williamson_type:
                return packed_periodic_complementary(x, n) && packed_amicable(x, n);
            case SearchKind::nega_williamson: return packed_negacomplementary(x, n);
            default: return false;
        }
    };
    auto accept_generic = [&](const Quad& q) {
        if (spec.require_q8_property && !has_q8_property(q)) return false;
        switch (spec.kind) {
            case SearchKind::williamson: return is_williamson(q);
            case SearchKind::williamson_type: return is_williamson_type(q);
            case SearchKind::nega_williamson: return is_nega_williamson(q, spec.nega_symmetry);
            default: return false;
        }
    };

    auto [matches, hits] = scan_space<Quad>(
        total, [&](std::uint64_t lo, std::uint64_t hi, std::uint64_t& m, std::vector<Quad>& out) {
            for (std::uint64_t code = lo; code < hi; ++code) {
                std::uint64_t x[4];
                for (int i = 0; i < 4; ++i)
                    x[i] = expand_member((code >> ((3 - i) * f)) & mask_bits(f), shape, n);
                if (!accept_packed(x)) continue;
                Quad q = quad_from_packed(x, n);
                if (!accept_generic(q)) kernel_disagreement("the quadruple scan");
                ++m;
                out.push_back(std::move(q));
            }
        });

    SearchResult result;
    result.spec = spec;
    result.candidates = total;
    result.matches = matches;
    result.quads = std::move(hits);
    return result;
}

}  // namespace

SearchResult enumerate_designs(const SearchSpec& spec) {
    if (spec.length == 0) throw std::invalid_argument("enumerate_designs: length must be positive");
    const bool quad_kind = spec.kind == SearchKind::williamson ||
                           spec.kind == SearchKind::williamson_type ||
                           spec.kind == SearchKind::nega_williamson;
    if (spec.require_q8_property && !quad_kind)
        throw std::invalid_argument(
            "enumerate_designs: the Q8-property flag applies to quadruple kinds only");
    if (spec.nega_symmetry != NegaSymmetry::none && spec.kind != SearchKind::nega_williamson)
        throw std::invalid_argument(
            "enumerate_designs: symmetry constraints apply to the nega-Williamson kind only");

    SearchResult result;
    switch (spec.kind) {
        case SearchKind::perfect:
        case SearchKind::odd_perfect: {
            const std::size_t limit = spec.alphabet == SearchAlphabet::q8 ? 8 : 5;
            if (spec.length > limit)
                refuse(spec.alphabet == SearchAlphabet::q8 ? "sequence search over Q8"
                                                           : "sequence search over Q+",
                       limit);
            result = run_sequence_search(spec);
            break;
        }
        case SearchKind::golay_pair:
            if (spec.length > 10) refuse("Golay pair search", 10);
            result = run_golay_search(spec);
            break;
        case SearchKind::williamson:
            if (spec.length > 8) refuse("Williamson search", 8);
            result = run_quad_search(spec, MemberShape::symmetric);
            break;
        case SearchKind::williamson_type:
            if (spec.length > 6) refuse("Williamson-type search", 6);
            result = run_quad_search(spec, MemberShape::full);
            break;
        case SearchKind::nega_williamson:
            switch (spec.nega_symmetry) {
                case NegaSymmetry::none:
                    if (spec.length > 6) refuse("unconstrained nega-Williamson search", 6);
                    result = run_quad_search(spec, MemberShape::full);
                    break;
                case NegaSymmetry::palindromic:
                    if (spec.length > 8) refuse("palindromic nega-Williamson search", 8);
                    result = run_quad_search(spec, MemberShape::palindromic);
                    break;
                case NegaSymmetry::antipalindromic:
                    if (spec.length > 8) refuse("antipalindromic nega-Williamson search", 8);
                    result = run_quad_search(spec, MemberShape::antipalindromic);
                    break;
            }
            break;
    }

    if (spec.result_cap > 0) {
        if (result.seqs.size() > spec.result_cap) result.seqs.resize(spec.result_cap);
        if (result.pairs.size() > spec.result_cap) result.pairs.resize(spec.result_cap);
        if (result.quads.size() > spec.result_cap) result.quads.resize(spec.result_cap);
    }
    return result;
}

std::uint64_t count_williamson_q8(std::size_t n) {
    if (n == 0 || n % 2 != 0)
        throw std::invalid_argument("count_williamson_q8: length must be even and positive");
    if (n > 8) refuse("Williamson search", 8);
    SearchSpec spec;
    spec.kind = SearchKind::williamson;
    spec.length = n;
    spec.require_q8_property = true;
    spec.result_cap = 1;  // the count is the point; keep one witness
    return enumerate_designs(spec).matches;
}

}  // namespace qseq
