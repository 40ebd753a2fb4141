#include "qseq/construct.hpp"

#include <numeric>
#include <sstream>

#include "qseq/textio.hpp"

namespace qseq {
namespace {

std::string describe_seq(const Seq& x) {
    if (x.size() <= 64) return format_sequence(x);
    std::ostringstream os;
    os << "<sequence of length " << x.size() << ">";
    return os.str();
}

std::string describe_member(const char* label, const Seq& x) {
    return std::string(label) + " = " + describe_seq(x);
}

std::vector<std::string> describe_quad(const Quad& q) {
    return {describe_member("A", q.m[0]), describe_member("B", q.m[1]),
            describe_member("C", q.m[2]), describe_member("D", q.m[3])};
}

void require(bool ok, const std::string& what) {
    if (!ok) throw ConstructionError(what);
}

bool all_q8(const Seq& x) {
    for (Unit u : x)
        if (!u.in_q8()) return false;
    return true;
}

bool all_qplus(const Seq& x) {
    for (Unit u : x)
        if (!u.in_qplus()) return false;
    return true;
}

std::vector<Seq> quad_vec(const Quad& q) { return {q.m[0], q.m[1], q.m[2], q.m[3]}; }

bool quad_complementary(const Quad& q, CorrKind kind) {
    auto v = quad_vec(q);
    return is_complementary_set(v, kind);
}

Seq neg_rev(const Seq& x) { return negated(reversed(x)); }

}  // namespace

Constructed<Seq> periodic_product(const Seq& x, const Seq& y) {
    const std::size_t n = x.size(), m = y.size();
    require(n > 0 && m > 0, "periodic_product: inputs must be nonempty");
    require(std::gcd(n, m) == 1, "periodic_product: lengths must be coprime");
    require(all_q8(x), "periodic_product: first input must use the Q8 alphabet");
    require(all_qplus(y), "periodic_product: second input must use the Q+ alphabet");
    require(is_perfect(x), "periodic_product: first input must be perfect");
    require(is_perfect(y), "periodic_product: second input must be perfect");

    Seq out;
    out.reserve(n * m);
    for (std::size_t r = 0; r < n * m; ++r) out.push_back(x[r % n] * y[r % m]);

    Receipt rec;
    rec.construction = "periodic_product";
    rec.inputs = {describe_member("x", x), describe_member("y", y)};
    require(is_perfect(out), "periodic_product: output failed the perfection re-check");
    rec.verified.push_back("output is perfect");
    if (is_symmetric(x) && is_symmetric(y)) {
        require(is_symmetric(out), "periodic_product: output failed the symmetry re-check");
        rec.verified.push_back("output is symmetric (both inputs were)");
    }
    return {std::move(out), std::move(rec)};
}

Constructed<Seq> odd_product(const Seq& x, const Seq& y) {
    const std::size_t n = x.size(), m = y.size();
    require(n > 0 && m > 0, "odd_product: inputs must be nonempty");
    require(std::gcd(n, m) == 1, "odd_product: lengths must be coprime");
    require((n % 2 == 0) != (m % 2 == 0), "odd_product: exactly one length must be even");
    require(all_qplus(x) && all_qplus(y), "odd_product: inputs must use the Q+ alphabet");
    require(is_odd_perfect(x), "odd_product: first input must be odd perfect");
    require(is_odd_perfect(y), "odd_product: second input must be odd perfect");

    Seq out;
    out.reserve(n * m);
    for (std::size_t r = 0; r < n * m; ++r) {
        Unit e = x[r % n] * y[r % m];
        if (((r / n) + (r / m)) % 2 != 0) e = -e;
        out.push_back(e);
    }

    Receipt rec;
    rec.construction = "odd_product";
    rec.inputs = {describe_member("x", x), describe_member("y", y)};
    require(is_odd_perfect(out), "odd_product: output failed the odd-perfection re-check");
    rec.verified.push_back("output is odd perfect");
    if (is_palindromic(x) && is_palindromic(y)) {
        require(is_antipalindromic(out), "odd_product: output failed the antipalindromicity re-check");
        rec.verified.push_back("output is antipalindromic (both inputs were palindromic)");
    }
    return {std::move(out), std::move(rec)};
}

Constructed<Quad> alternation_transfer(const Quad& q) {
    const std::size_t n = q.length();
    require(n % 2 == 1, "alternation_transfer: members must have odd length");
    const bool in_periodic = quad_complementary(q, CorrKind::periodic);
    const bool in_nega = quad_complementary(q, CorrKind::negaperiodic);
    require(in_periodic || in_nega,
            "alternation_transfer: input is neither periodic complementary nor negacomplementary");

    Quad out;
    for (int i = 0; i < 4; ++i) out.m[i] = alternate_negate(q.m[i]);

    Receipt rec;
    rec.construction = "alternation_transfer";
    rec.inputs = describe_quad(q);
    if (in_periodic) {
        require(quad_complementary(out, CorrKind::negaperiodic),
                "alternation_transfer: output failed the negacomplementarity re-check");
        rec.verified.push_back("periodic complementary input produced a negacomplementary output");
    }
    if (in_nega) {
        require(quad_complementary(out, CorrKind::periodic),
                "alternation_transfer: output failed the periodic-complementarity re-check");
        rec.verified.push_back("negacomplementary input produced a periodic complementary output");
    }
    return {std::move(out), std::move(rec)};
}

Constructed<Quad> williamson_double_even(const Quad& williamson, const Quad& nega) {
    const std::size_t n = williamson.length();
    require(n % 2 == 0, "williamson_double_even: member length must be even");
    require(nega.length() == n, "williamson_double_even: quadruples must share one length");
    require(is_williamson(williamson), "williamson_double_even: first input is not Williamson");
    require(is_nega_williamson(nega, NegaSymmetry::antipalindromic),
            "williamson_double_even: second input is not antipalindromic nega-Williamson");

    Quad out;
    for (int i = 0; i < 4; ++i)
        out.m[i] = interleave(doubled(williamson.m[i]), negadoubled(nega.m[i]));

    Receipt rec;
    rec.construction = "williamson_double_even";
    rec.inputs = describe_quad(williamson);
    for (auto& s : describe_quad(nega)) rec.inputs.push_back("nega " + s);
    require(is_williamson(out), "williamson_double_even: output failed the Williamson re-check");
    rec.verified.push_back("output is a Williamson quadruple of length " + std::to_string(4 * n));
    if (has_q8_property(williamson) && has_q8_property(nega)) {
        require(has_q8_property(out), "williamson_double_even: output failed the entrywise-product re-check");
        rec.verified.push_back("output has the Q8-property (both inputs did)");
    }
    return {std::move(out), std::move(rec)};
}

Constructed<Quad> williamson_double_odd(const Quad& williamson_shifted, const Quad& nega_shifted) {
    const std::size_t n = williamson_shifted.length();
    require(n % 2 == 1, "williamson_double_odd: member length must be odd");
    require(nega_shifted.length() == n, "williamson_double_odd: quadruples must share one length");
    for (const Seq& s : williamson_shifted.m)
        require(is_palindromic(s), "williamson_double_odd: shifted Williamson members must be palindromic");
    require(quad_complementary(williamson_shifted, CorrKind::periodic),
            "williamson_double_odd: shifted Williamson set must stay periodic complementary");
    for (const Seq& s : nega_shifted.m)
        require(is_antisymmetric(s), "williamson_double_odd: shifted nega members must be antisymmetric");
    require(quad_complementary(nega_shifted, CorrKind::negaperiodic),
            "williamson_double_odd: shifted nega set must stay negacomplementary");

    Quad out;
    for (int i = 0; i < 4; ++i)
        out.m[i] = interleave(negadoubled(nega_shifted.m[i]), doubled(williamson_shifted.m[i]));

    Receipt rec;
    rec.construction = "williamson_double_odd";
    rec.inputs = describe_quad(williamson_shifted);
    for (auto& s : describe_quad(nega_shifted)) rec.inputs.push_back("nega " + s);
    require(is_williamson(out), "williamson_double_odd: output failed the Williamson re-check");
    rec.verified.push_back("output is a Williamson quadruple of length " + std::to_string(4 * n));
    return {std::move(out), std::move(rec)};
}

Constructed<Quad> williamson_double_odd_from_designs(const Quad& williamson, const Quad& nega) {
    const std::size_t n = williamson.length();
    require(n % 2 == 1, "williamson_double_odd_from_designs: member length must be odd");
    require(nega.length() == n, "williamson_double_odd_from_designs: quadruples must share one length");
    require(is_williamson(williamson), "williamson_double_odd_from_designs: first input is not Williamson");
    require(is_nega_williamson(nega, NegaSymmetry::palindromic),
            "williamson_double_odd_from_designs: second input is not palindromic nega-Williamson");

    Quad w_shift, g_shift;
    for (int i = 0; i < 4; ++i) {
        w_shift.m[i] = cyclic_shift(williamson.m[i], static_cast<std::int64_t>((n - 1) / 2));
        g_shift.m[i] = negacyclic_shift(nega.m[i], static_cast<std::int64_t>((n + 1) / 2));
    }
    auto inner = williamson_double_odd(w_shift, g_shift);

    Receipt rec;
    rec.construction = "williamson_double_odd_from_designs";
    rec.inputs = describe_quad(williamson);
    for (auto& s : describe_quad(nega)) rec.inputs.push_back("nega " + s);
    rec.verified = inner.receipt.verified;
    rec.notes.push_back("applied " + std::to_string((n - 1) / 2) + " cyclic and " +
                        std::to_string((n + 1) / 2) + " negacyclic pre-shifts");
    rec.steps.push_back(std::move(inner.receipt));
    return {std::move(inner.value), std::move(rec)};
}

Constructed<Quad> pal_antipal_convert(const Quad& nega, NegaSymmetry target) {
    const std::size_t n = nega.length();
    require(n % 2 == 0, "pal_antipal_convert: member length must be even");
    require(target == NegaSymmetry::palindromic || target == NegaSymmetry::antipalindromic,
            "pal_antipal_convert: target must name a symmetry class");
    const NegaSymmetry source = target == NegaSymmetry::palindromic ? NegaSymmetry::antipalindromic
                                                                    : NegaSymmetry::palindromic;
    require(is_nega_williamson(nega, source),
            "pal_antipal_convert: input is not nega-Williamson in the source symmetry class");

    Quad out;
    for (int i = 0; i < 4; ++i)
        out.m[i] = negacyclic_shift(nega.m[i], static_cast<std::int64_t>(n / 2));

    Receipt rec;
    rec.construction = "pal_antipal_convert";
    rec.inputs = describe_quad(nega);
    require(is_nega_williamson(out, target),
            "pal_antipal_convert: output failed the nega-Williamson re-check");
    rec.verified.push_back(std::string("output is ") +
                           (target == NegaSymmetry::palindromic ? "palindromic" : "antipalindromic") +
                           " nega-Williamson");
    if (has_q8_property(nega)) {
        require(has_q8_property(out), "pal_antipal_convert: output failed the entrywise-product re-check");
        rec.verified.push_back("output has the Q8-property (input did)");
    }
    return {std::move(out), std::move(rec)};
}

Constructed<std::vector<Seq>> negadouble_set(const std::vector<Seq>& seqs) {
    require(!seqs.empty(), "negadouble_set: input set must be nonempty");
    require(is_complementary_set(seqs, CorrKind::aperiodic),
            "negadouble_set: input set must be aperiodic complementary");

    std::vector<Seq> out;
    out.reserve(seqs.size());
    for (const Seq& s : seqs) out.push_back(negadoubled(s));

    Receipt rec;
    rec.construction = "negadouble_set";
    for (const Seq& s : seqs) rec.inputs.push_back(describe_seq(s));
    require(is_complementary_set(out, CorrKind::negaperiodic),
            "negadouble_set: output failed the negacomplementarity re-check");
    rec.verified.push_back("output set is negacomplementary at doubled length");
    return {std::move(out), std::move(rec)};
}

Constructed<Quad> nega_quad_from_golay(const Seq& a, const Seq& b, int which) {
    require(which == 1 || which == 2, "nega_quad_from_golay: family selector must be 1 or 2");
    require(is_golay_pair(a, b), "nega_quad_from_golay: inputs must form a Golay pair");
    const Seq ra = reversed(a), rb = reversed(b);

    Quad out;
    if (which == 1) {
        out.m[0] = concat(concat(a, b), concat(rb, ra));
        out.m[1] = concat(concat(rb, ra), concat(a, b));
        out.m[2] = concat(concat(negated(rb), ra), concat(a, negated(b)));
        out.m[3] = concat(concat(negated(a), b), concat(rb, negated(ra)));
    } else {
        const Seq x0 = concat(concat(a, b), concat(rb, ra));
        out.m[0] = concat(x0, x0);
        out.m[1] = concat(concat(concat(a, b), concat(negated(rb), negated(ra))),
                          concat(concat(negated(a), negated(b)), concat(rb, ra)));
        out.m[2] = concat(concat(concat(a, negated(b)), concat(rb, negated(ra))),
                          concat(concat(negated(a), b), concat(negated(rb), ra)));
        const Seq x3 = concat(concat(a, negated(b)), concat(negated(rb), ra));
        out.m[3] = concat(x3, x3);
    }

    Receipt rec;
    rec.construction = which == 1 ? "nega_quad_from_golay(length 4n)" : "nega_quad_from_golay(length 8n)";
    rec.inputs = {describe_member("A", a), describe_member("B", b)};
    require(is_nega_williamson(out, NegaSymmetry::palindromic),
            "nega_quad_from_golay: output failed the palindromic nega-Williamson re-check");
    rec.verified.push_back("output is palindromic nega-Williamson of length " +
                           std::to_string(out.length()));
    require(has_q8_property(out), "nega_quad_from_golay: output failed the entrywise-product re-check");
    rec.verified.push_back("output has the Q8-property");
    return {std::move(out), std::move(rec)};
}

Constructed<Quad> williamson_nega_convert_odd(const Quad& q, OddConvert direction) {
    const std::size_t n = q.length();
    require(n % 2 == 1, "williamson_nega_convert_odd: member length must be odd");
    const auto half = static_cast<std::int64_t>((n - 1) / 2);

    Quad out;
    Receipt rec;
    rec.construction = "williamson_nega_convert_odd";
    rec.inputs = describe_quad(q);
    if (direction == OddConvert::williamson_to_nega) {
        require(is_williamson(q), "williamson_nega_convert_odd: input is not Williamson");
        for (int i = 0; i < 4; ++i) out.m[i] = negacyclic_shift(alternate_negate(q.m[i]), half);
        require(is_nega_williamson(out, NegaSymmetry::palindromic),
                "williamson_nega_convert_odd: output failed the palindromic nega-Williamson re-check");
        rec.verified.push_back("output is palindromic nega-Williamson");
    } else {
        require(is_nega_williamson(q, NegaSymmetry::palindromic),
                "williamson_nega_convert_odd: input is not palindromic nega-Williamson");
        for (int i = 0; i < 4; ++i) out.m[i] = alternate_negate(negacyclic_shift(q.m[i], -half));
        require(is_williamson(out), "williamson_nega_convert_odd: output failed the Williamson re-check");
        rec.verified.push_back("output is Williamson");
    }
    return {std::move(out), std::move(rec)};
}

Constructed<Seq> odd_perfect_from_golay(const Seq& a, const Seq& b) {
    require(is_golay_pair(a, b), "odd_perfect_from_golay: inputs must form a Golay pair");
    const std::size_t n = a.size();
    const Seq ra = reversed(a), rb = reversed(b);

    Seq out;
    out.reserve(8 * n);
    const Seq blocks[8] = {negated(a),
                           scalar_premul(unit_j, b),
                           scalar_premul(unit_k, rb),
                           scalar_premul(unit_i, ra),
                           scalar_premul(unit_i, a),
                           scalar_premul(unit_k, b),
                           scalar_premul(unit_j, rb),
                           negated(ra)};
    for (const Seq& blk : blocks) out.insert(out.end(), blk.begin(), blk.end());

    Receipt rec;
    rec.construction = "odd_perfect_from_golay";
    rec.inputs = {describe_member("A", a), describe_member("B", b)};
    require(out.size() == 8 * n, "odd_perfect_from_golay: output failed the length re-check");
    require(all_q8(out), "odd_perfect_from_golay: output failed the alphabet re-check");
    require(is_palindromic(out), "odd_perfect_from_golay: output failed the palindromicity re-check");
    require(is_odd_perfect(out), "odd_perfect_from_golay: output failed the odd-perfection re-check");
    rec.verified.push_back("output is a palindromic odd perfect Q8-sequence of length " +
                           std::to_string(8 * n));
    return {std::move(out), std::move(rec)};
}

Constructed<std::pair<Seq, Seq>> golay_interleave_double(const Seq& a, const Seq& b) {
    require(is_golay_pair(a, b), "golay_interleave_double: inputs must form a Golay pair");
    std::pair<Seq, Seq> out{interleave(a, b), interleave(a, negated(b))};

    Receipt rec;
    rec.construction = "golay_interleave_double";
    rec.inputs = {describe_member("A", a), describe_member("B", b)};
    require(is_golay_pair(out.first, out.second),
            "golay_interleave_double: output failed the Golay re-check");
    rec.verified.push_back("output is a Golay pair of length " + std::to_string(out.first.size()));
    return {std::move(out), std::move(rec)};
}

namespace {

Seq pm_seq(std::string_view pattern) {
    Seq s;
    s.reserve(pattern.size());
    for (char c : pattern) s.push_back(c == '+' ? unit_one : unit_minus_one);
    return s;
}

Quad pm_quad(std::string_view a, std::string_view b, std::string_view c, std::string_view d) {
    return Quad{{pm_seq(a), pm_seq(b), pm_seq(c), pm_seq(d)}};
}

// Antipalindromic nega-Williamson quadruple of length 2^s with the
// Q8-property, feeding the doubling recursion.
Constructed<Quad> pipeline_nega(int s) {
    if (s == 1) {
        Quad base = pm_quad("++", "++", "++", "++");
        Quad out;
        for (int i = 0; i < 4; ++i) out.m[i] = negacyclic_shift(base.m[i], 1);
        Receipt rec;
        rec.construction = "pipeline_nega(base shift)";
        rec.inputs = describe_quad(base);
        require(is_nega_williamson(out, NegaSymmetry::antipalindromic) && has_q8_property(out),
                "pipeline_nega: length-2 base failed its re-check");
        rec.verified.push_back("length-2 antipalindromic nega-Williamson quadruple with the Q8-property");
        return {std::move(out), std::move(rec)};
    }
    if (s == 2) {
        auto pal = nega_quad_from_golay(pm_seq("+"), pm_seq("+"), 1);
        auto anti = pal_antipal_convert(pal.value, NegaSymmetry::antipalindromic);
        Receipt rec;
        rec.construction = "pipeline_nega(length-4n family)";
        rec.verified = anti.receipt.verified;
        rec.steps = {std::move(pal.receipt), std::move(anti.receipt)};
        return {std::move(anti.value), std::move(rec)};
    }
    // s >= 3: a Golay pair of length 2^(s-3) feeds the length-8n family.
    Seq ga = pm_seq("+"), gb = pm_seq("+");
    Receipt chain;
    chain.construction = "golay_doubling_chain";
    chain.inputs = {describe_member("A", ga), describe_member("B", gb)};
    for (int step = 0; step < s - 3; ++step) {
        auto next = golay_interleave_double(ga, gb);
        ga = std::move(next.value.first);
        gb = std::move(next.value.second);
        chain.steps.push_back(std::move(next.receipt));
    }
    chain.verified.push_back("Golay pair of length " + std::to_string(ga.size()));
    auto pal = nega_quad_from_golay(ga, gb, 2);
    auto anti = pal_antipal_convert(pal.value, NegaSymmetry::antipalindromic);
    Receipt rec;
    rec.construction = "pipeline_nega(length-8n family)";
    rec.verified = anti.receipt.verified;
    rec.steps = {std::move(chain), std::move(pal.receipt), std::move(anti.receipt)};
    return {std::move(anti.value), std::move(rec)};
}

Constructed<Quad> pipeline_base(int t) {
    Quad out;
    switch (t) {
        case 0: out = pm_quad("+", "+", "+", "+"); break;
        case 1: out = pm_quad("++", "++", "+-", "+-"); break;
        default: out = pm_quad("++-+", "++-+", "++-+", "++-+"); break;
    }
    Receipt rec;
    rec.construction = "pipeline_base";
    rec.inputs = describe_quad(out);
    require(is_williamson(out) && has_q8_property(out),
            "pipeline_base: base quadruple failed its re-check");
    rec.verified.push_back("base Williamson quadruple of length " + std::to_string(out.length()) +
                           " with the Q8-property");
    return {std::move(out), std::move(rec)};
}

}  // namespace

PipelineResult power_of_two_pipeline(int t) {
    require(t >= 0, "power_of_two_pipeline: exponent must be nonnegative");
    require(t <= 14, "power_of_two_pipeline: exponents above 14 are outside the supported range");

    std::vector<Constructed<Quad>> level;
    level.reserve(static_cast<std::size_t>(t) + 1);
    for (int s = 0; s <= t; ++s) {
        if (s <= 2) {
            level.push_back(pipeline_base(s));
            continue;
        }
        auto nega = pipeline_nega(s - 2);
        auto next = williamson_double_even(level[static_cast<std::size_t>(s - 2)].value, nega.value);
        require(has_q8_property(next.value),
                "power_of_two_pipeline: doubled quadruple failed the entrywise-product re-check");
        Receipt rec;
        rec.construction = "power_of_two_pipeline level " + std::to_string(s);
        rec.verified = next.receipt.verified;
        rec.verified.push_back("level quadruple has the Q8-property");
        rec.steps = {std::move(nega.receipt), std::move(next.receipt)};
        level.push_back({std::move(next.value), std::move(rec)});
    }

    PipelineResult result;
    result.williamson = std::move(level.back().value);

    QuadEncoding enc = quad_encode(result.williamson);
    require(enc.williamson_type_verified,
            "power_of_two_pipeline: top-level quadruple failed the Williamson-type re-check");
    require(all_q8(enc.seq), "power_of_two_pipeline: encoding failed the alphabet re-check");
    require(is_symmetric(enc.seq), "power_of_two_pipeline: encoding failed the symmetry re-check");
    require(is_perfect(enc.seq), "power_of_two_pipeline: encoding failed the perfection re-check");
    result.perfect = std::move(enc.seq);

    Receipt rec;
    rec.construction = "power_of_two_pipeline";
    rec.inputs = {"t = " + std::to_string(t)};
    rec.verified = {"every level re-verified as a Williamson quadruple with the Q8-property",
                    "encoding is a symmetric perfect Q8-sequence of length " +
                        std::to_string(result.perfect.size())};
    for (auto& lv : level) rec.steps.push_back(std::move(lv.receipt));
    result.receipt = std::move(rec);
    return result;
}

Constructed<Matrix> matrix_from_perfect(const Seq& p, std::size_t cols) {
    require(cols > 0, "matrix_from_perfect: column count must be positive");
    require(!p.empty(), "matrix_from_perfect: input must be nonempty");
    require(p.size() % cols == 0, "matrix_from_perfect: length must be divisible by the column count");
    require(is_perfect(p), "matrix_from_perfect: input must be perfect");

    Matrix m;
    m.rows = p.size() / cols;
    m.cols = cols;
    m.cells = p;

    Receipt rec;
    rec.construction = "matrix_from_perfect";
    rec.inputs = {describe_member("p", p)};
    rec.verified.push_back("row-major " + std::to_string(m.rows) + "x" + std::to_string(m.cols) +
                           " matrix of a perfect sequence");
    if (m.rows % m.cols == 0)
        rec.notes.push_back(std::string("array orthogonality: ") +
                            (has_array_orthogonality(m) ? "holds" : "does not hold"));
    else
        rec.notes.push_back("array orthogonality: not applicable (row count not a multiple of the column count)");
    return {std::move(m), std::move(rec)};
}

NonexistenceCertificate antipal_nega_odd_nonexistence(std::size_t n) {
    if (n % 2 == 0 || n == 0)
        throw ConstructionError("antipal_nega_odd_nonexistence: length must be odd");
    if (n > 9)
        throw ConstructionError("antipal_nega_odd_nonexistence: exhaustive range ends at length 9");

    const std::size_t free_per_member = (n + 1) / 2;   // antipalindromic pairs + the middle entry
    const std::size_t bits = 4 * free_per_member;
    NonexistenceCertificate cert;
    cert.n = n;
    cert.rowsum_argument =
        "An antipalindromic {1,-1} sequence of odd length has row sum +-1 (paired entries cancel; "
        "only the middle survives), so alternating negation gives four sequences whose row sums "
        "square-sum to 4.  A negacomplementary quadruple of odd length maps under alternating "
        "negation to a periodic complementary quadruple, whose row sums must square-sum to 4n.  "
        "For n > 1 these requirements conflict, so no such quadruple exists.";

    std::vector<Seq> members(4, Seq(n, unit_one));
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code) {
        for (std::size_t i = 0; i < 4; ++i) {
            Seq& s = members[i];
            const std::uint64_t chunk = code >> (i * free_per_member);
            for (std::size_t t = 0; t < free_per_member; ++t) {
                const Unit u = (chunk >> t) & 1 ? unit_minus_one : unit_one;
                s[t] = u;
                if (2 * t < n - 1) s[n - 1 - t] = -u;
            }
        }
        ++cert.candidates_checked;
        if (is_complementary_set(members, CorrKind::negaperiodic)) {
            cert.exists = true;
            break;
        }
    }
    return cert;
}

}  // namespace qseq
