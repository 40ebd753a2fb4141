#include <vector>

#include "doctest.h"
#include "qseq/correlation.hpp"
#include "test_util.hpp"

using namespace qseq;
using qtest::quad_of;
using qtest::seq_of;

TEST_CASE("aperiodic crosscorrelation endpoints and bounds") {
    const Seq a = seq_of("+-ij");
    CHECK(aperiodic_auto(a, 0) == quat_from_int(4, 0, 0, 0));
    CHECK(aperiodic_auto(a, 4).is_zero());
    CHECK_THROWS_AS(aperiodic_auto(a, 5), std::invalid_argument);
    CHECK_THROWS_AS(aperiodic_auto(a, -1), std::invalid_argument);
}

TEST_CASE("aperiodic values match hand computation") {
    // C("++", 1) = a_0 conj(a_1) = 1.
    CHECK(aperiodic_auto(seq_of("++"), 1) == quat_from_int(1, 0, 0, 0));
    // C("+-", 1) = -1.
    CHECK(aperiodic_auto(seq_of("+-"), 1) == quat_from_int(-1, 0, 0, 0));
    // C("ij", 1) = i conj(j) = -ij = -k.
    CHECK(aperiodic_auto(seq_of("ij"), 1) == quat_from_int(0, 0, 0, -1));
}

TEST_CASE("factor order matters for quaternion crosscorrelations") {
    const Seq a = seq_of("i+");
    const Seq b = seq_of("j+");
    // C_{A,B}(0) = i conj(j) + 1 = 1 - k;  C_{B,A}(0) = j conj(i) + 1 = 1 + k.
    CHECK(aperiodic_cross(a, b, 0) == quat_from_int(1, 0, 0, -1));
    CHECK(aperiodic_cross(b, a, 0) == quat_from_int(1, 0, 0, 1));
}

TEST_CASE("periodic crosscorrelation decomposes into aperiodic parts") {
    const Seq a = seq_of("+-ijk");
    const Seq b = seq_of("q+JK-");
    const auto n = static_cast<std::int64_t>(a.size());
    for (std::int64_t t = 0; t < n; ++t) {
        const Quat expect = aperiodic_cross(a, b, t) + quat_conj(aperiodic_cross(b, a, n - t));
        CHECK(periodic_cross(a, b, t) == expect);
        const Quat expect_nega = aperiodic_cross(a, b, t) - quat_conj(aperiodic_cross(b, a, n - t));
        CHECK(negaperiodic_cross(a, b, t) == expect_nega);
    }
}

TEST_CASE("periodic extension and conjugate reflection") {
    const Seq a = seq_of("+ij-k+");
    const auto n = static_cast<std::int64_t>(a.size());
    for (std::int64_t t = -7; t <= 13; ++t) {
        CHECK(periodic_auto(a, t) == periodic_auto(a, ((t % n) + n) % n));
        CHECK(periodic_auto(a, -t) == quat_conj(periodic_auto(a, t)));
    }
}

TEST_CASE("negaperiodic correlation is antiperiodic with period n") {
    const Seq a = seq_of("+qi-J");
    const auto n = static_cast<std::int64_t>(a.size());
    for (std::int64_t t = -6; t <= 11; ++t) {
        CHECK(negaperiodic_auto(a, t + n) == -negaperiodic_auto(a, t));
        CHECK(negaperiodic_auto(a, t + 2 * n) == negaperiodic_auto(a, t));
    }
}

TEST_CASE("perfect and odd perfect golden sequences") {
    CHECK(is_perfect(seq_of("--+-")));
    for (std::int64_t t = 1; t < 4; ++t) CHECK(periodic_auto(seq_of("--+-"), t).is_zero());
    CHECK(!is_perfect(seq_of("++")));
    CHECK(periodic_auto(seq_of("++"), 1) == quat_from_int(2, 0, 0, 0));

    CHECK(is_odd_perfect(seq_of("+q-+Q-")));
    CHECK(is_odd_perfect(seq_of("++")));
    CHECK(!is_odd_perfect(seq_of("+-+")));
    CHECK(is_perfect(seq_of("-")));
    CHECK(is_odd_perfect(seq_of("-")));
}

TEST_CASE("complementary triples with a filler member") {
    // The triple-plus-filler quadruple cancels only in the periodic sense:
    // the aperiodic sum at shift 1 is 2 and the negaperiodic sum is 4.
    const Quad q = quad_of("+--", "+--", "+--", "+++");
    const std::vector<Seq> members(q.m.begin(), q.m.end());
    CHECK(!is_complementary_set(members, CorrKind::aperiodic));
    CHECK(is_complementary_set(members, CorrKind::periodic));
    CHECK(!is_complementary_set(members, CorrKind::negaperiodic));

    const Quad alt = quad_of("++-", "++-", "++-", "+-+");
    const std::vector<Seq> alt_members(alt.m.begin(), alt.m.end());
    CHECK(is_complementary_set(alt_members, CorrKind::negaperiodic));

    const std::vector<Seq> bad = {seq_of("++"), seq_of("++")};
    CHECK(!is_complementary_set(bad, CorrKind::periodic));
}

TEST_CASE("periodically uncorrelated pairs") {
    // A doubled sequence and a negadoubled sequence are periodically
    // uncorrelated at every shift, including t = 0.
    const Seq a = doubled(seq_of("+-i"));
    const Seq b = negadoubled(seq_of("jk+"));
    CHECK(is_periodically_uncorrelated(std::vector<Seq>{a, b}));
    for (std::int64_t t = 0; t < 6; ++t) {
        CHECK(periodic_cross(a, b, t).is_zero());
        CHECK(periodic_cross(b, a, t).is_zero());
    }
    // Identical members correlate at t = 0.
    CHECK(!is_periodically_uncorrelated(std::vector<Seq>{a, a}));
}

TEST_CASE("correlation_profile lists values for shifts in [0, n)") {
    const Seq a = seq_of("+-j");
    const Seq b = seq_of("ik+");
    const CorrelationProfile prof = correlation_profile(a, b, CorrKind::negaperiodic);
    CHECK(prof.kind == CorrKind::negaperiodic);
    REQUIRE(prof.values.size() == 3);
    for (std::int64_t t = 0; t < 3; ++t) CHECK(prof.values[t] == negaperiodic_cross(a, b, t));
}

TEST_CASE("matrix accessors and degenerate array predicates") {
    Matrix m;
    m.rows = 2;
    m.cols = 3;
    m.cells = seq_of("+-ijk+");
    CHECK(m.at(0, 0) == unit_one);
    CHECK(m.at(1, 2) == unit_one);
    CHECK(m.column(1) == seq_of("-k"));
    CHECK(m.concat_rows() == seq_of("+-ijk+"));

    Matrix one;
    one.rows = 1;
    one.cols = 1;
    one.cells = seq_of("q");
    CHECK(has_array_orthogonality(one));
    CHECK(is_perfect_array(one));

    Matrix bad;
    CHECK_THROWS_AS(has_array_orthogonality(bad), std::invalid_argument);
    Matrix two_by_four;
    two_by_four.rows = 2;
    two_by_four.cols = 4;
    two_by_four.cells = seq_of("++++----");
    CHECK_THROWS_AS(has_array_orthogonality(two_by_four), std::invalid_argument);
}

TEST_CASE("perfect array detects a violating shift pair") {
    Matrix flat;
    flat.rows = 1;
    flat.cols = 2;
    flat.cells = seq_of("++");
    // R(0, 1) = 2 for the all-ones 1x2 array.
    CHECK(!is_perfect_array(flat));
}
