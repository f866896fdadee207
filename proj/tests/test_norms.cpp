#include <doctest.h>

#include <cmath>

#include "lorentz/errors.hpp"
#include "lorentz/norms.hpp"

using namespace lorentz;

namespace {
const double kPi2over6 = 1.6449340668482264;
}

TEST_CASE("finite norm is the greedy pairing") {
    // |a| sorted: 3, 2, 1; harmonic weights: 3 + 2/2 + 1/3
    const auto a = SequenceSpec::finite({2.0, -3.0, 1.0});
    const auto w = WeightSpec::power_decay(1.0);
    const auto iv = lorentz_norm_pth(a, 1.0, w);
    CHECK(iv.lo == doctest::Approx(3.0 + 1.0 + 1.0 / 3.0));
    CHECK(iv.width() == 0.0);
}

TEST_CASE("harmonic times harmonic gives pi^2/6") {
    const auto a = SequenceSpec::power(1.0, 1.0);
    const auto w = WeightSpec::power_decay(1.0);
    const auto iv = lorentz_norm_pth(a, 1.0, w, 1e-9);
    CHECK(iv.width() <= 1e-9);
    CHECK(iv.contains(kPi2over6));
}

TEST_CASE("inverse square root is not a member") {
    const auto a = SequenceSpec::power(1.0, 0.5);
    const auto w = WeightSpec::power_decay(0.5);
    const auto v = classify_membership(a, 1.0, w);
    REQUIRE(std::holds_alternative<NotMember>(v));
    CHECK_THROWS_AS(lorentz_norm_pth(a, 1.0, w), NotSummable);
}

TEST_CASE("membership boundary cases") {
    const auto w = WeightSpec::power_decay(1.0);
    // s*p + beta = 2 > 1: member
    CHECK(is_member(classify_membership(SequenceSpec::power(1.0, 1.0), 1.0, w)));
    // exactly 1: diverges
    CHECK(std::holds_alternative<NotMember>(
        classify_membership(SequenceSpec::power(1.0, 0.0 + 0.0), 1.0, w)));
    // s <= 0: unbounded stream
    CHECK(std::holds_alternative<NotMember>(
        classify_membership(SequenceSpec::power(1.0, -2.0), 1.0, w)));
    // geometric decay always summable
    CHECK(is_member(classify_membership(SequenceSpec::geometric(5.0, 0.9), 1.0, w)));
}

TEST_CASE("geometric norm enclosure") {
    // a_i = 2^{-i}, already nonincreasing; p=1, w=harmonic:
    // sum 2^{-i}/i = ln 2
    const auto a = SequenceSpec::geometric(1.0, 0.5);
    const auto w = WeightSpec::power_decay(1.0);
    const auto iv = lorentz_norm_pth(a, 1.0, w, 1e-10);
    CHECK(iv.contains(std::log(2.0)));
    CHECK(iv.width() <= 1e-10);
}

TEST_CASE("tabled norm respects the envelope bound") {
    const auto a = SequenceSpec::tabled({1.0, 0.5}, Envelope::power_tail(0.25, 2.0));
    const auto w = WeightSpec::power_decay(1.0);
    // the envelope leaves irreducible uncertainty, so the tolerance must
    // stay above the certified tail bound
    const auto iv = lorentz_norm_pth(a, 1.0, w, 0.5);
    // lower bound at least the table part: 1 + 0.5/2
    CHECK(iv.lo >= 1.25 - 1e-12);
    // upper bound at most table part plus envelope tail with full weights
    CHECK(iv.hi <= 1.25 + 0.25 * (1.0 / 4.0 + 1.0 / 9.0 + 0.5));
    CHECK(iv.lo <= iv.hi);
}

TEST_CASE("seminorm is monotone and hits the norm for finite support") {
    const auto a = SequenceSpec::finite({1.0, -4.0, 2.0});
    const auto w = WeightSpec::power_decay(1.0);
    CHECK(seminorm_pth(a, 1.0, w, 0) == 0.0);
    double prev = 0.0;
    for (std::uint64_t i = 1; i <= 5; ++i) {
        const double s = seminorm_pth(a, 1.0, w, i);
        CHECK(s >= prev);
        prev = s;
    }
    CHECK(prev == doctest::Approx(4.0 + 1.0 + 1.0 / 3.0));
}

TEST_CASE("decomposition identities for a finite sequence") {
    const auto a = SequenceSpec::finite({1.0, 2.0});
    const auto w = WeightSpec::power_decay(1.0);
    const auto rec = decompose(a, 1.0, w, 1);
    // head = (1), tail = (2); norm = 2 + 1/2
    CHECK(rec.norm_pth.mid() == doctest::Approx(2.5));
    CHECK(rec.S.mid() == doctest::Approx(1.0));       // head renormed
    CHECK(rec.S_tilde.mid() == doctest::Approx(1.0)); // tail with shifted w: 2 * w_2
    CHECK(rec.H.mid() == doctest::Approx(0.5));       // a_1 at rank 2
    CHECK(rec.H_tilde.mid() == doctest::Approx(2.0)); // a_2 at rank 1
    CHECK(rec.W.mid() == doctest::Approx(2.0));       // rank 1 term
    CHECK(rec.W_tilde.mid() == doctest::Approx(0.5));
    CHECK(rec.T.mid() == doctest::Approx(2.0)); // tail renormed fully
}

TEST_CASE("decomposition chain inequalities for an infinite member") {
    const auto a = SequenceSpec::power(1.0, 1.0);
    const auto w = WeightSpec::power_decay(1.0);
    for (std::uint64_t i : {0, 1, 3, 10}) {
        const auto rec = decompose(a, 1.0, w, i, 1e-7);
        const double slack = 1e-9;
        CHECK(rec.S.lo + rec.S_tilde.lo <= rec.norm_pth.hi + slack);
        CHECK(rec.H.lo + rec.H_tilde.lo <= rec.norm_pth.hi + slack);
        CHECK(rec.H.hi + rec.H_tilde.hi >= rec.norm_pth.lo - slack);
        CHECK(rec.W.lo + rec.W_tilde.lo <= rec.norm_pth.hi + slack);
        CHECK(rec.W.hi + rec.W_tilde.hi >= rec.norm_pth.lo - slack);
        CHECK(rec.norm_pth.lo <= rec.S.hi + rec.T.hi + slack);
    }
}

TEST_CASE("tail norm shrinks to zero") {
    const auto a = SequenceSpec::power(1.0, 1.0);
    const auto w = WeightSpec::power_decay(1.0);
    const auto t0 = tail_norm_pth(a, 1.0, w, 0, 1e-7);
    const auto t10 = tail_norm_pth(a, 1.0, w, 10, 1e-7);
    const auto t100 = tail_norm_pth(a, 1.0, w, 100, 1e-7);
    CHECK(t0.contains(1.6449340668482264));
    CHECK(t10.hi < t0.lo);
    CHECK(t100.hi < t10.lo);
}
