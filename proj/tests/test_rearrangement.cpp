#include <doctest.h>

#include "lorentz/errors.hpp"
#include "lorentz/rearrangement.hpp"

using namespace lorentz;

TEST_CASE("stable rearrangement with ties") {
    // |a| = (2, 5, 5, 1): ranks 1,2 go to indices 2,3 (tie towards smaller
    // index), then 1, then 4.
    const auto a = SequenceSpec::finite({-2.0, 5.0, -5.0, 1.0});
    const auto r = rearrangement_prefix(a, 4);
    REQUIRE(r.values.size() == 4);
    CHECK(r.indices[0] == 2);
    CHECK(r.indices[1] == 3);
    CHECK(r.indices[2] == 1);
    CHECK(r.indices[3] == 4);
    CHECK(r.values[0] == 5.0);
    CHECK(r.values[3] == 1.0);
}

TEST_CASE("prefix pads past the support") {
    const auto a = SequenceSpec::finite({1.0, 0.0, 2.0});
    const auto r = rearrangement_prefix(a, 5);
    REQUIRE(r.values.size() == 5);
    CHECK(r.indices[0] == 3);
    CHECK(r.indices[1] == 1);
    CHECK_FALSE(r.indices[2].has_value());
    CHECK(r.values[2] == 0.0);
}

TEST_CASE("power sequences need no horizon padding") {
    const auto a = SequenceSpec::power(1.0, 1.0);
    const auto r = rearrangement_prefix(a, 3);
    CHECK(r.indices[0] == 1);
    CHECK(r.indices[2] == 3);
    CHECK(r.values[1] == doctest::Approx(0.5));
}

TEST_CASE("sigma inverse ranks") {
    const auto a = SequenceSpec::finite({-2.0, 5.0, -5.0, 1.0});
    CHECK(sigma_inverse_at(a, 2) == 1);
    CHECK(sigma_inverse_at(a, 3) == 2);
    CHECK(sigma_inverse_at(a, 1) == 3);
    CHECK(sigma_inverse_at(a, 4) == 4);
    // zero entries carry no rank (zero-weight convention)
    const auto b = SequenceSpec::finite({1.0, 0.0});
    CHECK_FALSE(sigma_inverse_at(b, 2).has_value());
    CHECK_FALSE(sigma_inverse_at(b, 10).has_value());
}

TEST_CASE("tabled sequence beyond the separable horizon") {
    // cutoff 1, envelope equal to the lone entry: rank 1 cannot be certified
    const auto a = SequenceSpec::tabled({0.5}, Envelope::power_tail(0.5, 0.0 + 1e-12));
    CHECK_THROWS_AS(rearrangement_prefix(a, 2), HorizonExhausted);
}
