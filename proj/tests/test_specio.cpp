#include <doctest.h>

#include "lorentz/errors.hpp"
#include "lorentz/specio.hpp"

using namespace lorentz;
using specio::json;

TEST_CASE("sequence specs round-trip") {
    const auto specs = {
        SequenceSpec::finite({1.0, -2.0, 0.5}),
        SequenceSpec::power(2.0, 1.5),
        SequenceSpec::geometric(1.0, -0.5),
        SequenceSpec::tabled({0.9, 0.1}, Envelope::geometric_tail(1.0, 0.5)),
    };
    for (const auto& s : specs) {
        const auto back = specio::sequence_from_json(specio::to_json(s));
        CHECK(back.kind() == s.kind());
        CHECK(specio::to_json(back) == specio::to_json(s));
    }
}

TEST_CASE("weight specs round-trip") {
    const auto w1 = WeightSpec::power_decay(0.75);
    const auto w2 = WeightSpec::explicit_prefix({1.0, 0.9}, 0.25);
    for (const auto& w : {w1, w2}) {
        const auto back = specio::weight_from_json(specio::to_json(w));
        CHECK(specio::to_json(back) == specio::to_json(w));
    }
}

TEST_CASE("family specs round-trip") {
    const auto fams = {
        FamilySpec::explicit_finite({SequenceSpec::finite({1.0})}),
        FamilySpec::shift_family(SequenceSpec::finite({1.0, 2.0})),
        FamilySpec::scaled_basis(SequenceSpec::power(1.0, -1.0)),
        FamilySpec::dominated(SequenceSpec::power(1.0, 2.0),
                              {SequenceSpec::finite({0.5})}),
    };
    for (const auto& f : fams) {
        const auto back = specio::family_from_json(specio::to_json(f));
        CHECK(back.kind() == f.kind());
        CHECK(specio::to_json(back) == specio::to_json(f));
    }
}

TEST_CASE("shorthands") {
    CHECK(specio::weight_from_shorthand("harmonic").tail_beta() == 1.0);
    CHECK(specio::weight_from_shorthand("invsqrt").tail_beta() == 0.5);
    CHECK(specio::weight_from_shorthand("power:0.8").tail_beta() == doctest::Approx(0.8));
    CHECK_THROWS_AS(specio::weight_from_shorthand("nope"), SpecError);
}

TEST_CASE("malformed specs name the offending field") {
    CHECK_THROWS_AS(specio::sequence_from_json(json{{"kind", "mystery"}}), SpecError);
    CHECK_THROWS_AS(specio::weight_from_json(json{{"kind", "power"}}), json::exception);
}

TEST_CASE("digest is deterministic and input-sensitive") {
    const json a = {{"kind", "power"}, {"c", 1.0}, {"s", 1.0}};
    const json b = {{"kind", "power"}, {"c", 1.0}, {"s", 2.0}};
    CHECK(specio::digest(a) == specio::digest(a));
    CHECK(specio::digest(a) != specio::digest(b));
}
