#include <doctest.h>

#include "lorentz/errors.hpp"
#include "lorentz/norms.hpp"
#include "lorentz/oracle.hpp"

using namespace lorentz;

TEST_CASE("brute force agrees with closed forms") {
    const auto w = WeightSpec::power_decay(1.0);
    const auto a = SequenceSpec::finite({2.0, -3.0, 1.0});
    // greedy: 3 + 2/2 + 1/3
    CHECK(oracle::brute_force_norm_pth(a, 1.0, w) ==
          doctest::Approx(3.0 + 1.0 + 1.0 / 3.0));
    CHECK(oracle::brute_force_norm_pth(SequenceSpec::finite({0.0}), 1.0, w) == 0.0);
}

TEST_CASE("brute force matches the library norm") {
    const auto w = WeightSpec::power_decay(0.5);
    const auto a = SequenceSpec::finite({1.0, 1.0, -2.5, 0.0, 1.0});
    const auto iv = lorentz_norm_pth(a, 2.0, w);
    CHECK(oracle::brute_force_norm_pth(a, 2.0, w) == doctest::Approx(iv.mid()));
}

TEST_CASE("oracle seminorm maximizes over permutations") {
    const auto w = WeightSpec::power_decay(1.0);
    const auto a = SequenceSpec::finite({1.0, 2.0, 3.0});
    // best pairing of (1,2,3) with (1, 1/2, 1/3): 3 + 1 + 1/3
    CHECK(oracle::brute_force_seminorm_pth(a, 1.0, w, 3) ==
          doctest::Approx(3.0 + 1.0 + 1.0 / 3.0));
    CHECK(oracle::brute_force_seminorm_pth(a, 1.0, w, 3) ==
          doctest::Approx(seminorm_pth(a, 1.0, w, 3)));
}

TEST_CASE("support caps are enforced") {
    const auto w = WeightSpec::power_decay(1.0);
    const auto big = SequenceSpec::finite(std::vector<double>(9, 1.5));
    CHECK_THROWS_AS(oracle::brute_force_norm_pth(big, 1.0, w), SupportTooLarge);
    CHECK_THROWS_AS(oracle::brute_force_seminorm_pth(big, 1.0, w, 9), SupportTooLarge);
}
