#include <gtest/gtest.h>

#include <cmath>

#include "dwt/error.hpp"
#include "dwt/fatigue.hpp"
#include "dwt/units.hpp"
#include "oracles.hpp"
#include "property.hpp"

using namespace dwt;
using namespace dwt::fatigue;

namespace {

double ksi(double v) { return units::to_si(v, units::Unit::ksi); }
double to_ksi(double pa) { return units::from_si(pa, units::Unit::ksi); }

}  // namespace

TEST(Fatigue, UnmodifiedEnduranceIsHalfSut) {
    EXPECT_NEAR(to_ksi(endurance_limit_unmodified(Material("steel", ksi(58)))), 29.0, 1e-12);
    EXPECT_NEAR(to_ksi(endurance_limit_unmodified(Material("al", ksi(45)))), 22.5, 1e-12);
}

TEST(Fatigue, TowerMarinChain) {
    const double se = marin_modified_endurance(ksi(29), MarinFactors::tower_preset());
    EXPECT_NEAR(to_ksi(se), 19.72986, 1e-5);
    EXPECT_NEAR(to_ksi(se) / 19.68 - 1.0, 0.0, 0.005);
}

TEST(Fatigue, BladeMarinChain) {
    const double se = marin_modified_endurance(ksi(22.5), MarinFactors::blade_preset());
    EXPECT_NEAR(to_ksi(se), 17.5959675, 1e-7);
}

TEST(Fatigue, UnitFactorsAreIdentity) {
    EXPECT_EQ(marin_modified_endurance(123.0e6, MarinFactors{}), 123.0e6);
}

TEST(Fatigue, BladeSnConstants) {
    const auto c = sn_constants(ksi(45), ksi(17.6), 0.9);
    EXPECT_NEAR(to_ksi(c.a), 93.19602, 1e-4);
    EXPECT_NEAR(c.b, -0.1206475, 1e-7);
    EXPECT_NEAR(to_ksi(c.a) / 93.196 - 1.0, 0.0, 1e-3);
}

TEST(Fatigue, TowerSnConstants) {
    const auto c = sn_constants(ksi(58), ksi(19.73), 0.9);
    EXPECT_NEAR(to_ksi(c.a), 138.1, 0.05);
    EXPECT_NEAR(c.b, -0.1408, 5e-5);
}

TEST(Fatigue, DegenerateSnRejected) {
    EXPECT_THROW(sn_constants(ksi(20), ksi(18), 0.9), ValidationError);
    EXPECT_THROW(sn_constants(ksi(20), ksi(19), 0.9), ValidationError);
}

TEST(Fatigue, TowerLife) {
    const double se = marin_modified_endurance(ksi(29), MarinFactors::tower_preset());
    const auto c = sn_constants(ksi(58), se, 0.9);
    const auto life = cycles_to_failure(ksi(13.56), c);
    EXPECT_NEAR(life.cycles, 1.4332e7, 0.0005e7);
    EXPECT_TRUE(life.below_endurance_extrapolation);
    EXPECT_FALSE(life.low_cycle);
    EXPECT_GT(cycles_to_calendar(life.cycles, 1000), 38.0);
}

TEST(Fatigue, BladeLifeWithPublishedConstants) {
    const auto c = sn_constants(ksi(45), ksi(17.6), 0.9);
    const double n = cycles_to_failure(ksi(6.48), c).cycles;
    EXPECT_NEAR(n / 3.9513e9, 1.0, 1e-4);
    EXPECT_NEAR(n / 4e9, 1.0, 0.05);
    EXPECT_GT(cycles_to_calendar(n, 144000), 75.0);
}

TEST(Fatigue, BaseCaseOfPowerLaw) {
    const auto c = sn_constants(ksi(45), ksi(17.6), 0.9);
    EXPECT_NEAR(cycles_to_failure(c.a, c).cycles, 1.0, 1e-12);
}

TEST(Fatigue, CalendarConversion) {
    EXPECT_NEAR(cycles_to_calendar(1.4e7, 1000), 38.356164, 1e-6);
    EXPECT_NEAR(cycles_to_calendar(4.0e9, 144000), 76.103500, 1e-6);
    EXPECT_EQ(cycles_to_calendar(0, 1000), 0.0);
    EXPECT_THROW(cycles_to_calendar(10, 0), ValidationError);
}

TEST(Fatigue, InvalidInputs) {
    EXPECT_THROW(MarinFactors({0.0, 1, 1, 1, 1, 1}).validate(), ValidationError);
    EXPECT_THROW(MarinFactors({1.6, 1, 1, 1, 1, 1}).validate(), ValidationError);
    const auto c = sn_constants(ksi(45), ksi(17.6), 0.9);
    EXPECT_THROW(cycles_to_failure(0.0, c), ValidationError);
    EXPECT_THROW(cycles_to_failure(-1.0, c), ValidationError);
}

TEST(FatigueProperty, CurvePassesThroughBothKnees) {
    dwt::testing::for_all(21, dwt::testing::kDefaultCases, [](dwt::testing::Gen& g) {
        const double sut = g.uniform(200e6, 1500e6);
        const double f = g.uniform(0.7, 0.95);
        const double se = g.uniform(0.2, 0.6) * sut;
        if (f * sut <= se) return;
        const auto c = sn_constants(sut, se, f);
        EXPECT_TRUE(dwt::testing::rel_near(c.low_cycle_knee(), f * sut, 1e-12));
        EXPECT_TRUE(dwt::testing::rel_near(c.endurance_knee(), se, 1e-12));
        EXPECT_TRUE(dwt::testing::rel_near(cycles_to_failure(se, c).cycles, 1e6, 1e-9));
    });
}

TEST(FatigueProperty, MatchesLogDomainOracle) {
    dwt::testing::for_all(22, dwt::testing::kDefaultCases, [](dwt::testing::Gen& g) {
        const double sut = g.uniform(200e6, 1500e6);
        const double se = g.uniform(0.2, 0.6) * sut;
        const double f = 0.9;
        if (f * sut <= se) return;
        const double sigma = g.uniform(0.1, 0.9) * sut;
        const double n = cycles_to_failure(sigma, sn_constants(sut, se, f)).cycles;
        EXPECT_TRUE(dwt::testing::rel_near(n, oracle::sn_cycles_log_domain(sigma, sut, se, f), 1e-9));
    });
}

TEST(FatigueProperty, LifeDecreasesWithStress) {
    dwt::testing::for_all(23, dwt::testing::kDefaultCases, [](dwt::testing::Gen& g) {
        const auto c = sn_constants(ksi(58), ksi(g.uniform(10, 25)), 0.9);
        const double s1 = ksi(g.uniform(1, 60));
        const double s2 = s1 * g.uniform(1.001, 2.0);
        EXPECT_GT(cycles_to_failure(s1, c).cycles, cycles_to_failure(s2, c).cycles);
    });
}
