#include <gtest/gtest.h>

#include <string>

#include "dwt/error.hpp"
#include "dwt/units.hpp"
#include "property.hpp"

using namespace dwt;
using namespace dwt::units;

TEST(Units, KsiToMegapascal) {
    // 45 ksi = 45000 lbf / in^2 with exact lbf and inch definitions.
    EXPECT_NEAR(convert({45.0, Unit::ksi}, Unit::MPa).value, 310.26407819257624, 1e-9);
    EXPECT_NEAR(convert({58.0, Unit::ksi}, Unit::MPa).value, 399.8959230037649, 1e-9);
}

TEST(Units, IdentityConversion) {
    const auto q = convert({100.0, Unit::MPa}, Unit::MPa);
    EXPECT_EQ(q.value, 100.0);
    EXPECT_EQ(q.unit, Unit::MPa);
}

TEST(Units, ImperialMomentAndSpeed) {
    EXPECT_NEAR(convert({1.0, Unit::ft_lb}, Unit::N_m).value, 1.3558179483314004, 1e-14);
    EXPECT_NEAR(convert({109.0, Unit::mph}, Unit::m_per_s).value, 48.72736, 1e-5);
    EXPECT_NEAR(convert({600.0, Unit::rpm}, Unit::rad_per_s).value, 62.83185307179586, 1e-12);
}

TEST(Units, CrossDimensionNamesBothUnits) {
    try {
        convert({1.0, Unit::ksi}, Unit::N);
        FAIL() << "expected ValidationError";
    } catch (const ValidationError& e) {
        const std::string msg = e.what();
        EXPECT_NE(msg.find("ksi"), std::string::npos);
        EXPECT_NE(msg.find("N"), std::string::npos);
    }
}

TEST(Units, ParseQuantity) {
    auto q = parse_quantity("58ksi", Unit::MPa);
    EXPECT_EQ(q.value, 58.0);
    EXPECT_EQ(q.unit, Unit::ksi);
    q = parse_quantity("185 mm", Unit::m);
    EXPECT_EQ(q.unit, Unit::mm);
    q = parse_quantity("1.5", Unit::m);
    EXPECT_EQ(q.unit, Unit::m);
    EXPECT_EQ(parse_unit("ft-lbs"), Unit::ft_lb);
    EXPECT_EQ(parse_unit("N-m"), Unit::N_m);
    EXPECT_THROW(parse_quantity("3 furlongs", Unit::m), ValidationError);
    EXPECT_THROW(parse_quantity("3 ksi", Unit::m), ValidationError);
    EXPECT_THROW(parse_quantity("abc", Unit::m), ValidationError);
}

TEST(UnitsProperty, RoundTripWithinDimension) {
    const Unit stress[] = {Unit::Pa, Unit::MPa, Unit::ksi};
    const Unit length[] = {Unit::m, Unit::mm, Unit::in};
    dwt::testing::for_all(11, dwt::testing::kDefaultCases, [&](dwt::testing::Gen& g) {
        const double v = g.log_uniform(1e-6, 1e9);
        const Unit a = stress[g.integer(0, 2)], b = stress[g.integer(0, 2)];
        EXPECT_TRUE(dwt::testing::rel_near(convert(convert({v, a}, b), a).value, v, 1e-14));
        const Unit c = length[g.integer(0, 2)], d = length[g.integer(0, 2)];
        EXPECT_TRUE(dwt::testing::rel_near(convert(convert({v, c}, d), c).value, v, 1e-14));
    });
}

TEST(UnitsProperty, ConversionIsLinear) {
    dwt::testing::for_all(12, dwt::testing::kDefaultCases, [](dwt::testing::Gen& g) {
        const double x = g.uniform(0, 1e4), y = g.uniform(0, 1e4);
        const double lhs = convert({x + y, Unit::lbf}, Unit::N).value;
        const double rhs = convert({x, Unit::lbf}, Unit::N).value + convert({y, Unit::lbf}, Unit::N).value;
        EXPECT_NEAR(lhs, rhs, 1e-9 * std::max(1.0, lhs));
    });
}
