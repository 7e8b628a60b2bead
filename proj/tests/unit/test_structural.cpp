#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "dwt/error.hpp"
#include "dwt/presets.hpp"
#include "dwt/structural.hpp"
#include "oracles.hpp"
#include "property.hpp"

using namespace dwt;
using namespace dwt::structural;

namespace {

ColumnSpec pipe_column(double load, double ecc) {
    // 6" schedule 40 pipe, 6 m tall.
    const double od = 0.1683, id = 0.1541;
    const double area = std::numbers::pi / 4 * (od * od - id * id);
    const double inertia = std::numbers::pi / 64 * (std::pow(od, 4) - std::pow(id, 4));
    return {load, ecc, od / 2, std::sqrt(inertia / area), 6.0, area, inertia};
}

}  // namespace

TEST(Ballast, MomentBalance) {
    const BallastSpec s{6035.0, 3.2, 1.5, 4.0, 12.0, 1600.0};
    EXPECT_NEAR(ballast_required_weight(s), 6035.0 * 3.2 * 1.5 / 4.0, 1e-9);
}

TEST(Ballast, HeightForWeight) {
    const BallastSpec s{6035.0, 3.2, 1.0, 4.0, 4.0, 1600.0};
    EXPECT_NEAR(ballast_height_for_weight(62762.56, s), 1.0, 1e-12);
}

TEST(Ballast, Invalid) {
    EXPECT_THROW(ballast_required_weight({6035.0, 3.2, 0.9, 4.0, 4.0, 1600.0}), ValidationError);
    EXPECT_THROW(ballast_required_weight({6035.0, 3.2, 1.0, 0.0, 4.0, 1600.0}), ValidationError);
    EXPECT_THROW(ballast_required_weight({-1.0, 3.2, 1.0, 4.0, 4.0, 1600.0}), ValidationError);
}

TEST(BallastProperty, WeightLinearInThrustAndSafetyFactor) {
    dwt::testing::for_all(31, dwt::testing::kDefaultCases, [](dwt::testing::Gen& g) {
        const BallastSpec s{g.uniform(100, 1e5), g.uniform(0.5, 5), g.uniform(1, 3), g.uniform(1, 10),
                            g.uniform(1, 50), g.uniform(1000, 3000)};
        const double k = g.uniform(0.1, 10);
        BallastSpec scaled = s;
        scaled.turbine_thrust_n *= k;
        EXPECT_TRUE(dwt::testing::rel_near(ballast_required_weight(scaled), k * ballast_required_weight(s), 1e-13));
        scaled = s;
        scaled.safety_factor *= 1.0 + k;
        EXPECT_TRUE(
            dwt::testing::rel_near(ballast_required_weight(scaled), (1.0 + k) * ballast_required_weight(s), 1e-13));
    });
}

TEST(Secant, BucklingLoad) {
    const auto col = pipe_column(1000.0, 0.01);
    const double euler = std::numbers::pi * std::numbers::pi * 200e9 * col.moment_i / (col.height_l * col.height_l);
    EXPECT_TRUE(dwt::testing::rel_near(secant_buckling_load(col, 200e9), euler, 1e-12));
}

TEST(Secant, DeflectionMatchesOde) {
    const double e_mod = 200e9;
    for (double frac : {0.05, 0.25, 0.5, 0.75, 0.9}) {
        for (double ecc : {0.001, 0.01, 0.05}) {
            auto col = pipe_column(0.0, ecc);
            col.load_p = frac * secant_buckling_load(col, e_mod);
            const double expect =
                oracle::column_midspan_deflection(col.load_p, ecc, e_mod * col.moment_i, col.height_l);
            EXPECT_TRUE(dwt::testing::rel_near(secant_deflection(col, e_mod), expect, 1e-3))
                << "frac " << frac << " ecc " << ecc;
        }
    }
}

TEST(Secant, DeflectionAtBucklingThrows) {
    auto col = pipe_column(0.0, 0.01);
    col.load_p = secant_buckling_load(col, 200e9);
    EXPECT_THROW(secant_deflection(col, 200e9), NumericError);
    col.load_p *= 1.5;
    EXPECT_THROW(secant_deflection(col, 200e9), NumericError);
}

TEST(Secant, AllowableSolvesEquation) {
    const auto mat = presets::tower_material();
    const auto col = pipe_column(0.0, 0.02);
    const double p = secant_allowable_load(col, mat);
    EXPECT_LT(std::abs(secant_residual(col, mat, p)), 1e-8);
    EXPECT_LT(p, secant_buckling_load(col, mat.require_elastic_modulus()));
    const double sigma = oracle::secant_stress_fixed_point(
        mat.require_yield_strength_compressive(), col.eccentricity_e * col.centroid_c / (col.gyration_k * col.gyration_k),
        col.height_l / col.gyration_k, mat.require_elastic_modulus());
    EXPECT_TRUE(dwt::testing::rel_near(p / col.area_a, sigma, 1e-8));
}

TEST(Secant, ZeroEccentricityGivesYield) {
    const auto mat = presets::tower_material();
    auto col = pipe_column(0.0, 0.0);
    col.height_l = 1.0;  // stocky enough to yield before buckling
    const double p = secant_allowable_load(col, mat);
    EXPECT_NEAR(p / col.area_a, mat.require_yield_strength_compressive(), 1e-9 * mat.require_yield_strength_compressive());
}

TEST(Secant, SlenderConcentricColumnUnstable) {
    const auto mat = presets::tower_material();
    auto col = pipe_column(0.0, 0.0);
    col.height_l = 40.0;
    EXPECT_THROW(secant_allowable_load(col, mat), NumericError);
}

TEST(Secant, MissingMaterialProperties) {
    const Material bare("bare", 400e6);
    EXPECT_THROW(secant_allowable_load(pipe_column(0.0, 0.01), bare), ValidationError);
}

TEST(SecantProperty, ResidualVanishesAcrossGrid) {
    const auto mat = presets::tower_material();
    dwt::testing::for_all(32, dwt::testing::kDefaultCases, [&](dwt::testing::Gen& g) {
        auto col = pipe_column(0.0, g.log_uniform(1e-4, 0.2));
        col.height_l = g.uniform(1.0, 15.0);
        const double p = secant_allowable_load(col, mat);
        EXPECT_LT(std::abs(secant_residual(col, mat, p)), 1e-8);
        EXPECT_GT(p, 0.0);
        EXPECT_LT(p / col.area_a, mat.require_yield_strength_compressive());
    });
}

TEST(SecantProperty, AllowableDecreasesWithEccentricity) {
    const auto mat = presets::tower_material();
    dwt::testing::for_all(33, dwt::testing::kDefaultCases, [&](dwt::testing::Gen& g) {
        const double e1 = g.log_uniform(1e-4, 0.1);
        const double e2 = e1 * g.uniform(1.01, 3.0);
        EXPECT_GT(secant_allowable_load(pipe_column(0.0, e1), mat), secant_allowable_load(pipe_column(0.0, e2), mat));
    });
}

TEST(Blade, SelfWeightMoment) {
    EXPECT_NEAR(blade_root_bending_moment(3.0, 1.4988), 3.0 * 9.80665 * 1.4988 / 2, 1e-12);
    EXPECT_NEAR(blade_root_bending_moment(presets::blade()), 22.04731, 1e-5);
}

TEST(Blade, BendingStresses) {
    const auto s = presets::blade_section();
    EXPECT_NEAR(rect_bending_stress(22.055, s, Orientation::Flat) / 1e6, 44.70608, 1e-5);
    EXPECT_NEAR(rect_bending_stress(22.055, s, Orientation::Upright) / 1e6, 0.966618, 1e-6);
}

TEST(Blade, OrientationRatioIsAspectRatio) {
    dwt::testing::for_all(34, dwt::testing::kDefaultCases, [](dwt::testing::Gen& g) {
        const double t = g.uniform(0.001, 0.05);
        const RectSection s(t * g.uniform(1.0, 100.0), t, 1.0);
        const double m = g.uniform(1, 1000);
        EXPECT_TRUE(dwt::testing::rel_near(
            rect_bending_stress(m, s, Orientation::Flat) / rect_bending_stress(m, s, Orientation::Upright),
            s.width() / s.thickness(), 1e-12));
    });
}

TEST(Blade, Torsion) {
    EXPECT_NEAR(rect_torsion_max_shear(300.0, presets::blade_section()) / 1e6, 307.99854, 1e-5);
}

TEST(Blade, InvalidSection) {
    EXPECT_THROW(RectSection(0.004, 0.185, 1.0), ValidationError);
    EXPECT_THROW(RectSection(0.185, 0.0, 1.0), ValidationError);
    EXPECT_THROW(rect_bending_stress(-1.0, presets::blade_section(), Orientation::Flat), ValidationError);
}
