#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "rigsim/errors.hpp"
#include "rigsim/statics.hpp"

using namespace rigsim;
using namespace rigsim::statics;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

BeamSpec rod(double length = 0.662) {
    BeamSpec b;
    b.length = length;
    b.section = {0.012, 0.010};
    b.material.density = 7700.0;
    b.material.youngs_modulus = 2e11;
    b.material.yield_strength = 2.15e8;
    return b;
}

}  // namespace

TEST(Section, AreaOfRodTube) {
    // pi/4 * (0.012^2 - 0.010^2)
    EXPECT_NEAR(section_area({0.012, 0.010}), 3.4558e-5, 1e-9);
    const double d = 0.01;
    EXPECT_DOUBLE_EQ(section_area({d, 0.0}), std::numbers::pi * d * d / 4.0);
    EXPECT_THROW(section_area({0.012, 0.012}), ConfigError);
    EXPECT_THROW(section_area({0.012, -0.001}), ConfigError);
}

TEST(Section, SecondMoment) {
    EXPECT_LT(rel(second_moment({0.012, 0.010}), 5.270e-10), 1e-3);
    EXPECT_LT(rel(second_moment({0.012, 0.008}), 8.168e-10), 1e-3);
    const double d = 0.012;
    const double solid = second_moment({d, 0.0});
    double previous = solid;
    for (double eps : {1e-4, 1e-6, 1e-8}) {
        const double thin = second_moment({d, d - eps});
        EXPECT_GT(thin, 0.0);
        EXPECT_LT(thin, previous);
        previous = thin;
    }
    EXPECT_LT(previous / solid, 1e-5);
}

TEST(Section, MonotoneInDiameters) {
    for (double di = 0.0; di < 0.0099; di += 0.001) {
        EXPECT_LT(second_moment({0.010, di}), second_moment({0.012, di}));
        EXPECT_LT(section_area({0.010, di}), section_area({0.012, di}));
        EXPECT_GT(second_moment({0.012, di}), second_moment({0.012, di + 0.0005}));
        EXPECT_GT(section_area({0.012, di}), section_area({0.012, di + 0.0005}));
    }
}

TEST(Load, PaperCompatUsesTotalWeight) {
    const auto w = udl_from_masses(default_actuator_masses(), rod(), 1, UdlMode::paper_compat);
    EXPECT_NEAR(w.intensity, 19.62, 1e-12);
    EXPECT_EQ(w.mode, UdlMode::paper_compat);
}

TEST(Load, PhysicalSpreadsOverSpanAndRods) {
    const ComponentMassList two_kg{{"actuator", 2.0}};
    const auto w = udl_from_masses(two_kg, rod(0.7), 2, UdlMode::physical);
    EXPECT_LT(rel(w.intensity, 14.014), 1e-4);
    EXPECT_DOUBLE_EQ(w.intensity, 2.0 * 9.81 / (2.0 * 0.7));
}

TEST(Load, Errors) {
    EXPECT_THROW(udl_from_masses({}, rod(), 1, UdlMode::physical), ConfigError);
    EXPECT_THROW(udl_from_masses({{"a", 1.0}}, rod(), 0, UdlMode::physical), ConfigError);
    EXPECT_THROW(udl_from_masses({{"a", 0.0}}, rod(), 1, UdlMode::physical), ConfigError);
}

TEST(Load, ModesAgreeWhenSharingTimesLengthIsOne) {
    const ComponentMassList m{{"a", 1.3}, {"b", 0.4}};
    const auto a = udl_from_masses(m, rod(0.5), 2, UdlMode::physical);
    const auto b = udl_from_masses(m, rod(0.5), 2, UdlMode::paper_compat);
    EXPECT_DOUBLE_EQ(a.intensity, b.intensity);
}

TEST(ClosedForm, PaperVector) {
    const double w = 19.62;
    const double l = 0.662;
    EXPECT_LT(rel(reactions(w, l), 6.494), 1e-3);
    EXPECT_LT(rel(end_moment(w, l), 0.7165), 1e-3);
    EXPECT_LT(rel(centre_moment(w, l), 0.3582), 1e-3);
    EXPECT_LT(rel(max_deflection(w, l, 2e11, PAPER_I), 2.28e-11), 1e-3);
}

TEST(ClosedForm, PhysicalVector) {
    EXPECT_LT(rel(reactions(14.014, 0.7), 4.905), 1e-4);
    EXPECT_LT(rel(end_moment(14.014, 0.7), 0.5722), 1e-4);
    EXPECT_LT(rel(max_deflection(19.62, 0.662, 2e11, 5.270e-10), 9.31e-5), 1e-3);
}

TEST(ClosedForm, ZeroLoad) {
    EXPECT_EQ(reactions(0.0, 0.7), 0.0);
    EXPECT_EQ(end_moment(0.0, 0.7), 0.0);
    EXPECT_EQ(centre_moment(0.0, 0.7), 0.0);
    EXPECT_EQ(max_deflection(0.0, 0.7, 2e11, 5e-10), 0.0);
}

TEST(ClosedForm, Errors) {
    EXPECT_THROW(reactions(1.0, 0.0), ConfigError);
    EXPECT_THROW(max_deflection(1.0, 1.0, 0.0, 1e-9), ConfigError);
    EXPECT_THROW(max_deflection(1.0, 1.0, 2e11, -1e-9), ConfigError);
    EXPECT_THROW(bending_stress(1.0, 0.0, 1e-9), ConfigError);
}

TEST(ClosedForm, LinearityAndHalfMomentProperty) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> wd(0.0, 100.0), ld(0.05, 2.0);
    for (int i = 0; i < 500; ++i) {
        const double w = wd(rng);
        const double l = ld(rng);
        EXPECT_DOUBLE_EQ(centre_moment(w, l), end_moment(w, l) / 2.0);
        EXPECT_NEAR(reactions(2 * w, l), 2 * reactions(w, l), 1e-12 * reactions(w, l) + 1e-300);
        EXPECT_NEAR(end_moment(2 * w, l), 2 * end_moment(w, l), 1e-12 * end_moment(w, l) + 1e-300);
        const double d = max_deflection(w, l, 2e11, 5.27e-10);
        EXPECT_NEAR(max_deflection(2 * w, l, 2e11, 5.27e-10), 2 * d, 1e-12 * d + 1e-300);
        const double s = bending_stress(end_moment(w, l), 0.006, 5.27e-10);
        EXPECT_NEAR(bending_stress(end_moment(2 * w, l), 0.006, 5.27e-10), 2 * s, 1e-9 * s + 1e-300);
    }
}

TEST(ClosedForm, UnitsRoundTripFromMillimetres) {
    const double l_mm = 662.0;
    const double d_o_mm = 12.0;
    const double d_i_mm = 10.0;
    const TubeSection si{0.012, 0.010};
    const TubeSection from_mm{d_o_mm / 1000.0, d_i_mm / 1000.0};
    EXPECT_DOUBLE_EQ(second_moment(si), second_moment(from_mm));
    EXPECT_DOUBLE_EQ(end_moment(19.62, 0.662), end_moment(19.62, l_mm / 1000.0));
}

TEST(Stress, BendingAndSafety) {
    EXPECT_LT(rel(bending_stress(0.7165, 0.006, 5.270e-10), 8.157e6), 1e-3);
    MaterialSpec steel;
    steel.yield_strength = 2.15e8;
    EXPECT_EQ(bending_stress(0.0, 0.006, 5.27e-10), 0.0);
    EXPECT_TRUE(safety_check(0.0, steel));
    EXPECT_FALSE(safety_check(2.15e8, steel));
    EXPECT_TRUE(safety_check(std::nextafter(2.15e8, 0.0), steel));
    MaterialSpec no_yield;
    EXPECT_THROW(safety_check(1.0, no_yield), ConfigError);
}

TEST(Analyze, RodUnderActuatorLoadIsSafe) {
    const auto beam = rod();
    const auto load = udl_from_masses(default_actuator_masses(), beam, 2, UdlMode::physical);
    const auto r = analyze(beam, load);
    ASSERT_TRUE(r.safe.has_value());
    EXPECT_TRUE(*r.safe);
    EXPECT_DOUBLE_EQ(r.centre_moment * 2.0, r.end_moment);
    const auto paper = analyze(beam, {19.62, UdlMode::paper_compat}, PAPER_I);
    EXPECT_LT(rel(paper.deflection, 2.28e-11), 1e-3);
}

TEST(Invariants, Validation) {
    MaterialSpec m;
    m.density = 0.0;
    EXPECT_THROW(m.validate(), ConfigError);
    m = {};
    m.yield_strength = -1.0;
    EXPECT_THROW(m.validate(), ConfigError);
    BeamSpec b = rod();
    b.length = 0.0;
    EXPECT_THROW(b.validate(), ConfigError);
    EXPECT_THROW((UdlLoad{-1.0, UdlMode::physical}.validate()), ConfigError);
}
