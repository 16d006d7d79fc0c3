#include <cmath>
#include <cstdint>

#include <gtest/gtest.h>

#include <bosonkit/bessel.hpp>
#include <bosonkit/dobinski.hpp>
#include <bosonkit/measures.hpp>
#include <bosonkit/stirling.hpp>

using namespace bosonkit;

namespace {

const rational tight(1, 1000000000);
const double inv_e = std::exp(-1.0);

errc code_of(auto&& fn)
{
    try {
        fn();
    } catch (const error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no bosonkit::error thrown";
    return errc::malformed;
}

} // namespace

TEST(BesselI, AtZero)
{
    EXPECT_EQ(bessel_i(0, rational(0), tight).value(), 1);
    EXPECT_EQ(bessel_i(1, rational(0), tight).value(), 0);
}

TEST(BesselI, ReferenceValues)
{
    struct ref {
        std::uint32_t nu;
        rational y;
        double value;
    };
    for (const auto& [nu, y, value] : {ref{1, rational(2), 1.590636854637329063},
                                       ref{0, rational(3), 4.880792585865024086},
                                       ref{2, rational(1, 2), 0.03190614917773825381}}) {
        const auto v = bessel_i(nu, y, rational(1, int_pow(integer(10), 15)));
        EXPECT_LT(v.abs_error_double(), 1e-15);
        EXPECT_NEAR(v.value_double(), value, 1e-14);
        EXPECT_NEAR(bessel_i_approx(nu, to_double(y)), value, 1e-13 * value);
    }
}

TEST(Density, ReferenceValues)
{
    const auto w1 = weight_2r_r(1)(1.0);
    EXPECT_NEAR(w1.value, 0.215269289248937659, 1e-14);
    EXPECT_LT(w1.abs_error, 1e-13);
    EXPECT_NEAR(weight_2r_r(2)(1.0).value, 0.04661951665236669, 1e-15);
}

TEST(Density, SmallArgumentBehaviour)
{
    // r = 1 tends to 1/e; r = 2 blows up like x^(-1/2) / (4e).
    EXPECT_NEAR(weight_2r_r(1)(1e-12).value, inv_e, 1e-9);
    const double x = 1e-8;
    const double leading = std::pow(x, -0.5) / (4 * std::exp(1.0));
    EXPECT_NEAR(weight_2r_r(2)(x).value / leading, 1.0, 1e-3);
    EXPECT_NEAR(weight_2r_r(2)(x).value, 919.637, 1e-2);
}

TEST(Density, DomainIsPositiveReals)
{
    EXPECT_EQ(code_of([] { weight_2r_r(1)(0.0); }), errc::domain);
    EXPECT_EQ(code_of([] { weight_2r_r(2)(-1.0); }), errc::domain);
    EXPECT_EQ(code_of([] { weight_2r_r(0); }), errc::out_of_range);
}

TEST(Density, NonNegativeOnLogGrid)
{
    for (std::uint32_t r = 1; r <= 3; ++r) {
        const auto w = weight_2r_r(r);
        for (int i = 0; i <= 200; ++i) {
            const double x = std::pow(10.0, -6.0 + 9.0 * i / 200.0);
            EXPECT_GE(w(x).value, 0.0) << "r=" << r << " x=" << x;
        }
    }
}

TEST(DiracComb, AtomsAndWeights)
{
    const auto m = dirac_comb();
    EXPECT_EQ(m.location(0), 0);
    EXPECT_EQ(m.location(1), 1);
    EXPECT_EQ(m.scaled_weight(1), 1); // weight 1/e
    EXPECT_EQ(m.scaled_weight(3), rational(1, 6));
    EXPECT_TRUE(m.unit_mass);
}

TEST(DiracComb, MomentsAreBellNumbers)
{
    const auto m = dirac_comb();
    EXPECT_EQ(moment(m, 1, tight).round_to_integer(), 1);
    EXPECT_EQ(moment(m, 3, tight).round_to_integer(), 5);
    EXPECT_EQ(moment(m, 4, tight).round_to_integer(), 15);
    const auto mass = total_mass(m, tight);
    EXPECT_TRUE(mass.contains(rational(1)));
    EXPECT_LT(mass.abs_error(), tight);
}

TEST(RarefiedComb, Locations)
{
    const auto m = rarefied_comb(2);
    EXPECT_EQ(m.location(0), 2);
    EXPECT_EQ(m.location(1), 6);
    EXPECT_EQ(m.location(2), 12);
    EXPECT_EQ(m.location(3), 20);
}

TEST(RarefiedComb, MomentsAreBellNumbers)
{
    for (std::uint32_t r = 1; r <= 3; ++r) {
        const auto bells = bell_sequence(r, r, 4);
        for (std::uint32_t n = 1; n <= 4; ++n) {
            EXPECT_EQ(moment(rarefied_comb(r), n, tight).round_to_integer(), bells[n]) << r << "," << n;
        }
    }
    EXPECT_EQ(moment(rarefied_comb(2), 2, tight).round_to_integer(), 7);
}

TEST(RarefiedComb, ZerothMomentUnsupported)
{
    EXPECT_EQ(code_of([] { moment(rarefied_comb(2), 0, tight); }), errc::unsupported_moment);
}

TEST(DensityMoments, Examples)
{
    const auto w = weight_2r_r(1);
    const auto m2 = moment(w, 2, 1e-9);
    EXPECT_NEAR(m2.value_double(), 3.0, 1e-9);
    EXPECT_LT(m2.abs_error_double(), 1e-9);
    EXPECT_NEAR(moment(w, 4, 1e-9).value_double(), 73.0, 73e-9);
}

TEST(DensityMoments, AgreeWithSeries)
{
    const auto w = weight_2r_r(1);
    for (std::uint32_t n = 1; n <= 4; ++n) {
        const auto quad = moment(w, n, 1e-9);
        const auto series = dobinski_rs(2, 1, n);
        EXPECT_LE(std::abs(quad.value_double() - series.value_double()),
                  quad.abs_error_double() + series.abs_error_double() + 1e-12)
            << "n=" << n;
    }
}

TEST(DensityMoments, HigherFamilyMatchesBell)
{
    const auto bells = bell_sequence(4, 2, 3);
    const auto w = weight_2r_r(2);
    for (std::uint32_t n = 1; n <= 3; ++n) {
        const double b = to_double(rational(bells[n]));
        EXPECT_NEAR(moment(w, n, 1e-9 * b).value_double(), b, 1e-9 * b) << "n=" << n;
    }
}

TEST(DensityMass, MatchesClosedForm)
{
    const auto mass = total_mass(weight_2r_r(1), 1e-10);
    EXPECT_NEAR(mass.value_double(), 0.632120558828557678, 1e-9);
    const auto expected = expected_mass_2r_r(1, tight);
    const auto inv = inverse_e(128);
    EXPECT_LT(expected.abs_error(), tight);
    EXPECT_LE(abs(expected.value() - (1 - inv.value())), expected.abs_error() + inv.abs_error());
    // r = 2: 1 - 2/e.
    EXPECT_NEAR(total_mass(weight_2r_r(2), 1e-10).value_double(), 1 - 2 * inv_e, 1e-9);
}

TEST(VerifyMoments, SupportedFamiliesPass)
{
    EXPECT_TRUE(verify_moments(1, 1, 5, 1e-9).passed());
    EXPECT_TRUE(verify_moments(2, 2, 4, 1e-9).passed());
    EXPECT_TRUE(verify_moments(2, 1, 5, 1e-9).passed());
    EXPECT_TRUE(verify_moments(4, 2, 3, 1e-9).passed());
}

TEST(VerifyMoments, UnsupportedFamily)
{
    EXPECT_EQ(code_of([] { verify_moments(3, 1, 3, 1e-9); }), errc::unsupported_family);
}
