#include <cstdint>

#include <gtest/gtest.h>

#include <bosonkit/dobinski.hpp>
#include <bosonkit/stirling.hpp>

using namespace bosonkit;

namespace {

const rational micro(1, 1000000);

void expect_rounds_to(const error_bounded_real& v, const integer& want, const rational& max_error = micro)
{
    EXPECT_LT(v.abs_error(), max_error) << v.to_string();
    EXPECT_TRUE(v.contains(rational(want))) << v.to_string() << " vs " << want;
    EXPECT_EQ(v.round_to_integer(), want) << v.to_string();
}

} // namespace

TEST(InverseE, EnclosesReference)
{
    // 1/e to 40 digits.
    const rational ref(integer("3678794411714423215955237701614608674458"), int_pow(integer(10), 40));
    for (unsigned bits : {16U, 64U, 256U}) {
        const auto v = inverse_e(bits);
        EXPECT_LE(v.abs_error(), rational(integer(1), integer(1) << bits));
        EXPECT_LE(abs(v.value() - ref), v.abs_error() + rational(1, int_pow(integer(10), 39)));
    }
}

TEST(RoundToBits, RelativeErrorBound)
{
    const rational x(integer(22), integer(7));
    for (unsigned bits : {4U, 10U, 53U}) {
        const rational y = round_to_bits(x, bits);
        EXPECT_LE(abs(y - x), x / (integer(1) << bits));
    }
}

TEST(DobinskiClassic, Examples)
{
    expect_rounds_to(dobinski_classic(1), 1);
    expect_rounds_to(dobinski_classic(3), 5);
    expect_rounds_to(dobinski_classic(10), 115975);
}

TEST(DobinskiClassic, GridAgainstOracle)
{
    const auto bells = bell_sequence(1, 1, 10);
    for (std::uint32_t n = 1; n <= 10; ++n) {
        expect_rounds_to(dobinski_classic(n), bells[n]);
    }
}

TEST(DobinskiRR, Examples)
{
    expect_rounds_to(dobinski_rr(2, 1), 1);
    expect_rounds_to(dobinski_rr(2, 2), 7);
    expect_rounds_to(dobinski_rr(2, 3), 87);
}

TEST(DobinskiRR, GridAgainstOracle)
{
    for (std::uint32_t r = 1; r <= 3; ++r) {
        const auto bells = bell_sequence(r, r, 4);
        for (std::uint32_t n = 1; n <= 4; ++n) {
            expect_rounds_to(dobinski_rr(r, n), bells[n]);
        }
    }
}

TEST(DobinskiRS, Examples)
{
    expect_rounds_to(dobinski_rs(2, 1, 2), 3);
    expect_rounds_to(dobinski_rs(2, 1, 4), 73);
    expect_rounds_to(dobinski_rs(3, 1, 2), 4);
}

TEST(DobinskiRS, GridAgainstOracle)
{
    for (auto [r, s] : {std::pair{2U, 1U}, std::pair{3U, 1U}, std::pair{3U, 2U}, std::pair{4U, 1U}, std::pair{5U, 3U}}) {
        const auto bells = bell_sequence(r, s, 5);
        for (std::uint32_t n = 1; n <= 5; ++n) {
            expect_rounds_to(dobinski_rs(r, s, n), bells[n]);
        }
    }
}

TEST(DobinskiRS, RejectsRNotAboveS)
{
    try {
        dobinski_rs(2, 2, 3);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::unsupported);
    }
}

TEST(DobinskiRS, PrintedFormDiverges)
{
    for (std::uint32_t n = 1; n <= 3; ++n) {
        try {
            dobinski_rs(2, 1, n, {}, rs_variant::printed);
            FAIL() << "printed form converged at n = " << n;
        } catch (const error& e) {
            EXPECT_EQ(e.code(), errc::divergent);
        }
    }
}

TEST(BellHypergeometric, Examples)
{
    expect_rounds_to(bell_hypergeometric(1, 1, 1), 1);
    expect_rounds_to(bell_hypergeometric(1, 1, 2), 3);
    expect_rounds_to(bell_hypergeometric(1, 1, 3), 13);
}

TEST(BellHypergeometric, UnitStepFamilies)
{
    for (std::uint32_t r = 1; r <= 3; ++r) {
        const auto bells = bell_sequence(r + 1, r, 4);
        for (std::uint32_t n = 1; n <= 4; ++n) {
            expect_rounds_to(bell_hypergeometric(1, r, n), bells[n]);
        }
    }
}

TEST(BellHypergeometric, AgreesWithRSRoute)
{
    for (std::uint32_t n = 1; n <= 4; ++n) {
        const auto a = dobinski_rs(2, 1, n);
        const auto b = bell_hypergeometric(1, 1, n);
        EXPECT_LE(abs(a.value() - b.value()), a.abs_error() + b.abs_error());
    }
}

TEST(Truncation, ErrorShrinksWithCutoff)
{
    const dobinski_series families[] = {classic_series(5), rr_series(2, 3), rs_series(3, 2, 3),
                                        hypergeometric_series(1, 2, 3)};
    for (const auto& series : families) {
        rational previous = -1;
        for (std::uint64_t cutoff = 12; cutoff <= 40; cutoff += 4) {
            const auto v = evaluate_truncated(series, cutoff);
            if (previous >= 0) {
                EXPECT_LT(v.abs_error(), previous) << "cutoff " << cutoff;
            }
            previous = v.abs_error();
        }
    }
}

TEST(Truncation, TruncatedValueEnclosesTruth)
{
    // Even with few terms the enclosure must contain B_{2,2}(3) = 87.
    for (std::uint64_t cutoff = 8; cutoff <= 30; cutoff += 2) {
        const auto v = evaluate_truncated(rr_series(2, 3), cutoff);
        EXPECT_TRUE(v.contains(rational(87))) << cutoff << ": " << v.to_string();
    }
}

TEST(Precision, ExhaustedWhenCapped)
{
    series_spec spec;
    spec.working_precision = 8;
    spec.max_precision = 16;
    spec.target_abs_error = rational(1, int_pow(integer(10), 12));
    try {
        dobinski_classic(4, spec);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::precision_exhausted);
    }
    spec.max_precision = 4096;
    const auto v = dobinski_classic(4, spec);
    EXPECT_GT(v.precision_bits(), 16U);
    EXPECT_EQ(v.round_to_integer(), 15);
}

TEST(ErrorBoundedReal, RefusesToRoundWideIntervals)
{
    const error_bounded_real v(rational(7, 2), rational(1, 2));
    EXPECT_FALSE(v.can_round());
    EXPECT_THROW(v.round_to_integer(), error);
}
