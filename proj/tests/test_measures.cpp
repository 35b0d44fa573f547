#include "wedgent/errors.hpp"
#include "wedgent/lu_harness.hpp"
#include "wedgent/measures.hpp"
#include "wedgent/separability.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace wedgent;

namespace {

// Literal transcription of the K, L, j triple sum over digit vectors.
double brute_force_term_sum(const PureState& s)
{
    const Dims& dims = s.dims();
    auto amp = [&](const std::vector<std::size_t>& idx) {
        std::size_t f = 0;
        for (std::size_t j = 0; j < dims.size(); ++j)
            f = f * dims[j] + idx[j];
        return s.amplitudes()[f];
    };
    double sum = 0.0;
    for (std::size_t fk = 0; fk < s.size(); ++fk)
        for (std::size_t fl = 0; fl < s.size(); ++fl) {
            const auto k = oracle::digits(fk, dims), l = oracle::digits(fl, dims);
            for (std::size_t j = 0; j < dims.size(); ++j) {
                auto ks = k, ls = l;
                ks[j] = l[j];
                ls[j] = k[j];
                sum += std::norm(amp(k) * amp(l) - amp(ks) * amp(ls));
            }
        }
    return sum;
}

PureState bell_times_zero()
{
    return tensor(oracle::bell(), PureState::basis({2}, std::vector<std::size_t>{0}));
}

} // namespace

TEST(Oracle, ClosedFormMatchesBruteForceExpansion)
{
    // The purity identity the measure tests lean on, checked before use.
    Rng rng(100);
    for (int trial = 0; trial < 50; ++trial) {
        const PureState s = random_state({2, 2, 2}, rng);
        EXPECT_NEAR(2.0 * brute_force_term_sum(s), oracle::multipartite_sq_closed_form(s), 1e-12);
    }
    EXPECT_NEAR(oracle::multipartite_sq_closed_form(oracle::ghz(3)), 6.0, 1e-14);
    EXPECT_NEAR(oracle::multipartite_sq_closed_form(oracle::w3()), 16.0 / 3.0, 1e-14);
    EXPECT_NEAR(oracle::multipartite_sq_closed_form(bell_times_zero()), 4.0, 1e-14);
}

TEST(Bipartite, Bell)
{
    const auto r = bipartite_concurrence(oracle::bell());
    EXPECT_EQ(r.kind, MeasureKind::BipartiteConcurrence);
    EXPECT_NEAR(r.value, 1.0, 1e-12);
    EXPECT_EQ(r.norm_constant, 2.0);
    EXPECT_NEAR(r.value, std::sqrt(r.norm_constant * r.term_sum), 1e-12);
}

TEST(Bipartite, ProductStatesVanish)
{
    Rng rng(101);
    for (int trial = 0; trial < 20; ++trial)
        EXPECT_LE(bipartite_concurrence(random_product_state({3, 4}, rng)).value, 1e-7);
}

TEST(Bipartite, PurityIdentity)
{
    Rng rng(102);
    for (int trial = 0; trial < 200; ++trial) {
        const PureState s = random_state({3, 4}, rng);
        const double c = bipartite_concurrence(s).value;
        EXPECT_NEAR(c * c, 2.0 * (1.0 - oracle::marginal_purity(s, 0)), 1e-9);
    }
}

TEST(Bipartite, Errors)
{
    EXPECT_THROW(bipartite_concurrence(oracle::ghz(3)), Error);
    EXPECT_THROW(bipartite_concurrence(PureState({2, 2}, {1.0, 0.0, 0.0, 1.0})), NotNormalizedError);
    MeasureConfig bad;
    bad.norm_constant = 0.0;
    EXPECT_THROW(bipartite_concurrence(oracle::bell(), bad), Error);
}

TEST(PairQubit, Values)
{
    EXPECT_NEAR(pair_qubit_concurrence(oracle::bell()).value, 1.0, 1e-12);
    EXPECT_NEAR(pair_qubit_concurrence(PureState({2, 2}, {0.5, 0.5, 0.5, 0.5})).value, 0.0, 1e-15);
    EXPECT_NEAR(pair_qubit_concurrence(PureState({2, 2}, {std::sqrt(0.9), 0.0, 0.0, std::sqrt(0.1)})).value, 0.6,
                1e-12);
    try {
        pair_qubit_concurrence(PureState({2, 3}, {1.0, 0.0, 0.0, 0.0, 0.0, 0.0}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::WrongDims);
    }
}

TEST(PairQubit, BitIdenticalToGeneralRoute)
{
    Rng rng(103);
    for (int trial = 0; trial < 500; ++trial) {
        const PureState s = random_state({2, 2}, rng);
        const auto a = pair_qubit_concurrence(s);
        const auto b = bipartite_concurrence(s);
        ASSERT_EQ(a.value, b.value);
        ASSERT_EQ(a.term_sum, b.term_sum);
    }
}

TEST(Coefficients, PairCoefficient)
{
    const PureState g = oracle::ghz(3);
    const std::vector<std::size_t> zero{0, 0, 0}, one{1, 1, 1}, mixed{0, 1, 0};
    EXPECT_NEAR(pair_coefficient(g, zero, one).real(), 0.5, 1e-15);
    EXPECT_EQ(pair_coefficient(g, mixed, one), Complex(0.0));
    EXPECT_THROW(pair_coefficient(g, std::vector<std::size_t>{2, 0, 0}, one), Error);

    Rng rng(104);
    const PureState s = random_state({2, 3, 2}, rng);
    for (std::size_t fk = 0; fk < s.size(); ++fk)
        for (std::size_t fl = 0; fl < s.size(); ++fl)
            EXPECT_EQ(pair_coefficient(s, s.multi_index(fk), s.multi_index(fl)),
                      s.amplitudes()[fk] * s.amplitudes()[fl]);
}

TEST(Coefficients, SwappedWedge)
{
    Rng rng(105);
    const PureState s = random_state({2, 3, 2}, rng);
    const std::vector<std::size_t> k{1, 2, 0}, l{0, 2, 1};
    EXPECT_EQ(swapped_wedge_coefficient(s, k, l, 1), Complex(0.0));

    const std::vector<std::size_t> b0{0, 0}, b1{1, 1};
    EXPECT_NEAR(swapped_wedge_coefficient(oracle::bell(), b0, b1, 0).real(), 0.5, 1e-15);
    const std::vector<std::size_t> z{0, 0, 0}, o{1, 1, 1};
    EXPECT_NEAR(swapped_wedge_coefficient(oracle::ghz(3), z, o, 1).real(), 0.5, 1e-15);
    EXPECT_THROW(swapped_wedge_coefficient(s, k, l, 3), Error);
}

TEST(Multipartite, GoldenValues)
{
    EXPECT_NEAR(multipartite_measure(oracle::ghz(3)).value, std::sqrt(6.0), 1e-9);
    EXPECT_NEAR(multipartite_measure(oracle::w3()).value, 4.0 / std::sqrt(3.0), 1e-9);
    EXPECT_NEAR(multipartite_measure(bell_times_zero()).value, 2.0, 1e-9);
    EXPECT_LE(multipartite_measure(PureState::basis({2, 3, 2, 2}, std::vector<std::size_t>{1, 2, 0, 1})).value, 1e-15);
}

TEST(Multipartite, PurityIdentityRandom)
{
    Rng rng(106);
    for (std::size_t m = 2; m <= 4; ++m)
        for (int trial = 0; trial < 300; ++trial) {
            const PureState s = random_state(oracle::random_dims(m, rng), rng);
            const double e = multipartite_measure(s).value;
            ASSERT_NEAR(e * e, oracle::multipartite_sq_closed_form(s), 1e-9);
        }
}

TEST(Multipartite, NormConstantScales)
{
    Rng rng(107);
    const PureState s = random_state({2, 3, 2}, rng);
    MeasureConfig cfg;
    cfg.norm_constant = 5.0;
    const auto r = multipartite_measure(s, cfg);
    EXPECT_EQ(r.norm_constant, 5.0);
    EXPECT_NEAR(r.value * r.value, oracle::multipartite_sq_closed_form(s, 5.0), 1e-9);
}

TEST(Multipartite, TwiceBipartiteAtTwoParties)
{
    Rng rng(108);
    for (int trial = 0; trial < 200; ++trial) {
        const PureState s = random_state(oracle::random_dims(2, rng, 9), rng);
        EXPECT_NEAR(multipartite_measure(s).value, 2.0 * bipartite_concurrence(s).value, 1e-9);
    }
}

TEST(Multipartite, ZeroIffProduct)
{
    Rng rng(109);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t m = 2 + trial % 3;
        const Dims dims = oracle::random_dims(m, rng);
        const PureState product = random_product_state(dims, rng);
        EXPECT_LE(multipartite_measure(product).value, 1e-9);
        EXPECT_TRUE(is_product_state(product));

        const PureState entangled = random_state(dims, rng);
        EXPECT_GT(multipartite_measure(entangled).value, 1e-9);
        EXPECT_FALSE(is_product_state(entangled));
    }
}

TEST(Multipartite, Errors)
{
    auto code = [](const PureState& s) {
        try {
            multipartite_measure(s);
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::InvalidArgument;
    };
    EXPECT_EQ(code(PureState({2}, {1.0, 0.0})), ErrorCode::WrongArity);
    EXPECT_EQ(code(PureState({2, 2}, {1.0, 1.0, 0.0, 0.0})), ErrorCode::NotNormalized);
    EXPECT_EQ(code(PureState::basis({64, 65}, std::vector<std::size_t>{0, 0})), ErrorCode::TooLarge);
    EXPECT_NO_THROW(multipartite_measure(PureState::basis({64, 64}, std::vector<std::size_t>{0, 0})));
}

TEST(Tripartite, AgreesWithGeneralSum)
{
    EXPECT_LE(tripartite_measure(PureState::basis({2, 2, 2}, std::vector<std::size_t>{0, 0, 0})).value, 0.0);
    EXPECT_NEAR(tripartite_measure(oracle::ghz(3)).value, std::sqrt(6.0), 1e-9);
    EXPECT_NEAR(tripartite_measure(bell_times_zero()).value, 2.0, 1e-9);

    Rng rng(110);
    for (int trial = 0; trial < 200; ++trial) {
        const PureState s = random_state(oracle::random_dims(3, rng), rng);
        EXPECT_NEAR(tripartite_measure(s).value, multipartite_measure(s).value, 1e-12);
    }
    EXPECT_THROW(tripartite_measure(oracle::bell()), Error);
}

TEST(Result, ValueIsRootOfScaledTermSum)
{
    Rng rng(111);
    for (int trial = 0; trial < 50; ++trial) {
        const PureState s = random_state(oracle::random_dims(3, rng), rng);
        const auto r = multipartite_measure(s);
        EXPECT_NEAR(r.value, std::sqrt(r.norm_constant * r.term_sum), 1e-12);
    }
}
