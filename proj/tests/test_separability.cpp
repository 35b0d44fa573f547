#include "wedgent/errors.hpp"
#include "wedgent/lu_harness.hpp"
#include "wedgent/measures.hpp"
#include "wedgent/separability.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <Eigen/SVD>

using namespace wedgent;

namespace {

const PartitionVerdict& verdict(const SeparabilityReport& r, const std::string& name)
{
    for (const auto& v : r.per_partition)
        if (v.partition.to_string() == name)
            return v;
    throw std::runtime_error("partition not in report: " + name);
}

double reconstruction_distance(const PureState& s, const ProductCertificate& cert)
{
    Eigen::VectorXcd product = Eigen::VectorXcd::Ones(1);
    for (const auto& f : cert.factors) {
        Eigen::VectorXcd next(product.size() * f.size());
        for (Eigen::Index a = 0; a < product.size(); ++a)
            next.segment(a * f.size(), f.size()) = product(a) * f;
        product = next;
    }
    const Eigen::Map<const Eigen::VectorXcd> psi(s.amplitudes().data(), static_cast<Eigen::Index>(s.size()));
    const Complex overlap = product.dot(psi);
    const Complex phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : Complex(1.0);
    return (phase * product - psi).norm();
}

PureState bell_bell()
{
    return tensor(oracle::bell(), oracle::bell());
}

PureState bell_zero()
{
    return tensor(oracle::bell(), PureState::basis({2}, std::vector<std::size_t>{0}));
}

} // namespace

TEST(Residual, BellTimesZero)
{
    const PureState s = bell_zero();
    EXPECT_LE(partition_residual(s, Bipartition({2}, 3)), 1e-15);
    EXPECT_NEAR(partition_residual(s, Bipartition({0}, 3)), 1.0 - oracle::marginal_purity(s, 0), 1e-12);
    EXPECT_NEAR(partition_residual(s, Bipartition({0}, 3)), 0.5, 1e-12);
}

TEST(Residual, Ghz4PairSplitFromSingularValues)
{
    const PureState g = oracle::ghz(4);
    Eigen::MatrixXcd m(4, 4);
    for (std::size_t f = 0; f < 16; ++f)
        m(static_cast<Eigen::Index>(f / 4), static_cast<Eigen::Index>(f % 4)) = g.amplitudes()[f];
    const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXcd>(m).singularValues();
    double p4 = 0.0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        p4 += std::pow(sv(i), 4);
    EXPECT_NEAR(1.0 - p4, 0.5, 1e-14);
    EXPECT_NEAR(partition_residual(g, Bipartition({0, 1}, 4)), 1.0 - p4, 1e-12);
}

TEST(Residual, ComplementAndPurityRoutesAgree)
{
    Rng rng(200);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t m = 2 + trial % 3;
        const PureState s = random_state(oracle::random_dims(m, rng, 81), rng);
        for (const auto& part : enumerate_bipartitions(m)) {
            const double r = partition_residual(s, part);
            EXPECT_NEAR(r, partition_residual(s, part.complement()), 1e-9);
            EXPECT_NEAR(r, 1.0 - purity(reduced_density(s, part)), 1e-9);
        }
    }
}

TEST(Residual, ProductAcrossChosenSplit)
{
    Rng rng(201);
    for (int trial = 0; trial < 50; ++trial) {
        // A on subsystems {1,3}, B on {2,4}: build A (x) B then permute into place.
        const PureState a = random_state({2, 3}, rng);
        const PureState b = random_state({3, 2}, rng);
        const Dims dims{2, 3, 3, 2};
        std::vector<Complex> amps(36);
        for (std::size_t i1 = 0; i1 < 2; ++i1)
            for (std::size_t i2 = 0; i2 < 3; ++i2)
                for (std::size_t i3 = 0; i3 < 3; ++i3)
                    for (std::size_t i4 = 0; i4 < 2; ++i4)
                        amps[((i1 * 3 + i2) * 3 + i3) * 2 + i4] = a.at(i1 * 3 + i3) * b.at(i2 * 2 + i4);
        const PureState s(dims, amps);
        EXPECT_LE(partition_residual(s, Bipartition({0, 2}, 4)), 1e-12);
        EXPECT_GT(partition_residual(s, Bipartition({0, 1}, 4)), 1e-6);
    }
}

TEST(Residual, InvalidPartition)
{
    EXPECT_THROW(partition_residual(oracle::ghz(3), Bipartition({0}, 4)), Error);
}

TEST(Report, ProductBasisState)
{
    const PureState s = PureState::basis({2, 2, 2, 2}, std::vector<std::size_t>{0, 1, 0, 1});
    const auto r = separability_report(s);
    EXPECT_EQ(r.per_partition.size(), 7u);
    EXPECT_TRUE(r.fully_separable);
    ASSERT_TRUE(r.certificate.has_value());
    const std::vector<std::size_t> expected{0, 1, 0, 1};
    for (std::size_t j = 0; j < 4; ++j) {
        const auto& f = r.certificate->factors[j];
        ASSERT_EQ(f.size(), 2);
        EXPECT_NEAR(std::abs(f(static_cast<Eigen::Index>(expected[j]))), 1.0, 1e-15);
        EXPECT_EQ(f(static_cast<Eigen::Index>(1 - expected[j])), Complex(0.0));
    }
    EXPECT_LE(r.certificate->reconstruction_error, 1e-15);
}

TEST(Report, BellPairs)
{
    const auto r = separability_report(bell_bell());
    ASSERT_EQ(r.per_partition.size(), 7u);
    EXPECT_FALSE(r.fully_separable);
    EXPECT_FALSE(r.certificate.has_value());
    EXPECT_TRUE(verdict(r, "{1,2}").separable);
    EXPECT_LE(verdict(r, "{1,2}").residual, 1e-12);
    for (const char* name : {"{1}", "{2}", "{3}", "{4}"}) {
        EXPECT_FALSE(verdict(r, name).separable) << name;
        EXPECT_NEAR(verdict(r, name).residual, 0.5, 1e-12) << name;
    }
    // rho_{13} = I/4
    for (const char* name : {"{1,3}", "{1,4}"}) {
        EXPECT_FALSE(verdict(r, name).separable) << name;
        EXPECT_NEAR(verdict(r, name).residual, 0.75, 1e-12) << name;
    }
}

TEST(Report, Ghz4EntangledEverywhere)
{
    const auto r = separability_report(oracle::ghz(4));
    ASSERT_EQ(r.per_partition.size(), 7u);
    for (const auto& v : r.per_partition) {
        EXPECT_FALSE(v.separable) << v.partition.to_string();
        EXPECT_NEAR(v.residual, 0.5, 1e-12);
    }
    EXPECT_FALSE(r.fully_separable);
}

TEST(Report, RejectsUnnormalized)
{
    EXPECT_THROW(separability_report(PureState({2, 2}, {1.0, 0.0, 0.0, 1.0})), NotNormalizedError);
}

TEST(Report, CertificateSoundness)
{
    Rng rng(202);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t m = 1 + trial % 4;
        const PureState s = random_product_state(oracle::random_dims(m, rng, 81), rng);
        const auto r = separability_report(s);
        ASSERT_TRUE(r.fully_separable);
        ASSERT_TRUE(r.certificate.has_value());
        ASSERT_EQ(r.certificate->factors.size(), m);
        EXPECT_LE(reconstruction_distance(s, *r.certificate), 1e-8);
        EXPECT_LE(r.certificate->reconstruction_error, 1e-8);
        for (const auto& v : r.per_partition)
            EXPECT_TRUE(v.separable);
    }
}

TEST(ProductState, Cases)
{
    Rng rng(203);
    EXPECT_TRUE(is_product_state(random_product_state({3, 2, 4}, rng)));
    EXPECT_FALSE(is_product_state(oracle::w3()));
    EXPECT_FALSE(is_product_state(bell_zero()));
    const auto r = separability_report(bell_zero());
    EXPECT_FALSE(r.fully_separable);
    EXPECT_TRUE(verdict(r, "{3}").separable);
}

TEST(ProductState, AgreesWithMeasure)
{
    Rng rng(204);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t m = 2 + trial % 3;
        const Dims dims = oracle::random_dims(m, rng);
        const PureState s = trial % 2 ? random_product_state(dims, rng) : random_state(dims, rng);
        EXPECT_EQ(is_product_state(s), multipartite_measure(s).value <= 1e-9);
    }
}

TEST(PowerIteration, DominantEigenvector)
{
    Eigen::MatrixXcd g(3, 3);
    g << 0.2, 0.0, 0.0, 0.0, 0.7, 0.0, 0.0, 0.0, 0.1;
    const Eigen::VectorXcd v = dominant_eigenvector(g);
    EXPECT_NEAR(std::abs(v(1)), 1.0, 1e-12);
    EXPECT_THROW(dominant_eigenvector(Eigen::MatrixXcd::Zero(2, 2)), Error);
}
