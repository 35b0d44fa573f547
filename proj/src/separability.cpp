#include "wedgent/separability.hpp"

#include "wedgent/errors.hpp"
#include "wedgent/measures.hpp"
#include "wedgent/multilinear.hpp"

#include <cmath>

namespace wedgent {

double partition_residual(const PureState& state, const Bipartition& part)
{
    if (state.size() > kMaxMeasureSize)
        throw Error(ErrorCode::TooLarge, "total dimension " + std::to_string(state.size()) + " exceeds " +
                                             std::to_string(kMaxMeasureSize) + " for the minor sum");
    // Row-major copy so each row is a contiguous span.
    const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> m = matricize(state, part);
    const auto cols = static_cast<std::size_t>(m.cols());
    double sum = 0.0;
    for (Eigen::Index mu = 0; mu < m.rows(); ++mu) {
        const std::span<const Complex> v(m.row(mu).data(), cols);
        for (Eigen::Index nu = mu + 1; nu < m.rows(); ++nu)
            sum += wedge_pair_norm_sq(v, std::span<const Complex>(m.row(nu).data(), cols));
    }
    return sum;
}

Eigen::VectorXcd dominant_eigenvector(const Eigen::MatrixXcd& gram, double tol, int max_iterations)
{
    Eigen::Index start = 0;
    double best = -1.0;
    for (Eigen::Index c = 0; c < gram.cols(); ++c) {
        const double n = gram.col(c).squaredNorm();
        if (n > best) {
            best = n;
            start = c;
        }
    }
    if (!(best > 0.0))
        throw Error(ErrorCode::ZeroState, "power iteration on a zero matrix");

    Eigen::VectorXcd x = gram.col(start).normalized();
    for (int it = 0; it < max_iterations; ++it) {
        Eigen::VectorXcd y = gram * x;
        const double n = y.norm();
        if (n == 0.0)
            break;
        y /= n;
        const double change = (y - x).norm();
        x = std::move(y);
        if (change < tol)
            break;
    }
    return x;
}

namespace {

ProductCertificate extract_certificate(const PureState& state)
{
    ProductCertificate cert;
    Eigen::VectorXcd product = Eigen::VectorXcd::Ones(1);
    for (std::size_t j = 0; j < state.arity(); ++j) {
        const DensityMatrix rho = partial_trace(state, j);
        Eigen::VectorXcd factor = dominant_eigenvector(rho.entries());
        Eigen::VectorXcd next(product.size() * factor.size());
        for (Eigen::Index a = 0; a < product.size(); ++a)
            next.segment(a * factor.size(), factor.size()) = product(a) * factor;
        product = std::move(next);
        cert.factors.push_back(std::move(factor));
    }

    const Eigen::Map<const Eigen::VectorXcd> psi(state.amplitudes().data(), static_cast<Eigen::Index>(state.size()));
    // <product|psi>; rotating the product by its phase is the optimal alignment.
    const Complex overlap = product.dot(psi);
    if (std::abs(overlap) > 0.0) {
        const Complex phase = overlap / std::abs(overlap);
        cert.factors.front() *= phase;
        product *= phase;
    }
    cert.reconstruction_error = (product - psi).norm();
    return cert;
}

} // namespace

SeparabilityReport separability_report(const PureState& state, double threshold, double tol)
{
    validate(state, tol);
    SeparabilityReport report{{}, true, std::nullopt};
    if (state.arity() >= 2) {
        for (auto& part : enumerate_bipartitions(state.arity())) {
            const double residual = partition_residual(state, part);
            const bool separable = residual <= threshold;
            if (!separable && part.left().size() == 1)
                report.fully_separable = false;
            report.per_partition.push_back({std::move(part), residual, separable});
        }
    }
    if (report.fully_separable)
        report.certificate = extract_certificate(state);
    return report;
}

bool is_product_state(const PureState& state, double threshold, double tol)
{
    validate(state, tol);
    if (state.arity() < 2)
        return true;
    for (std::size_t j = 0; j < state.arity(); ++j)
        if (partition_residual(state, Bipartition({j}, state.arity())) > threshold)
            return false;
    return true;
}

} // namespace wedgent
