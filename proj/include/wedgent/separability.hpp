#pragma once

#include "wedgent/state.hpp"

#include <Eigen/Dense>

#include <optional>
#include <vector>

namespace wedgent {

inline constexpr double kDefaultSeparabilityThreshold = 1e-10;

// Sum over row pairs of |row_mu ^ row_nu|^2 for the matricization across
// `part`. Vanishes iff the state factors across the split, and equals
// 1 - tr(rho_left^2) for normalized input.
double partition_residual(const PureState& state, const Bipartition& part);

struct PartitionVerdict {
    Bipartition partition;
    double residual;
    bool separable;
};

struct ProductCertificate {
    // One unit vector per subsystem; the global phase is absorbed into the
    // first factor so that their tensor product approximates the state itself.
    std::vector<Eigen::VectorXcd> factors;
    // || (x) factors - state ||
    double reconstruction_error;
};

struct SeparabilityReport {
    std::vector<PartitionVerdict> per_partition; // enumerate_bipartitions order
    bool fully_separable;
    std::optional<ProductCertificate> certificate; // present iff fully_separable
};

// Leading eigenvector of a Hermitian PSD matrix by power iteration, started
// from its largest column (first on ties).
Eigen::VectorXcd dominant_eigenvector(const Eigen::MatrixXcd& gram, double tol = 1e-12,
                                      int max_iterations = 10000);

SeparabilityReport separability_report(const PureState& state, double threshold = kDefaultSeparabilityThreshold,
                                       double tol = kDefaultNormTol);

bool is_product_state(const PureState& state, double threshold = kDefaultSeparabilityThreshold,
                      double tol = kDefaultNormTol);

} // namespace wedgent
