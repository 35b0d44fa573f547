#pragma once

#include "wedgent/measures.hpp"
#include "wedgent/state.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace wedgent {

// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

// Seeded Gaussian source over std::mt19937_64.
//
// Substream k of seed s seeds the engine with mix64(s ^ mix64(k + 1)), so any
// trial can be replayed on its own. Uniforms take the top 53 bits of an engine
// draw; normals come from the Box-Muller transform, using both outputs.
class Rng {
public:
    explicit Rng(std::uint64_t seed);
    static Rng substream(std::uint64_t seed, std::uint64_t stream);

    // Uniform on [0, 1).
    double uniform();
    double normal();
    // Real and imaginary parts independent N(0, 1/2), so E|z|^2 = 1.
    Complex complex_normal();

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

class UnitaryGate {
public:
    // Throws NotUnitary unless U^dagger U = I within 1e-10 componentwise.
    explicit UnitaryGate(Eigen::MatrixXcd entries);
    static UnitaryGate identity(std::size_t dim);

    std::size_t dim() const noexcept { return static_cast<std::size_t>(entries_.rows()); }
    const Eigen::MatrixXcd& entries() const noexcept { return entries_; }

private:
    Eigen::MatrixXcd entries_;
};

// Haar sample: complex Gaussian matrix, columns orthonormalized by modified
// Gram-Schmidt (with one reorthogonalization pass), column k rescaled by
// conj(r_kk)/|r_kk|.
UnitaryGate haar_unitary(std::size_t dim, Rng& rng);

// (U_1 (x) ... (x) U_m) |psi>
PureState apply_local(const PureState& state, std::span<const UnitaryGate> gates);

// Unitarily invariant random unit vector on the given dims.
PureState random_state(const Dims& dims, Rng& rng);
// Tensor product of independent random unit vectors, one per subsystem.
PureState random_product_state(const Dims& dims, Rng& rng);

inline constexpr std::size_t kDefaultRetainedDeviations = 100000;

struct InvarianceRun {
    std::uint64_t seed;
    std::size_t trials;
    MeasureKind kind;
    double baseline;            // measure of the untransformed state
    double max_abs_deviation;
    std::vector<double> per_trial_deviations; // first `retain` trials, in trial order
};

// Trial k draws m gates from Rng::substream(seed, k) and records
// |measure(U psi) - measure(psi)|.
InvarianceRun invariance_experiment(const PureState& state, std::size_t trials, std::uint64_t seed,
                                    MeasureKind kind, const MeasureConfig& cfg = {},
                                    std::size_t retain = kDefaultRetainedDeviations);

} // namespace wedgent
