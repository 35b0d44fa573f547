#include "wedgent/lu_harness.hpp"

#include "wedgent/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace wedgent {

std::uint64_t mix64(std::uint64_t x) noexcept
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed) : engine_(seed) {}

Rng Rng::substream(std::uint64_t seed, std::uint64_t stream)
{
    return Rng(mix64(seed ^ mix64(stream + 1)));
}

double Rng::uniform()
{
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal()
{
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = 1.0 - uniform(); // (0, 1]
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

Complex Rng::complex_normal()
{
    const double re = normal();
    const double im = normal();
    return Complex(re, im) * std::numbers::sqrt2 * 0.5;
}

// ---------------------------------------------------------------------------

UnitaryGate::UnitaryGate(Eigen::MatrixXcd entries) : entries_(std::move(entries))
{
    if (entries_.rows() != entries_.cols() || entries_.rows() == 0)
        throw Error(ErrorCode::DimensionMismatch, "unitary must be square and nonempty");
    const Eigen::MatrixXcd defect =
        entries_.adjoint() * entries_ - Eigen::MatrixXcd::Identity(entries_.rows(), entries_.cols());
    if (defect.cwiseAbs().maxCoeff() > 1e-10)
        throw Error(ErrorCode::NotUnitary, "U^dagger U deviates from the identity");
}

UnitaryGate UnitaryGate::identity(std::size_t dim)
{
    const auto n = static_cast<Eigen::Index>(dim);
    return UnitaryGate(Eigen::MatrixXcd::Identity(n, n));
}

UnitaryGate haar_unitary(std::size_t dim, Rng& rng)
{
    if (dim == 0)
        throw Error(ErrorCode::DimensionMismatch, "unitary dimension must be positive");
    const auto n = static_cast<Eigen::Index>(dim);
    Eigen::MatrixXcd q(n, n);
    for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index c = 0; c < n; ++c)
            q(r, c) = rng.complex_normal();

    for (Eigen::Index k = 0; k < n; ++k) {
        for (int pass = 0; pass < 2; ++pass) {
            for (Eigen::Index i = 0; i < k; ++i) {
                const Complex proj = q.col(i).dot(q.col(k));
                q.col(k) -= proj * q.col(i);
            }
        }
        // Gram-Schmidt leaves r_kk = |q_k| real and positive, so the phase
        // factor conj(r_kk)/|r_kk| is 1 up to rounding; kept for the
        // general QR convention.
        const Complex r_kk = q.col(k).norm();
        q.col(k) /= r_kk;
        q.col(k) *= std::conj(r_kk) / std::abs(r_kk);
    }
    return UnitaryGate(std::move(q));
}

PureState apply_local(const PureState& state, std::span<const UnitaryGate> gates)
{
    const auto& dims = state.dims();
    if (gates.size() != dims.size())
        throw Error(ErrorCode::DimensionMismatch, "expected one gate per subsystem (" + std::to_string(dims.size()) +
                                                      "), got " + std::to_string(gates.size()));
    for (std::size_t j = 0; j < dims.size(); ++j)
        if (gates[j].dim() != dims[j])
            throw Error(ErrorCode::DimensionMismatch, "gate " + std::to_string(j + 1) + " has dimension " +
                                                          std::to_string(gates[j].dim()) + ", subsystem has " +
                                                          std::to_string(dims[j]));

    std::vector<Complex> cur(state.amplitudes().begin(), state.amplitudes().end());
    std::vector<Complex> next(cur.size());
    for (std::size_t j = 0; j < dims.size(); ++j) {
        const std::size_t stride = state.strides()[j];
        const std::size_t n = dims[j];
        const Eigen::MatrixXcd& u = gates[j].entries();
        for (std::size_t f = 0; f < cur.size(); ++f) {
            const std::size_t digit = (f / stride) % n;
            const std::size_t base = f - digit * stride;
            Complex s = 0.0;
            for (std::size_t e = 0; e < n; ++e)
                s += u(static_cast<Eigen::Index>(digit), static_cast<Eigen::Index>(e)) * cur[base + e * stride];
            next[f] = s;
        }
        std::swap(cur, next);
    }
    return PureState(dims, std::move(cur));
}

PureState random_state(const Dims& dims, Rng& rng)
{
    std::vector<Complex> amps(total_dimension(dims));
    for (Complex& a : amps)
        a = rng.complex_normal();
    return normalize(PureState(dims, std::move(amps)));
}

PureState random_product_state(const Dims& dims, Rng& rng)
{
    PureState out = random_state(Dims{dims.front()}, rng);
    for (std::size_t j = 1; j < dims.size(); ++j)
        out = tensor(out, random_state(Dims{dims[j]}, rng));
    return out;
}

InvarianceRun invariance_experiment(const PureState& state, std::size_t trials, std::uint64_t seed,
                                    MeasureKind kind, const MeasureConfig& cfg, std::size_t retain)
{
    if (trials == 0)
        throw Error(ErrorCode::InvalidArgument, "at least one trial is required");
    const double baseline = evaluate_measure(state, kind, cfg).value;

    InvarianceRun run{seed, trials, kind, baseline, 0.0, {}};
    run.per_trial_deviations.reserve(std::min(trials, retain));
    std::vector<UnitaryGate> gates;
    for (std::size_t k = 0; k < trials; ++k) {
        Rng rng = Rng::substream(seed, k);
        gates.clear();
        for (std::size_t d : state.dims())
            gates.push_back(haar_unitary(d, rng));
        const PureState rotated = apply_local(state, gates);
        const double deviation = std::abs(evaluate_measure(rotated, kind, cfg).value - baseline);
        run.max_abs_deviation = std::max(run.max_abs_deviation, deviation);
        if (run.per_trial_deviations.size() < retain)
            run.per_trial_deviations.push_back(deviation);
    }
    return run;
}

} // namespace wedgent
