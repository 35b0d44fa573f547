#include "wedgent/measures.hpp"

#include "wedgent/errors.hpp"
#include "wedgent/multilinear.hpp"

#include <cmath>
#include <vector>

namespace wedgent {

std::string_view to_string(MeasureKind kind)
{
    switch (kind) {
    case MeasureKind::BipartiteConcurrence: return "bipartite_concurrence";
    case MeasureKind::MultipartiteE: return "multipartite_measure";
    }
    return "unknown";
}

namespace {

void check_config(const MeasureConfig& cfg)
{
    if (!(cfg.norm_constant > 0.0) || !std::isfinite(cfg.norm_constant))
        throw Error(ErrorCode::InvalidArgument, "normalization constant must be positive");
}

void check_size(const PureState& state)
{
    if (state.size() > kMaxMeasureSize)
        throw Error(ErrorCode::TooLarge,
                    "total dimension " + std::to_string(state.size()) + " exceeds " + std::to_string(kMaxMeasureSize) +
                        "; use the purity form N * sum_j (2 - 2 tr rho_j^2) for larger states");
}

MeasureResult make_result(MeasureKind kind, const MeasureConfig& cfg, double term_sum)
{
    return {kind, std::sqrt(cfg.norm_constant * term_sum), cfg.norm_constant, term_sum};
}

// Partial sums are reduced pairwise so the total does not depend on how the
// outer index range is chunked.
double pairwise_sum(std::span<const double> xs)
{
    if (xs.size() <= 8) {
        double s = 0.0;
        for (double x : xs)
            s += x;
        return s;
    }
    const std::size_t half = xs.size() / 2;
    return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

} // namespace

MeasureResult bipartite_concurrence(const PureState& state, const MeasureConfig& cfg)
{
    check_config(cfg);
    if (state.arity() != 2)
        throw Error(ErrorCode::WrongArity, "bipartite concurrence needs exactly 2 subsystems, got " +
                                               std::to_string(state.arity()));
    validate(state, cfg.tol);
    check_size(state);

    const std::size_t rows = state.dims()[0], cols = state.dims()[1];
    const auto amps = state.amplitudes();
    double sum = 0.0;
    for (std::size_t mu = 0; mu < rows; ++mu)
        for (std::size_t nu = mu + 1; nu < rows; ++nu)
            sum += wedge_pair_norm_sq(amps.subspan(mu * cols, cols), amps.subspan(nu * cols, cols));
    return make_result(MeasureKind::BipartiteConcurrence, cfg, sum);
}

MeasureResult pair_qubit_concurrence(const PureState& state, const MeasureConfig& cfg)
{
    check_config(cfg);
    if (state.dims() != Dims{2, 2})
        throw Error(ErrorCode::WrongDims, "pair-of-qubits concurrence needs dims [2,2]");
    validate(state, cfg.tol);

    const auto a = state.amplitudes();
    // Coefficient matrix rows (a00, a01) and (a10, a11); the wedge has the two
    // nonzero entries +d and -d.
    const Complex d = a[0] * a[3] - a[2] * a[1];
    const Complex minus_d = a[1] * a[2] - a[3] * a[0];
    double sum = 0.0;
    sum += std::norm(Complex(0.0));
    sum += std::norm(d);
    sum += std::norm(minus_d);
    sum += std::norm(Complex(0.0));
    return make_result(MeasureKind::BipartiteConcurrence, cfg, sum);
}

Complex pair_coefficient(const PureState& state, std::span<const std::size_t> k, std::span<const std::size_t> l)
{
    return state.at(k) * state.at(l);
}

Complex swapped_wedge_coefficient(const PureState& state, std::span<const std::size_t> k,
                                  std::span<const std::size_t> l, std::size_t j)
{
    if (j >= state.arity())
        throw Error(ErrorCode::IndexOutOfRange, "subsystem " + std::to_string(j + 1) + " out of range");
    const std::size_t fk = state.flat_index(k);
    const std::size_t fl = state.flat_index(l);
    const std::size_t stride = state.strides()[j];
    const std::size_t fk_swapped = fk - k[j] * stride + l[j] * stride;
    const std::size_t fl_swapped = fl - l[j] * stride + k[j] * stride;
    return state.at(fk) * state.at(fl) - state.at(fk_swapped) * state.at(fl_swapped);
}

MeasureResult multipartite_measure(const PureState& state, const MeasureConfig& cfg)
{
    check_config(cfg);
    if (state.arity() < 2)
        throw Error(ErrorCode::WrongArity, "multipartite measure needs at least 2 subsystems");
    validate(state, cfg.tol);
    check_size(state);

    const std::size_t m = state.arity();
    const std::size_t total = state.size();
    const auto amps = state.amplitudes();
    const auto& strides = state.strides();

    // digits[f * m + j] = j-th index of flat position f
    std::vector<std::size_t> digits(total * m);
    for (std::size_t f = 0; f < total; ++f) {
        std::size_t rest = f;
        for (std::size_t j = 0; j < m; ++j) {
            digits[f * m + j] = rest / strides[j];
            rest %= strides[j];
        }
    }

    std::vector<double> row_sums(total, 0.0);
    for (std::size_t fk = 0; fk < total; ++fk) {
        const Complex ak = amps[fk];
        double row = 0.0;
        for (std::size_t fl = 0; fl < total; ++fl) {
            const Complex direct = ak * amps[fl];
            for (std::size_t j = 0; j < m; ++j) {
                const std::size_t kj = digits[fk * m + j];
                const std::size_t lj = digits[fl * m + j];
                if (kj == lj)
                    continue;
                const std::size_t shift_k = fk - kj * strides[j] + lj * strides[j];
                const std::size_t shift_l = fl - lj * strides[j] + kj * strides[j];
                row += std::norm(direct - amps[shift_k] * amps[shift_l]);
            }
        }
        row_sums[fk] = row;
    }
    return make_result(MeasureKind::MultipartiteE, cfg, pairwise_sum(row_sums));
}

MeasureResult tripartite_measure(const PureState& state, const MeasureConfig& cfg)
{
    check_config(cfg);
    if (state.arity() != 3)
        throw Error(ErrorCode::WrongArity, "tripartite measure needs exactly 3 subsystems, got " +
                                               std::to_string(state.arity()));
    validate(state, cfg.tol);
    check_size(state);

    const std::size_t n1 = state.dims()[0], n2 = state.dims()[1], n3 = state.dims()[2];
    const auto a = [&](std::size_t i1, std::size_t i2, std::size_t i3) {
        return state.amplitudes()[(i1 * n2 + i2) * n3 + i3];
    };

    double sum = 0.0;
    for (std::size_t k1 = 0; k1 < n1; ++k1)
        for (std::size_t l1 = 0; l1 < n1; ++l1)
            for (std::size_t k2 = 0; k2 < n2; ++k2)
                for (std::size_t l2 = 0; l2 < n2; ++l2)
                    for (std::size_t k3 = 0; k3 < n3; ++k3)
                        for (std::size_t l3 = 0; l3 < n3; ++l3) {
                            const Complex direct = a(k1, k2, k3) * a(l1, l2, l3);
                            sum += std::norm(direct - a(k1, k2, l3) * a(l1, l2, k3));
                            sum += std::norm(direct - a(k1, l2, k3) * a(l1, k2, l3));
                            sum += std::norm(direct - a(l1, k2, k3) * a(k1, l2, l3));
                        }
    return make_result(MeasureKind::MultipartiteE, cfg, sum);
}

MeasureResult evaluate_measure(const PureState& state, MeasureKind kind, const MeasureConfig& cfg)
{
    switch (kind) {
    case MeasureKind::BipartiteConcurrence: return bipartite_concurrence(state, cfg);
    case MeasureKind::MultipartiteE: return multipartite_measure(state, cfg);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown measure kind");
}

} // namespace wedgent
