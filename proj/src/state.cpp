#include "wedgent/state.hpp"

#include "wedgent/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace wedgent {

std::size_t total_dimension(std::span<const std::size_t> dims)
{
    if (dims.empty())
        throw Error(ErrorCode::DimensionMismatch, "a state needs at least one subsystem");
    if (dims.size() > kMaxSubsystems)
        throw Error(ErrorCode::TooLarge, "at most " + std::to_string(kMaxSubsystems) + " subsystems are supported");
    std::size_t total = 1;
    for (std::size_t d : dims) {
        if (d == 0)
            throw Error(ErrorCode::DimensionMismatch, "local dimensions must be positive");
        if (d > kMaxStateSize || total > kMaxStateSize / d)
            throw Error(ErrorCode::TooLarge, "state dimension exceeds 2^20");
        total *= d;
    }
    return total;
}

void validate(std::span<const std::size_t> dims, std::span<const Complex> amplitudes, double tol)
{
    const std::size_t expected = total_dimension(dims);
    if (amplitudes.size() != expected)
        throw Error(ErrorCode::LengthMismatch, "expected " + std::to_string(expected) + " amplitudes, got " +
                                                   std::to_string(amplitudes.size()));
    double sum = 0.0;
    for (const Complex& a : amplitudes)
        sum += std::norm(a);
    if (!(std::abs(sum - 1.0) <= tol))
        throw NotNormalizedError(std::sqrt(sum));
}

PureState::PureState(Dims dims, std::vector<Complex> amplitudes)
    : dims_(std::move(dims)), amplitudes_(std::move(amplitudes))
{
    const std::size_t expected = total_dimension(dims_);
    if (amplitudes_.size() != expected)
        throw Error(ErrorCode::LengthMismatch, "expected " + std::to_string(expected) + " amplitudes, got " +
                                                   std::to_string(amplitudes_.size()));
    strides_.assign(dims_.size(), 1);
    for (std::size_t j = dims_.size() - 1; j > 0; --j)
        strides_[j - 1] = strides_[j] * dims_[j];
}

PureState PureState::basis(Dims dims, std::span<const std::size_t> index)
{
    const std::size_t total = total_dimension(dims);
    PureState state(std::move(dims), std::vector<Complex>(total));
    state.amplitudes_[state.flat_index(index)] = 1.0;
    return state;
}

std::size_t PureState::flat_index(std::span<const std::size_t> index) const
{
    if (index.size() != dims_.size())
        throw Error(ErrorCode::IndexOutOfRange, "multi-index has " + std::to_string(index.size()) +
                                                    " slots, state has " + std::to_string(dims_.size()));
    std::size_t flat = 0;
    for (std::size_t j = 0; j < dims_.size(); ++j) {
        if (index[j] >= dims_[j])
            throw Error(ErrorCode::IndexOutOfRange, "index " + std::to_string(index[j]) + " out of range for subsystem " +
                                                        std::to_string(j + 1));
        flat += index[j] * strides_[j];
    }
    return flat;
}

MultiIndex PureState::multi_index(std::size_t flat) const
{
    if (flat >= amplitudes_.size())
        throw Error(ErrorCode::IndexOutOfRange, "flat index " + std::to_string(flat) + " out of range");
    MultiIndex index(dims_.size());
    for (std::size_t j = 0; j < dims_.size(); ++j) {
        index[j] = flat / strides_[j];
        flat %= strides_[j];
    }
    return index;
}

double PureState::norm_sq() const noexcept
{
    double sum = 0.0;
    for (const Complex& a : amplitudes_)
        sum += std::norm(a);
    return sum;
}

void validate(const PureState& state, double tol)
{
    validate(state.dims(), state.amplitudes(), tol);
}

PureState normalize(const PureState& state)
{
    const double n2 = state.norm_sq();
    if (n2 == 0.0)
        throw Error(ErrorCode::ZeroState, "cannot normalize the zero vector");
    const double scale = 1.0 / std::sqrt(n2);
    std::vector<Complex> amps(state.amplitudes().begin(), state.amplitudes().end());
    for (Complex& a : amps)
        a *= scale;
    return PureState(state.dims(), std::move(amps));
}

PureState tensor(const PureState& a, const PureState& b)
{
    Dims dims = a.dims();
    dims.insert(dims.end(), b.dims().begin(), b.dims().end());
    total_dimension(dims);
    std::vector<Complex> amps;
    amps.reserve(a.size() * b.size());
    for (const Complex& x : a.amplitudes())
        for (const Complex& y : b.amplitudes())
            amps.push_back(x * y);
    return PureState(std::move(dims), std::move(amps));
}

// ---------------------------------------------------------------------------

Bipartition::Bipartition(std::vector<std::size_t> left, std::size_t arity)
    : left_(std::move(left)), arity_(arity)
{
    std::sort(left_.begin(), left_.end());
    if (left_.empty() || left_.size() >= arity_)
        throw Error(ErrorCode::InvalidPartition, "a bipartition side must be a nonempty proper subset");
    if (std::adjacent_find(left_.begin(), left_.end()) != left_.end())
        throw Error(ErrorCode::InvalidPartition, "duplicate subsystem in bipartition");
    if (left_.back() >= arity_)
        throw Error(ErrorCode::InvalidPartition,
                    "subsystem " + std::to_string(left_.back() + 1) + " out of range for " + std::to_string(arity_) +
                        " subsystems");
}

bool Bipartition::contains(std::size_t subsystem) const
{
    return std::binary_search(left_.begin(), left_.end(), subsystem);
}

std::vector<std::size_t> Bipartition::right() const
{
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < arity_; ++j)
        if (!contains(j))
            out.push_back(j);
    return out;
}

Bipartition Bipartition::complement() const
{
    return Bipartition(right(), arity_);
}

bool Bipartition::is_canonical() const
{
    const std::size_t other = arity_ - left_.size();
    if (left_.size() != other)
        return left_.size() < other;
    return contains(0);
}

Bipartition Bipartition::canonical() const
{
    return is_canonical() ? *this : complement();
}

std::string Bipartition::to_string() const
{
    std::string s = "{";
    for (std::size_t i = 0; i < left_.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(left_[i] + 1);
    }
    return s + "}";
}

std::vector<Bipartition> enumerate_bipartitions(std::size_t m)
{
    if (m < 2)
        throw Error(ErrorCode::WrongArity, "bipartitions need at least two subsystems");
    std::vector<Bipartition> out;
    for (std::size_t k = 1; 2 * k <= m; ++k) {
        // Lexicographic k-combinations of {0..m-1}.
        std::vector<std::size_t> combo(k);
        std::iota(combo.begin(), combo.end(), 0);
        while (true) {
            Bipartition part(combo, m);
            if (part.is_canonical())
                out.push_back(std::move(part));
            std::size_t i = k;
            while (i > 0 && combo[i - 1] == m - k + i - 1)
                --i;
            if (i == 0)
                break;
            ++combo[i - 1];
            for (std::size_t r = i; r < k; ++r)
                combo[r] = combo[r - 1] + 1;
        }
    }
    return out;
}

Eigen::MatrixXcd matricize(const PureState& state, const Bipartition& part)
{
    if (part.arity() != state.arity())
        throw Error(ErrorCode::InvalidPartition, "bipartition arity " + std::to_string(part.arity()) +
                                                     " does not match state arity " + std::to_string(state.arity()));
    const auto& dims = state.dims();
    const auto& left = part.left();
    const auto right = part.right();

    // Row-major weights of each subsystem within its side.
    std::vector<std::size_t> row_weight(dims.size(), 0), col_weight(dims.size(), 0);
    std::size_t rows = 1, cols = 1;
    for (auto it = left.rbegin(); it != left.rend(); ++it) {
        row_weight[*it] = rows;
        rows *= dims[*it];
    }
    for (auto it = right.rbegin(); it != right.rend(); ++it) {
        col_weight[*it] = cols;
        cols *= dims[*it];
    }

    Eigen::MatrixXcd m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    const auto amps = state.amplitudes();
    const auto& strides = state.strides();
    for (std::size_t flat = 0; flat < amps.size(); ++flat) {
        std::size_t r = 0, c = 0, rest = flat;
        for (std::size_t j = 0; j < dims.size(); ++j) {
            const std::size_t digit = rest / strides[j];
            rest %= strides[j];
            r += digit * row_weight[j];
            c += digit * col_weight[j];
        }
        m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = amps[flat];
    }
    return m;
}

// ---------------------------------------------------------------------------

DensityMatrix::DensityMatrix(Eigen::MatrixXcd entries) : entries_(std::move(entries))
{
    if (entries_.rows() != entries_.cols() || entries_.rows() == 0)
        throw Error(ErrorCode::DimensionMismatch, "density matrix must be square and nonempty");
    const Eigen::Index n = entries_.rows();
    for (Eigen::Index a = 0; a < n; ++a)
        for (Eigen::Index b = a; b < n; ++b)
            if (std::abs(entries_(a, b) - std::conj(entries_(b, a))) > 1e-12)
                throw Error(ErrorCode::InvalidArgument, "density matrix is not Hermitian");
    const double tr = entries_.trace().real();
    if (!(std::abs(tr - 1.0) <= 1e-9))
        throw NotNormalizedError(std::sqrt(std::max(tr, 0.0)));
}

namespace {

// Gram matrix M M^dagger, filled from the upper triangle so it is exactly Hermitian.
Eigen::MatrixXcd gram(const Eigen::MatrixXcd& m)
{
    const Eigen::Index n = m.rows();
    Eigen::MatrixXcd g(n, n);
    for (Eigen::Index a = 0; a < n; ++a) {
        for (Eigen::Index b = a; b < n; ++b) {
            Complex s = 0.0;
            for (Eigen::Index k = 0; k < m.cols(); ++k)
                s += m(a, k) * std::conj(m(b, k));
            g(a, b) = s;
            g(b, a) = std::conj(s);
        }
        g(a, a) = g(a, a).real();
    }
    return g;
}

} // namespace

DensityMatrix partial_trace(const PureState& state, std::size_t keep)
{
    if (keep >= state.arity())
        throw Error(ErrorCode::IndexOutOfRange, "subsystem " + std::to_string(keep + 1) + " out of range");
    if (state.arity() == 1)
        return DensityMatrix(gram(Eigen::Map<const Eigen::VectorXcd>(state.amplitudes().data(),
                                                                     static_cast<Eigen::Index>(state.size()))));
    return DensityMatrix(gram(matricize(state, Bipartition({keep}, state.arity()))));
}

DensityMatrix reduced_density(const PureState& state, const Bipartition& part)
{
    return DensityMatrix(gram(matricize(state, part)));
}

double purity(const DensityMatrix& rho)
{
    double sum = 0.0;
    const auto& e = rho.entries();
    for (Eigen::Index a = 0; a < e.rows(); ++a)
        for (Eigen::Index b = 0; b < e.cols(); ++b)
            sum += std::norm(e(a, b));
    return sum;
}

} // namespace wedgent
