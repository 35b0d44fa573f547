#pragma once

#include <Eigen/Dense>

#include <complex>
#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace wedgent {

using Complex = std::complex<double>;
using Dims = std::vector<std::size_t>;
using MultiIndex = std::vector<std::size_t>;

inline constexpr double kDefaultNormTol = 1e-9;
inline constexpr std::size_t kMaxSubsystems = 8;
inline constexpr std::size_t kMaxStateSize = std::size_t{1} << 20;

// Product of the local dimensions; throws TooLarge past kMaxStateSize.
std::size_t total_dimension(std::span<const std::size_t> dims);

// Structural and normalization check on raw data. Throws LengthMismatch or
// NotNormalized; an empty or zero dimension list is a DimensionMismatch.
void validate(std::span<const std::size_t> dims, std::span<const Complex> amplitudes,
              double tol = kDefaultNormTol);

// Dense amplitude tensor of a pure state on m subsystems.
//
// Amplitudes are stored row-major over (i_1, ..., i_m) with i_1 slowest and
// all indices 0-based. Construction enforces the shape invariants; unit norm
// is checked separately by validate() so that unnormalized vectors can still
// be built and passed to normalize().
class PureState {
public:
    PureState(Dims dims, std::vector<Complex> amplitudes);

    // |i_1, ..., i_m>
    static PureState basis(Dims dims, std::span<const std::size_t> index);

    const Dims& dims() const noexcept { return dims_; }
    std::size_t arity() const noexcept { return dims_.size(); }
    std::size_t size() const noexcept { return amplitudes_.size(); }
    std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
    const std::vector<std::size_t>& strides() const noexcept { return strides_; }

    Complex at(std::size_t flat) const { return amplitudes_.at(flat); }
    Complex at(std::span<const std::size_t> index) const { return amplitudes_[flat_index(index)]; }

    // Throws IndexOutOfRange on a wrong-length or out-of-range index.
    std::size_t flat_index(std::span<const std::size_t> index) const;
    MultiIndex multi_index(std::size_t flat) const;

    double norm_sq() const noexcept;

    friend bool operator==(const PureState&, const PureState&) = default;

private:
    Dims dims_;
    std::vector<std::size_t> strides_;
    std::vector<Complex> amplitudes_;
};

void validate(const PureState& state, double tol = kDefaultNormTol);

// Throws ZeroState when every amplitude vanishes.
PureState normalize(const PureState& state);

// Tensor product, subsystems of `a` first.
PureState tensor(const PureState& a, const PureState& b);

// Split of the subsystems {0..m-1} into `left` and its complement.
class Bipartition {
public:
    // `left` holds 0-based subsystem indices; throws InvalidPartition unless it
    // is a nonempty proper subset of {0..arity-1}. Duplicates are rejected.
    Bipartition(std::vector<std::size_t> left, std::size_t arity);

    const std::vector<std::size_t>& left() const noexcept { return left_; }
    std::vector<std::size_t> right() const;
    std::size_t arity() const noexcept { return arity_; }
    bool contains(std::size_t subsystem) const;

    Bipartition complement() const;

    // The smaller side; on a tie, the side holding subsystem 0.
    Bipartition canonical() const;
    bool is_canonical() const;

    // One-based set notation, e.g. "{1,3}".
    std::string to_string() const;

    friend auto operator<=>(const Bipartition&, const Bipartition&) = default;

private:
    std::vector<std::size_t> left_;
    std::size_t arity_;
};

// All 2^(m-1) - 1 canonical splits, ordered by side size then lexicographically.
std::vector<Bipartition> enumerate_bipartitions(std::size_t m);

// Rows run over the left subsystems, columns over the complement, both
// row-major in increasing subsystem order.
Eigen::MatrixXcd matricize(const PureState& state, const Bipartition& part);

class DensityMatrix {
public:
    // Throws InvalidArgument when not Hermitian within 1e-12 and
    // NotNormalized when the trace is off by more than 1e-9.
    explicit DensityMatrix(Eigen::MatrixXcd entries);

    std::size_t dim() const noexcept { return static_cast<std::size_t>(entries_.rows()); }
    const Eigen::MatrixXcd& entries() const noexcept { return entries_; }
    Complex operator()(std::size_t a, std::size_t b) const { return entries_(a, b); }

private:
    Eigen::MatrixXcd entries_;
};

// Reduced density matrix of subsystem `keep` (0-based): M M^dagger for the
// single-subsystem matricization.
DensityMatrix partial_trace(const PureState& state, std::size_t keep);

// Reduced density matrix of the left side of `part`.
DensityMatrix reduced_density(const PureState& state, const Bipartition& part);

// tr(rho^2)
double purity(const DensityMatrix& rho);

} // namespace wedgent
