#pragma once

#include "wedgent/state.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace wedgent {

inline constexpr std::size_t kMaxAltFactors = 8;

// Dense complex tensor over an ordered list of slot dimensions, row-major.
class TensorGrid {
public:
    explicit TensorGrid(Dims dims);
    TensorGrid(Dims dims, std::vector<Complex> entries);

    const Dims& dims() const noexcept { return dims_; }
    std::size_t rank() const noexcept { return dims_.size(); }
    std::size_t size() const noexcept { return entries_.size(); }
    std::span<const Complex> entries() const noexcept { return entries_; }
    std::span<Complex> entries() noexcept { return entries_; }

    Complex& operator()(std::span<const std::size_t> index) { return entries_[offset(index)]; }
    Complex operator()(std::span<const std::size_t> index) const { return entries_[offset(index)]; }
    Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * dims_[1] + j]; }
    Complex operator()(std::size_t i, std::size_t j) const { return entries_[i * dims_[1] + j]; }

    std::size_t offset(std::span<const std::size_t> index) const;

    friend bool operator==(const TensorGrid&, const TensorGrid&) = default;

private:
    Dims dims_;
    std::vector<Complex> entries_;
};

// Bijection on {0..m-1} stored as its image array.
class Permutation {
public:
    // Throws InvalidArgument if `image` is not a permutation of 0..m-1.
    explicit Permutation(std::vector<std::size_t> image);
    static Permutation identity(std::size_t m);

    std::size_t size() const noexcept { return image_.size(); }
    std::size_t operator()(std::size_t i) const { return image_[i]; }
    const std::vector<std::size_t>& image() const noexcept { return image_; }

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::size_t> image_;
};

// (p o q)(i) = p(q(i))
Permutation compose(const Permutation& p, const Permutation& q);

// +1 or -1, from the cycle decomposition: each cycle of length L contributes
// L - 1 transpositions.
int signature(const Permutation& p);

// All m! permutations in lexicographic order of their image arrays.
std::vector<Permutation> all_permutations(std::size_t m);

// v_1 (x) v_2 (x) ... (x) v_m
TensorGrid tensor_product(std::span<const std::vector<Complex>> vectors);

// Alternating projection (1/m!) sum_pi sign(pi) T(i_pi(1), ..., i_pi(m)).
// All slot dimensions must agree; at most kMaxAltFactors slots.
TensorGrid alt(const TensorGrid& t);

// Alternation of the decomposable tensor v_1 (x) ... (x) v_m; the vectors
// must share one length.
TensorGrid alt(std::span<const std::vector<Complex>> vectors);

// v ^ w = v (x) w - w (x) v, without the 1/2 of alt(). Entry (i, j) is
// v_i w_j - w_i v_j.
TensorGrid wedge_pair(std::span<const Complex> v, std::span<const Complex> w);

// Sum of |entry|^2.
double grid_norm_sq(const TensorGrid& t);

// grid_norm_sq(wedge_pair(v, w)) without materializing the grid. Same
// summation order, so the result is bitwise identical.
double wedge_pair_norm_sq(std::span<const Complex> v, std::span<const Complex> w);

} // namespace wedgent
