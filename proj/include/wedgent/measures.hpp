#pragma once

#include "wedgent/state.hpp"

#include <cstddef>
#include <span>
#include <string_view>

namespace wedgent {

// Largest total dimension accepted by the O(D^2 m) pairwise sums.
inline constexpr std::size_t kMaxMeasureSize = 4096;

struct MeasureConfig {
    double norm_constant = 2.0;
    double tol = kDefaultNormTol;
};

enum class MeasureKind { BipartiteConcurrence, MultipartiteE };

std::string_view to_string(MeasureKind kind);

struct MeasureResult {
    MeasureKind kind;
    double value;          // sqrt(norm_constant * term_sum)
    double norm_constant;
    double term_sum;
};

// Generalized concurrence of a two-party state: sqrt(N sum_{mu<nu} |v_mu ^ v_nu|^2)
// over the rows v of the coefficient matrix.
MeasureResult bipartite_concurrence(const PureState& state, const MeasureConfig& cfg = {});

// Two-qubit closed form 2|a00 a11 - a10 a01| (at N = 2). Uses the same
// arithmetic as bipartite_concurrence, so the two agree bit for bit.
MeasureResult pair_qubit_concurrence(const PureState& state, const MeasureConfig& cfg = {});

// alpha_K alpha_L
Complex pair_coefficient(const PureState& state, std::span<const std::size_t> k, std::span<const std::size_t> l);

// alpha_K alpha_L - alpha_{K[j<-l_j]} alpha_{L[j<-k_j]}; `j` is 0-based.
Complex swapped_wedge_coefficient(const PureState& state, std::span<const std::size_t> k,
                                  std::span<const std::size_t> l, std::size_t j);

// sqrt(N sum_{K,L} sum_j |swapped_wedge_coefficient(K, L, j)|^2), K and L each
// ranging over every multi-index. For m = 2 this equals twice the bipartite
// concurrence.
MeasureResult multipartite_measure(const PureState& state, const MeasureConfig& cfg = {});

// Three-party case written out term by term over (k1,l1,k2,l2,k3,l3).
MeasureResult tripartite_measure(const PureState& state, const MeasureConfig& cfg = {});

MeasureResult evaluate_measure(const PureState& state, MeasureKind kind, const MeasureConfig& cfg = {});

} // namespace wedgent
