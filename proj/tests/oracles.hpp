#pragma once

// Test-only reference computations. These work straight from amplitude
// indices and never call the library's matricize/partial_trace/measure code.

#include "wedgent/lu_harness.hpp"
#include "wedgent/state.hpp"

#include <cmath>
#include <vector>

namespace wedgent::oracle {

// Digits of a flat index, i_1 slowest.
inline std::vector<std::size_t> digits(std::size_t flat, const Dims& dims)
{
    std::vector<std::size_t> out(dims.size());
    for (std::size_t j = dims.size(); j-- > 0;) {
        out[j] = flat % dims[j];
        flat /= dims[j];
    }
    return out;
}

// rho_{ab} = sum over all other indices of alpha_{..a..} conj(alpha_{..b..}).
inline std::vector<std::vector<Complex>> marginal(const PureState& s, std::size_t keep)
{
    const Dims& dims = s.dims();
    const std::size_t n = dims[keep];
    std::vector<std::vector<Complex>> rho(n, std::vector<Complex>(n));
    for (std::size_t f = 0; f < s.size(); ++f) {
        for (std::size_t g = 0; g < s.size(); ++g) {
            const auto df = digits(f, dims), dg = digits(g, dims);
            bool same_rest = true;
            for (std::size_t j = 0; j < dims.size(); ++j)
                if (j != keep && df[j] != dg[j])
                    same_rest = false;
            if (same_rest)
                rho[df[keep]][dg[keep]] += s.amplitudes()[f] * std::conj(s.amplitudes()[g]);
        }
    }
    return rho;
}

inline double marginal_purity(const PureState& s, std::size_t keep)
{
    double p = 0.0;
    for (const auto& row : marginal(s, keep))
        for (const auto& x : row)
            p += std::norm(x);
    return p;
}

// Closed form of the squared multipartite measure: N * sum_j (2 - 2 tr rho_j^2).
inline double multipartite_sq_closed_form(const PureState& s, double norm_constant = 2.0)
{
    double sum = 0.0;
    for (std::size_t j = 0; j < s.arity(); ++j)
        sum += 2.0 - 2.0 * marginal_purity(s, j);
    return norm_constant * sum;
}

// Random local dimensions in {2, 3} with total dimension at most `max_total`.
inline Dims random_dims(std::size_t m, Rng& rng, std::size_t max_total = 27)
{
    while (true) {
        Dims d(m);
        std::size_t total = 1;
        for (auto& x : d) {
            x = rng.uniform() < 0.5 ? 2 : 3;
            total *= x;
        }
        if (total <= max_total)
            return d;
    }
}

inline PureState ghz(std::size_t m)
{
    std::vector<Complex> a(std::size_t{1} << m);
    a.front() = a.back() = 1.0 / std::sqrt(2.0);
    return PureState(Dims(m, 2), a);
}

inline PureState w3()
{
    std::vector<Complex> a(8);
    a[1] = a[2] = a[4] = 1.0 / std::sqrt(3.0);
    return PureState({2, 2, 2}, a);
}

inline PureState bell()
{
    return PureState({2, 2}, {1.0 / std::sqrt(2.0), 0.0, 0.0, 1.0 / std::sqrt(2.0)});
}

} // namespace wedgent::oracle
