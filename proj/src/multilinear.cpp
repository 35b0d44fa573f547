#include "wedgent/multilinear.hpp"

#include "wedgent/errors.hpp"

#include <algorithm>
#include <numeric>

namespace wedgent {

namespace {

std::size_t product_of(const Dims& dims)
{
    std::size_t n = 1;
    for (std::size_t d : dims) {
        if (d == 0)
            throw Error(ErrorCode::DimensionMismatch, "tensor slot dimensions must be positive");
        n *= d;
    }
    return n;
}

} // namespace

TensorGrid::TensorGrid(Dims dims) : dims_(std::move(dims)), entries_(product_of(dims_)) {}

TensorGrid::TensorGrid(Dims dims, std::vector<Complex> entries)
    : dims_(std::move(dims)), entries_(std::move(entries))
{
    if (entries_.size() != product_of(dims_))
        throw Error(ErrorCode::LengthMismatch, "entry count does not match tensor dimensions");
}

std::size_t TensorGrid::offset(std::span<const std::size_t> index) const
{
    std::size_t off = 0;
    for (std::size_t s = 0; s < dims_.size(); ++s)
        off = off * dims_[s] + index[s];
    return off;
}

// ---------------------------------------------------------------------------

Permutation::Permutation(std::vector<std::size_t> image) : image_(std::move(image))
{
    std::vector<bool> seen(image_.size(), false);
    for (std::size_t v : image_) {
        if (v >= image_.size() || seen[v])
            throw Error(ErrorCode::InvalidArgument, "image array is not a permutation");
        seen[v] = true;
    }
}

Permutation Permutation::identity(std::size_t m)
{
    std::vector<std::size_t> image(m);
    std::iota(image.begin(), image.end(), 0);
    return Permutation(std::move(image));
}

Permutation compose(const Permutation& p, const Permutation& q)
{
    if (p.size() != q.size())
        throw Error(ErrorCode::DimensionMismatch, "cannot compose permutations of different degree");
    std::vector<std::size_t> image(p.size());
    for (std::size_t i = 0; i < image.size(); ++i)
        image[i] = p(q(i));
    return Permutation(std::move(image));
}

int signature(const Permutation& p)
{
    std::vector<bool> visited(p.size(), false);
    std::size_t transpositions = 0;
    for (std::size_t start = 0; start < p.size(); ++start) {
        if (visited[start])
            continue;
        std::size_t length = 0;
        for (std::size_t i = start; !visited[i]; i = p(i)) {
            visited[i] = true;
            ++length;
        }
        transpositions += length - 1;
    }
    return transpositions % 2 == 0 ? 1 : -1;
}

std::vector<Permutation> all_permutations(std::size_t m)
{
    std::vector<Permutation> out;
    std::vector<std::size_t> image(m);
    std::iota(image.begin(), image.end(), 0);
    do {
        out.emplace_back(image);
    } while (std::next_permutation(image.begin(), image.end()));
    return out;
}

// ---------------------------------------------------------------------------

TensorGrid tensor_product(std::span<const std::vector<Complex>> vectors)
{
    Dims dims;
    for (const auto& v : vectors)
        dims.push_back(v.size());
    TensorGrid out(dims);
    std::vector<Complex> acc{Complex(1.0)};
    for (const auto& v : vectors) {
        std::vector<Complex> next;
        next.reserve(acc.size() * v.size());
        for (const Complex& a : acc)
            for (const Complex& x : v)
                next.push_back(a * x);
        acc = std::move(next);
    }
    std::copy(acc.begin(), acc.end(), out.entries().begin());
    return out;
}

TensorGrid alt(const TensorGrid& t)
{
    const std::size_t m = t.rank();
    if (m > kMaxAltFactors)
        throw Error(ErrorCode::TooManyFactors, "alternation supports at most " + std::to_string(kMaxAltFactors) +
                                                   " slots");
    if (m == 0)
        return t;
    const std::size_t n = t.dims()[0];
    if (std::any_of(t.dims().begin(), t.dims().end(), [n](std::size_t d) { return d != n; }))
        throw Error(ErrorCode::DimensionMismatch, "alternation needs equal slot dimensions");

    const auto perms = all_permutations(m);
    std::vector<int> signs;
    signs.reserve(perms.size());
    for (const auto& p : perms)
        signs.push_back(signature(p));
    const double inv_factorial = 1.0 / static_cast<double>(perms.size());

    TensorGrid out(t.dims());
    MultiIndex index(m, 0), permuted(m);
    for (std::size_t flat = 0; flat < t.size(); ++flat) {
        Complex sum = 0.0;
        for (std::size_t k = 0; k < perms.size(); ++k) {
            for (std::size_t s = 0; s < m; ++s)
                permuted[s] = index[perms[k](s)];
            sum += static_cast<double>(signs[k]) * t(permuted);
        }
        out.entries()[flat] = sum * inv_factorial;

        for (std::size_t s = m; s-- > 0;) {
            if (++index[s] < n)
                break;
            index[s] = 0;
        }
    }
    return out;
}

TensorGrid alt(std::span<const std::vector<Complex>> vectors)
{
    if (vectors.size() > kMaxAltFactors)
        throw Error(ErrorCode::TooManyFactors, "alternation supports at most " + std::to_string(kMaxAltFactors) +
                                                   " factors");
    for (const auto& v : vectors)
        if (v.size() != vectors.front().size())
            throw Error(ErrorCode::DimensionMismatch, "alternated vectors must share one length");
    return alt(tensor_product(vectors));
}

TensorGrid wedge_pair(std::span<const Complex> v, std::span<const Complex> w)
{
    if (v.size() != w.size())
        throw Error(ErrorCode::DimensionMismatch, "wedge factors must have equal length");
    const std::size_t n = v.size();
    TensorGrid out(Dims{n, n});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out(i, j) = v[i] * w[j] - w[i] * v[j];
    return out;
}

double grid_norm_sq(const TensorGrid& t)
{
    double sum = 0.0;
    for (const Complex& x : t.entries())
        sum += std::norm(x);
    return sum;
}

double wedge_pair_norm_sq(std::span<const Complex> v, std::span<const Complex> w)
{
    if (v.size() != w.size())
        throw Error(ErrorCode::DimensionMismatch, "wedge factors must have equal length");
    const std::size_t n = v.size();
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            sum += std::norm(v[i] * w[j] - w[i] * v[j]);
    return sum;
}

} // namespace wedgent
