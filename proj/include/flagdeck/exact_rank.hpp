#ifndef FLAGDECK_EXACT_RANK_HPP
#define FLAGDECK_EXACT_RANK_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace flagdeck {

/// Dense integer matrix, row-major.
template <typename T>
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<T> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, T(0)) {}

    T& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

using IntMatrix = Matrix<std::int64_t>;

namespace detail {

/// Fraction-free Gaussian elimination (Bareiss). Every intermediate entry is
/// a minor of the input, so divisions are exact. Returns nullopt if an
/// int64 intermediate would overflow.
template <typename T, typename MulSub>
std::optional<std::size_t> bareiss_rank(Matrix<T> m, MulSub&& mul_sub)
{
    std::size_t rank = 0;
    T prev(1);
    for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows && m(pivot, col) == 0)
            ++pivot;
        if (pivot == m.rows)
            continue;
        if (pivot != rank)
            for (std::size_t j = 0; j < m.cols; ++j)
                std::swap(m(pivot, j), m(rank, j));
        const T p = m(rank, col);
        for (std::size_t i = rank + 1; i < m.rows; ++i) {
            const T a = m(i, col);
            for (std::size_t j = col + 1; j < m.cols; ++j) {
                // m(i,j) = (p * m(i,j) - a * m(rank,j)) / prev
                auto next = mul_sub(p, m(i, j), a, m(rank, j));
                if (!next)
                    return std::nullopt;
                m(i, j) = *next / prev;
            }
            m(i, col) = 0;
        }
        prev = p;
        ++rank;
    }
    return rank;
}

} // namespace detail

/// Exact rank over the rationals of an integer matrix.
inline std::size_t exact_rank(const IntMatrix& m)
{
    auto checked = [](std::int64_t p, std::int64_t x, std::int64_t a,
                      std::int64_t y) -> std::optional<std::int64_t> {
        std::int64_t px, ay, r;
        if (__builtin_mul_overflow(p, x, &px) || __builtin_mul_overflow(a, y, &ay) ||
            __builtin_sub_overflow(px, ay, &r))
            return std::nullopt;
        return r;
    };
    if (auto r = detail::bareiss_rank(m, checked))
        return *r;

    using boost::multiprecision::cpp_int;
    Matrix<cpp_int> big(m.rows, m.cols);
    for (std::size_t i = 0; i < m.data.size(); ++i)
        big.data[i] = m.data[i];
    auto exact = [](const cpp_int& p, const cpp_int& x, const cpp_int& a,
                    const cpp_int& y) -> std::optional<cpp_int> { return p * x - a * y; };
    return *detail::bareiss_rank(std::move(big), exact);
}

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b)
{
    IntMatrix out(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            const std::int64_t x = a(i, k);
            if (x == 0)
                continue;
            for (std::size_t j = 0; j < b.cols; ++j)
                out(i, j) += x * b(k, j);
        }
    return out;
}

} // namespace flagdeck

#endif
