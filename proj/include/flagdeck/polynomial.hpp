#ifndef FLAGDECK_POLYNOMIAL_HPP
#define FLAGDECK_POLYNOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "error.hpp"

namespace flagdeck {

using Int = std::int64_t;

/// Binomial coefficient with the combinatorial convention C(n, k) = 0 when
/// k < 0, n < 0 or k > n. Throws on overflow.
inline Int binomial(Int n, Int k)
{
    if (n < 0 || k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    __extension__ __int128 acc = 1;
    for (Int i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > INT64_MAX)
            throw Error("binomial coefficient overflow");
    }
    return static_cast<Int>(acc);
}

/// Dense integer polynomial, coefficient index = degree. Trailing zeros are
/// trimmed so that equality is structural.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial monomial(Int coeff, std::size_t degree)
    {
        std::vector<Int> c(degree + 1, 0);
        c[degree] = coeff;
        return Polynomial(std::move(c));
    }

    const std::vector<Int>& coeffs() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }

    Int operator[](std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }

    /// Coefficients padded with zeros (or checked-truncated) to length n.
    std::vector<Int> padded(std::size_t n) const
    {
        if (c_.size() > n)
            throw Error("polynomial of degree " + std::to_string(degree()) +
                        " does not fit in " + std::to_string(n) + " coefficients");
        std::vector<Int> out(c_);
        out.resize(n, 0);
        return out;
    }

    Int evaluate(Int t) const
    {
        Int acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * t + *it;
        return acc;
    }

    /// Multiplies by t^k.
    Polynomial shifted(std::size_t k) const
    {
        if (c_.empty())
            return {};
        std::vector<Int> out(k, 0);
        out.insert(out.end(), c_.begin(), c_.end());
        return Polynomial(std::move(out));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b)
    {
        std::vector<Int> out(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = a[i] + b[i];
        return Polynomial(std::move(out));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b)
    {
        std::vector<Int> out(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = a[i] - b[i];
        return Polynomial(std::move(out));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<Int> out(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                out[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(out));
    }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    std::string to_string() const
    {
        if (c_.empty())
            return "0";
        std::string s;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0)
                continue;
            if (!s.empty())
                s += c_[i] < 0 ? " - " : " + ";
            else if (c_[i] < 0)
                s += "-";
            const Int mag = c_[i] < 0 ? -c_[i] : c_[i];
            if (mag != 1 || i == 0)
                s += std::to_string(mag);
            if (i >= 1)
                s += "t";
            if (i >= 2)
                s += "^" + std::to_string(i);
        }
        return s;
    }

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
    }

    std::vector<Int> c_;
};

} // namespace flagdeck

#endif
