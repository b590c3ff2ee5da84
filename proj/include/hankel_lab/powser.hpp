#ifndef HANKEL_LAB_POWSER_HPP
#define HANKEL_LAB_POWSER_HPP

#include <algorithm>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hankel_lab {

/// Truncated power series c_0 + c_1 z + ... + c_N z^N.
///
/// A series of order N always stores exactly N+1 coefficients. Binary
/// operations on operands of different order truncate to the smaller one,
/// so the result never claims more precision than its least precise input.
template <typename T>
class basic_series {
public:
    using value_type = T;

    basic_series() : coeffs_(1, T{}) {}

    explicit basic_series(std::size_t order) : coeffs_(order + 1, T{}) {}

    /// Coefficients beyond `order` are dropped, missing ones are zero.
    basic_series(std::initializer_list<T> init, std::size_t order)
        : coeffs_(order + 1, T{})
    {
        std::size_t k = 0;
        for (auto it = init.begin(); it != init.end() && k <= order; ++it, ++k) {
            coeffs_[k] = *it;
        }
    }

    basic_series(std::vector<T> coeffs) : coeffs_(std::move(coeffs))
    {
        if (coeffs_.empty()) {
            throw std::invalid_argument("series needs at least one coefficient");
        }
    }

    static basic_series constant(T c, std::size_t order)
    {
        basic_series s(order);
        s.coeffs_[0] = c;
        return s;
    }

    /// The identity series z.
    static basic_series variable(std::size_t order)
    {
        basic_series s(order);
        if (order >= 1) {
            s.coeffs_[1] = T{1};
        }
        return s;
    }

    std::size_t order() const noexcept { return coeffs_.size() - 1; }

    const T& operator[](std::size_t k) const { return coeffs_[k]; }
    T& operator[](std::size_t k) { return coeffs_[k]; }

    /// Coefficient of z^k, zero past the truncation order.
    T coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : T{}; }

    const std::vector<T>& coeffs() const noexcept { return coeffs_; }

    /// Re-truncates (or zero-extends) to `order`.
    basic_series with_order(std::size_t order) const
    {
        std::vector<T> c(order + 1, T{});
        std::copy_n(coeffs_.begin(), std::min(c.size(), coeffs_.size()), c.begin());
        return basic_series(std::move(c));
    }

    /// Horner evaluation of the stored polynomial.
    T operator()(const T& z) const
    {
        T acc{};
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * z + *it;
        }
        return acc;
    }

    basic_series operator-() const
    {
        basic_series r = *this;
        for (auto& c : r.coeffs_) {
            c = -c;
        }
        return r;
    }

    friend basic_series operator+(const basic_series& a, const basic_series& b)
    {
        const std::size_t n = std::min(a.order(), b.order());
        basic_series r(n);
        for (std::size_t k = 0; k <= n; ++k) {
            r.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
        }
        return r;
    }

    friend basic_series operator-(const basic_series& a, const basic_series& b)
    {
        return a + (-b);
    }

    friend basic_series operator*(const basic_series& a, const basic_series& b)
    {
        const std::size_t n = std::min(a.order(), b.order());
        basic_series r(n);
        for (std::size_t k = 0; k <= n; ++k) {
            T acc{};
            for (std::size_t j = 0; j <= k; ++j) {
                acc += a.coeffs_[j] * b.coeffs_[k - j];
            }
            r.coeffs_[k] = acc;
        }
        return r;
    }

    friend basic_series operator*(const T& s, const basic_series& a)
    {
        basic_series r = a;
        for (auto& c : r.coeffs_) {
            c = s * c;
        }
        return r;
    }

    friend basic_series operator/(const basic_series& a, const basic_series& b)
    {
        if (b.coeffs_[0] == T{}) {
            throw std::domain_error("series division by a series with zero constant term");
        }
        const std::size_t n = std::min(a.order(), b.order());
        basic_series q(n);
        for (std::size_t k = 0; k <= n; ++k) {
            T acc = a.coeffs_[k];
            for (std::size_t j = 1; j <= k; ++j) {
                acc -= b.coeffs_[j] * q.coeffs_[k - j];
            }
            q.coeffs_[k] = acc / b.coeffs_[0];
        }
        return q;
    }

    friend bool operator==(const basic_series&, const basic_series&) = default;

private:
    std::vector<T> coeffs_;
};

using series = basic_series<std::complex<double>>;

/// Term-wise derivative; the result has order one less (minimum zero).
template <typename T>
basic_series<T> derivative(const basic_series<T>& a)
{
    if (a.order() == 0) {
        return basic_series<T>(0);
    }
    basic_series<T> r(a.order() - 1);
    for (std::size_t k = 1; k <= a.order(); ++k) {
        r[k - 1] = static_cast<typename T::value_type>(k) * a[k];
    }
    return r;
}

/// a(b(z)); requires b(0) = 0 so that the composition is well defined
/// as a formal series.
template <typename T>
basic_series<T> compose(const basic_series<T>& a, const basic_series<T>& b)
{
    if (b[0] != T{}) {
        throw std::domain_error("compose: inner series must vanish at the origin");
    }
    const std::size_t n = std::min(a.order(), b.order());
    const basic_series<T> inner = b.with_order(n);
    auto acc = basic_series<T>::constant(a[n], n);
    for (std::size_t k = n; k-- > 0;) {
        acc = acc * inner;
        acc[0] += a[k];
    }
    return acc;
}

/// log(a) for a with constant term exactly one, via n b_n = n a_n - sum k b_k a_{n-k}.
template <typename T>
basic_series<T> log(const basic_series<T>& a)
{
    if (a[0] != T{1}) {
        throw std::domain_error("log: series must be normalized to constant term 1");
    }
    using R = typename T::value_type;
    basic_series<T> b(a.order());
    for (std::size_t n = 1; n <= a.order(); ++n) {
        T acc = static_cast<R>(n) * a[n];
        for (std::size_t k = 1; k < n; ++k) {
            acc -= static_cast<R>(k) * b[k] * a[n - k];
        }
        b[n] = acc / static_cast<R>(n);
    }
    return b;
}

/// exp(b); a nonzero constant term contributes the scalar factor exp(b_0).
template <typename T>
basic_series<T> exp(const basic_series<T>& b)
{
    using R = typename T::value_type;
    basic_series<T> e(b.order());
    e[0] = T{1};
    for (std::size_t n = 1; n <= b.order(); ++n) {
        T acc{};
        for (std::size_t k = 1; k <= n; ++k) {
            acc += static_cast<R>(k) * b[k] * e[n - k];
        }
        e[n] = acc / static_cast<R>(n);
    }
    if (b[0] != T{}) {
        return std::exp(b[0]) * e;
    }
    return e;
}

/// a^beta = exp(beta log a) for normalized a (constant term exactly 1).
/// Callers with another constant term must factor it out themselves.
template <typename T>
basic_series<T> pow(const basic_series<T>& a, typename T::value_type beta)
{
    if (a[0] != T{1}) {
        throw std::domain_error("pow: series must be normalized to constant term 1");
    }
    return exp(T{beta} * log(a));
}

} // namespace hankel_lab

#endif
