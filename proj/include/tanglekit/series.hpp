#pragma once

#include <vector>

#include "errors.hpp"
#include "integer.hpp"
#include "polynomial.hpp"

namespace tanglekit {

/// Truncated power series in u = 1/n with exact rational coefficients:
/// c[0] + c[1] u + ... + c[order] u^order. All arithmetic drops terms beyond
/// the working order.
struct TruncatedSeries {
    std::vector<Rat> c;

    explicit TruncatedSeries(int order) : c(static_cast<size_t>(order) + 1, Rat(0)) {
        if (order < 0) fail(errc::out_of_range, "series order must be nonnegative");
    }

    int order() const { return static_cast<int>(c.size()) - 1; }
    const Rat& operator[](int i) const { return c[static_cast<size_t>(i)]; }
    Rat& operator[](int i) { return c[static_cast<size_t>(i)]; }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(std::max(a.order(), b.order()));
        for (int i = 0; i <= a.order(); ++i) r[i] += a[i];
        for (int i = 0; i <= b.order(); ++i) r[i] += b[i];
        return r;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(std::max(a.order(), b.order()));
        for (int i = 0; i <= a.order() && i <= r.order(); ++i) {
            if (a[i] == 0) continue;
            for (int j = 0; j <= b.order() && i + j <= r.order(); ++j)
                r[i + j] += a[i] * b[j];
        }
        return r;
    }
    friend TruncatedSeries operator*(const Rat& s, const TruncatedSeries& a) {
        TruncatedSeries r = a;
        for (auto& v : r.c) v *= s;
        return r;
    }

    /// Multiply by u^k (shift coefficients up, truncating).
    TruncatedSeries shifted(int k) const {
        TruncatedSeries r(order());
        for (int i = 0; i + k <= order(); ++i) r[i + k] = (*this)[i];
        return r;
    }
};

/// Generalized binomial series (1 + h u)^alpha to the given order; alpha may
/// be any rational.
inline TruncatedSeries binomial_series(const Rat& alpha, long long h, int order) {
    TruncatedSeries s(order);
    Rat coeff = 1;
    s[0] = 1;
    for (int i = 1; i <= order; ++i) {
        coeff *= (alpha - (i - 1)) / i;
        s[i] = coeff * int_pow(Int(h), static_cast<unsigned long>(i));
    }
    return s;
}

/// C(n) / n^d as a series in u = 1/n: the u^i coefficient is the n^{d-i}
/// coefficient of C. Requires deg C <= d.
inline TruncatedSeries poly_series(const Polynomial& p, int d, int order) {
    if (p.degree() > d) fail(errc::out_of_range, "polynomial degree exceeds normalization");
    TruncatedSeries s(order);
    for (int i = 0; i <= order && i <= d; ++i) s[i] = Rat(p.coeff(d - i));
    return s;
}

} // namespace tanglekit
