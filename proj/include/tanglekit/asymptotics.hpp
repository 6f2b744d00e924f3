#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "recurrence.hpp"
#include "series.hpp"

namespace tanglekit {

/// Normalized characteristic polynomial P(X) = sum_h (lead C_h / lead C_0) X^h.
struct CharPoly {
    std::vector<Rat> coefficients; // ascending, coefficients[0] = 1

    int degree() const { return static_cast<int>(coefficients.size()) - 1; }
    Rat operator()(const Rat& x) const {
        Rat r = 0;
        for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) r = r * x + *it;
        return r;
    }
};

/// Data of the selected formal series solution term(n) ~ K lambda^n n^theta
/// (1 + c_1/n + c_2/n^2 + ...). Restricted to the specialization mu0 = 0,
/// rho = 1, beta = 0, no logarithm terms; anything outside it raises a typed
/// error instead of guessing.
struct AsymptoticExpansion {
    Rat lambda;
    Rat theta;
    std::vector<Rat> corrections;
    double K = 0.0;

    static constexpr int mu0 = 0;
    static constexpr int rho = 1;
    static constexpr int beta = 0;
};

inline CharPoly char_poly(const PolyRecurrence& rec) {
    if (rec.coeffs.size() < 2) fail(errc::out_of_range, "recurrence too short");
    if (rec.coeffs.front().zero() || rec.coeffs.back().zero())
        fail(errc::out_of_range, "extreme coefficients must be nonzero");
    int d = rec.coeffs.front().degree();
    for (const auto& p : rec.coeffs)
        if (!p.zero() && p.degree() != d)
            fail(errc::unequal_degrees, "coefficient polynomials must share one degree");
    CharPoly cp;
    const Int& lead0 = rec.coeffs.front().lead();
    for (const auto& p : rec.coeffs) cp.coefficients.emplace_back(Rat(p.lead()) / Rat(lead0));
    return cp;
}

namespace detail {

/// Exact rational roots (with multiplicity) of an integer polynomial, found
/// by the rational root theorem with trial division; the deflated cofactor
/// (rational-root free) is returned through `rest`.
inline std::vector<Rat> rational_roots(std::vector<Int> a, std::vector<Rat>& rest_out) {
    std::vector<Rat> roots;
    while (a.size() > 1 && a.front() == 0) { // root at 0
        roots.emplace_back(0);
        a.erase(a.begin());
    }
    auto divisors = [](Int v) {
        if (v < 0) v = -v;
        std::vector<Int> out;
        for (Int d = 1; d * d <= v && d <= 1000000; ++d) {
            if (v % d != 0) continue;
            out.push_back(d);
            out.push_back(v / d);
        }
        return out;
    };
    bool progress = true;
    while (progress && a.size() > 1) {
        progress = false;
        for (const Int& p : divisors(a.front())) {
            for (const Int& q : divisors(a.back())) {
                for (int sign : {1, -1}) {
                    Rat cand = Rat(sign * p) / Rat(q);
                    // synthetic division by (X - cand) in rationals
                    std::vector<Rat> ra(a.begin(), a.end());
                    std::vector<Rat> quot(ra.size() - 1);
                    Rat carry = ra.back();
                    for (size_t i = ra.size() - 1; i-- > 0;) {
                        quot[i] = carry;
                        carry = ra[i] + carry * cand;
                    }
                    if (carry != 0) continue;
                    roots.push_back(cand);
                    // rescale quotient back to integers
                    Int lcm = 1;
                    for (const auto& r : quot) lcm = boost::multiprecision::lcm(lcm, denominator(r));
                    a.clear();
                    for (const auto& r : quot)
                        a.push_back(numerator(r) * (lcm / denominator(r)));
                    progress = true;
                    goto next_round;
                }
            }
        }
    next_round:;
    }
    rest_out.assign(a.begin(), a.end());
    return roots;
}

/// True when every root of the (rational-root-free) polynomial has modulus
/// strictly below `lambda`; exact for degree <= 2, Cauchy bound above that.
inline bool remainder_dominated(const std::vector<Rat>& a, const Rat& lambda) {
    int d = static_cast<int>(a.size()) - 1;
    if (d <= 0) return true;
    if (d == 1) return boost::multiprecision::abs(a[0] / a[1]) < lambda;
    if (d == 2) {
        const Rat &c = a[0], &b = a[1], &lead = a[2];
        Rat disc = b * b - 4 * lead * c;
        if (disc < 0) return boost::multiprecision::abs(c / lead) < lambda * lambda;
        // two real roots: both lie in (-lambda, lambda) iff the parabola has
        // the leading sign at +-lambda and its vertex sits inside
        auto eval = [&](const Rat& x) { return (lead * x + b) * x + c; };
        Rat s = lead > 0 ? Rat(1) : Rat(-1);
        return s * eval(lambda) > 0 && s * eval(-lambda) > 0 &&
               boost::multiprecision::abs(b / (2 * lead)) < lambda;
    }
    Rat bound = 0;
    for (int i = 0; i < d; ++i) {
        Rat q = boost::multiprecision::abs(a[static_cast<size_t>(i)] / a[static_cast<size_t>(d)]);
        if (q > bound) bound = q;
    }
    return 1 + bound < lambda;
}

struct GrowthData {
    Rat lambda;
    Rat theta;
    int degree = 0;                 // common degree d of the coefficient polynomials
    std::vector<Rat> lambda_pows;   // lambda^h for h = 0..m
};

inline GrowthData growth_data(const PolyRecurrence& rec) {
    CharPoly cp = char_poly(rec);
    // scale to an integer polynomial
    Int lcm = 1;
    for (const auto& r : cp.coefficients) lcm = boost::multiprecision::lcm(lcm, denominator(r));
    std::vector<Int> ip;
    for (const auto& r : cp.coefficients) ip.push_back(numerator(r) * (lcm / denominator(r)));

    std::vector<Rat> rest;
    std::vector<Rat> roots = rational_roots(ip, rest);
    std::optional<Rat> lambda;
    for (const auto& r : roots)
        if (r > 0 && (!lambda || r > *lambda)) lambda = r;
    if (!lambda)
        fail(errc::no_dominant_rational_root, "no positive rational characteristic root");
    if (std::count(roots.begin(), roots.end(), *lambda) > 1)
        fail(errc::non_simple_root, "dominant root is not simple");
    for (const auto& r : roots)
        if (r != *lambda && boost::multiprecision::abs(r) >= *lambda)
            fail(errc::no_dominant_rational_root, "dominant root not of largest modulus");
    if (!remainder_dominated(rest, *lambda))
        fail(errc::no_dominant_rational_root,
             "cannot certify remaining roots below the dominant one");

    GrowthData g;
    g.lambda = *lambda;
    g.degree = rec.coeffs.front().degree();
    Rat pw = 1;
    for (size_t h = 0; h < rec.coeffs.size(); ++h) {
        g.lambda_pows.push_back(pw);
        pw *= g.lambda;
    }
    // order n^{-1}: sum_h lambda^h (a_{h,1} + theta h a_{h,0}) = 0; theta is
    // linear here and the c_i do not yet appear.
    Rat A = 0, B = 0;
    for (size_t h = 0; h < rec.coeffs.size(); ++h) {
        const auto& p = rec.coeffs[h];
        A += g.lambda_pows[h] * Rat(p.coeff(g.degree - 1));
        B += g.lambda_pows[h] * Rat(static_cast<long long>(h)) * Rat(p.coeff(g.degree));
    }
    // B = lambda P'(lambda) scaled; nonzero because the root is simple
    g.theta = -A / B;
    return g;
}

} // namespace detail

/// Growth rate and power exponent of the increasing formal series solution.
inline std::pair<Rat, Rat> solve_growth(const PolyRecurrence& rec) {
    auto g = detail::growth_data(rec);
    return {g.lambda, g.theta};
}

/// Correction coefficients c_1..c_m, solved one at a time: c_j appears
/// linearly in the n^{-(j+1)} coefficient of the substituted ansatz with all
/// earlier c's known. Everything is exact rational arithmetic.
inline std::vector<Rat> solve_corrections(const PolyRecurrence& rec, const Rat& lambda,
                                          const Rat& theta, int m) {
    if (m < 0) fail(errc::out_of_range, "m must be nonnegative");
    auto g = detail::growth_data(rec);
    if (g.lambda != lambda || g.theta != theta)
        fail(errc::inconsistent, "lambda/theta do not belong to this recurrence");
    const int order = m + 1;

    // F_i = sum_h lambda^h * (C_h(n)/n^d) * (1 + h u)^{theta - i}; the ansatz
    // substituted into the relation is F_0 + sum_j c_j u^j F_j = 0.
    std::vector<TruncatedSeries> F;
    for (int i = 0; i <= m; ++i) {
        TruncatedSeries fi(order);
        for (size_t h = 0; h < rec.coeffs.size(); ++h) {
            TruncatedSeries t = poly_series(rec.coeffs[h], g.degree, order) *
                                binomial_series(theta - i, static_cast<long long>(h), order);
            fi = fi + g.lambda_pows[h] * t;
        }
        F.push_back(std::move(fi));
    }
    if (F[0][0] != 0 || F[0][1] != 0)
        fail(errc::inconsistent, "growth data does not annihilate the leading orders");

    std::vector<Rat> c;
    for (int j = 1; j <= m; ++j) {
        // coefficient of u^{j+1}: F_0[j+1] + sum_{i<j} c_i F_i[j+1-i] + c_j F_j[1]
        Rat numer = F[0][j + 1];
        for (int i = 1; i < j; ++i) numer += c[static_cast<size_t>(i - 1)] * F[i][j + 1 - i];
        const Rat& L = F[static_cast<size_t>(j)][1]; // equals -j * lambda P'(lambda)
        if (L == 0) fail(errc::singular_system, "coefficient of c_" + std::to_string(j));
        c.push_back(-numer / L);
    }
    return c;
}

/// Coefficients of u^0..u^{through_order} of the substituted ansatz with the
/// given corrections; all must vanish when the expansion is correct.
inline std::vector<Rat> fss_residuals(const PolyRecurrence& rec, const AsymptoticExpansion& exp,
                                      int through_order) {
    auto g = detail::growth_data(rec);
    int order = through_order;
    TruncatedSeries total(order);
    for (int i = 0; i <= static_cast<int>(exp.corrections.size()); ++i) {
        TruncatedSeries fi(order);
        for (size_t h = 0; h < rec.coeffs.size(); ++h) {
            TruncatedSeries t = poly_series(rec.coeffs[h], g.degree, order) *
                                binomial_series(exp.theta - i, static_cast<long long>(h), order);
            fi = fi + g.lambda_pows[h] * t;
        }
        if (i == 0) total = total + fi;
        else total = total + (exp.corrections[static_cast<size_t>(i - 1)] * fi.shifted(i));
    }
    return std::vector<Rat>(total.c.begin(), total.c.end());
}

/// 1 + c_1/n + c_2/n^2 + ... evaluated exactly.
inline Rat correction_factor(const std::vector<Rat>& corrections, long long n) {
    Rat corr = 1;
    Rat npow = 1;
    for (const auto& cj : corrections) {
        npow *= n;
        corr += cj / npow;
    }
    return corr;
}

/// K_n = term(n) lambda^{-n} n^{-theta} / (1 + c_1/n + ...), evaluated in
/// floating point from exact inputs; seq holds term(0), term(1), ...
inline double fit_K(const std::vector<Int>& seq, const AsymptoticExpansion& exp, long long n_fit) {
    if (n_fit < 1 || static_cast<long long>(seq.size()) < n_fit + 1)
        fail(errc::insufficient_terms, "sequence too short for the requested fit point");
    const Int& z = seq[static_cast<size_t>(n_fit)];
    Rat corr = correction_factor(exp.corrections, n_fit);
    if (denominator(exp.theta) == 1) {
        long long th = static_cast<long long>(numerator(exp.theta));
        Rat val = Rat(z);
        Rat lp = exp.lambda;
        // lambda^{-n}
        Rat lpow = 1;
        for (long long i = 0; i < n_fit; ++i) lpow *= lp;
        val /= lpow;
        Rat npow = 1;
        for (long long i = 0; i < std::llabs(th); ++i) npow *= n_fit;
        if (th > 0) val /= npow;
        else val *= npow;
        val /= corr;
        return to_double(val);
    }
    // non-integer exponent: assemble in floating point
    double val = to_double(Rat(z)) / std::pow(to_double(exp.lambda), static_cast<double>(n_fit));
    val /= std::pow(static_cast<double>(n_fit), to_double(exp.theta));
    return val / to_double(corr);
}

/// Row of the sub-exponential factor table: the exact ratio term(n)/lambda^n
/// and the asymptotic g(n) = K n^theta (1 + c_1/n + c_2/n^2 + c_3/n^3).
struct SubexpRow {
    long long n = 0;
    double exact_ratio = 0.0;
    double g = 0.0;
};

inline std::vector<SubexpRow> subexp_table(const std::vector<long long>& ns,
                                           const std::vector<Int>& seq,
                                           const AsymptoticExpansion& exp) {
    std::vector<SubexpRow> rows;
    for (long long n : ns) {
        if (n < 1 || static_cast<long long>(seq.size()) < n + 1)
            fail(errc::insufficient_terms, "sequence too short for table row");
        Rat lpow = 1;
        for (long long i = 0; i < n; ++i) lpow *= exp.lambda;
        double exact = to_double(Rat(seq[static_cast<size_t>(n)]) / lpow);
        double g = exp.K * std::pow(static_cast<double>(n), to_double(exp.theta)) *
                   to_double(correction_factor(exp.corrections, n));
        rows.push_back({n, exact, g});
    }
    return rows;
}

/// Full pipeline for one recurrence: growth, corrections, K fitted at n_fit.
inline AsymptoticExpansion analyze(const PolyRecurrence& rec, int corrections, long long fit_n) {
    AsymptoticExpansion exp;
    auto [lambda, theta] = solve_growth(rec);
    exp.lambda = lambda;
    exp.theta = theta;
    exp.corrections = solve_corrections(rec, lambda, theta, corrections);
    std::vector<Int> seq = evaluate(rec, fit_n + 1);
    exp.K = fit_K(seq, exp, fit_n);
    return exp;
}

} // namespace tanglekit
