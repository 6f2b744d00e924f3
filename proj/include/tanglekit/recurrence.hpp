#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "polynomial.hpp"

namespace tanglekit {

/// Linear recurrence with polynomial coefficients:
///   sum_{h=0}^{m} coeffs[h](j) * term(j + h) = 0   for every j >= 0,
/// where term(j) is the internal 0-based sequence and the public index is
/// term(j) = y(j + index_offset). The seeds give term(0), term(1), ...; when
/// more than m seeds are supplied the overlapping relation instances are
/// verified, which catches transcription slips in the coefficients.
struct PolyRecurrence {
    std::vector<Polynomial> coeffs;
    std::vector<Int> seeds;
    long long index_offset = 1;

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// The 4-term relation for p_{3,2}: with term(j) = p(j+1),
///   8(n+1)(n+2)(n+3) term(n) + 3(n+2)(5n^2+47n+104) term(n+1)
///   + 3(n+4)(2n+11)(n+7) term(n+2) - (n+7)(n+8)(n+9) term(n+3) = 0,
/// seeded with p(1..4) = 1, 1, 2, 5.
inline PolyRecurrence p32_recurrence() {
    PolyRecurrence rec;
    rec.coeffs = {
        parse_polynomial("8*(n+2)*(n+3)*(n+1)"),
        parse_polynomial("3*(n+2)*(5*n^2+47*n+104)"),
        parse_polynomial("3*(n+4)*(2*n+11)*(n+7)"),
        parse_polynomial("-(n+9)*(n+8)*(n+7)"),
    };
    rec.seeds = {1, 1, 2, 5};
    rec.index_offset = 1;
    return rec;
}

/// First `count` terms of the sequence. Every new term is obtained from the
/// relation instance whose highest shift lands on it; the division by the
/// leading coefficient is asserted exact.
inline std::vector<Int> evaluate(const PolyRecurrence& rec, long long count) {
    int m = rec.order();
    if (m < 1) fail(errc::out_of_range, "recurrence needs at least two coefficients");
    if (static_cast<int>(rec.seeds.size()) < m)
        fail(errc::insufficient_terms, "need at least order-many seeds");
    if (count < 0) fail(errc::out_of_range, "count must be nonnegative");

    std::vector<Int> terms = rec.seeds;
    // extra seeds must already satisfy the relation
    for (long long j = 0; j + m < static_cast<long long>(terms.size()); ++j) {
        Int acc = 0;
        for (int h = 0; h <= m; ++h)
            acc += rec.coeffs[static_cast<size_t>(h)](Int(j)) *
                   terms[static_cast<size_t>(j + h)];
        if (acc != 0) fail(errc::inconsistent, "seeds do not satisfy the recurrence");
    }
    while (static_cast<long long>(terms.size()) < count) {
        long long j = static_cast<long long>(terms.size()) - m;
        Int leading = rec.coeffs[static_cast<size_t>(m)](Int(j));
        if (leading == 0)
            fail(errc::leading_zero, "leading coefficient vanishes at n = " + std::to_string(j));
        Int acc = 0;
        for (int h = 0; h < m; ++h)
            acc += rec.coeffs[static_cast<size_t>(h)](Int(j)) *
                   terms[static_cast<size_t>(j + h)];
        Int value = -acc / leading;
        if (value * leading != -acc)
            fail(errc::inexact_division,
                 "recurrence step not integral at n = " + std::to_string(j));
        terms.push_back(std::move(value));
    }
    terms.resize(static_cast<size_t>(count));
    return terms;
}

/// CLI literal: `rec "p0, p1, ..., pm" seeds s0,s1,...` — the quoted part is
/// a comma-separated list of coefficient polynomials in n.
inline PolyRecurrence parse_recurrence(const std::string& poly_list, const std::string& seed_list,
                                       long long index_offset = 1) {
    PolyRecurrence rec;
    rec.index_offset = index_offset;
    std::string cur;
    int depth = 0;
    auto flush = [&] {
        if (cur.empty()) fail(errc::usage, "empty polynomial in recurrence literal");
        rec.coeffs.push_back(parse_polynomial(cur));
        cur.clear();
    };
    for (char ch : poly_list) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == ',' && depth == 0) {
            flush();
            continue;
        }
        cur.push_back(ch);
    }
    flush();
    std::istringstream ss(seed_list);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        rec.seeds.emplace_back(tok);
    }
    if (rec.coeffs.size() < 2) fail(errc::usage, "recurrence needs at least two coefficients");
    if (rec.seeds.empty()) fail(errc::usage, "recurrence needs seeds");
    return rec;
}

} // namespace tanglekit
