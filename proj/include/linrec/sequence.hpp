#pragma once

#include <cstddef>
#include <vector>

#include "linrec/scalar.hpp"

namespace linrec {

/// Constant-coefficient linear recurrence with its initial terms:
///   z_n = c_1 z_{n-1} + ... + c_r z_{n-r}  for n >= r.
/// order() == 0 encodes the zero sequence.
struct RecurrenceSequence {
    std::vector<GaussianRational> coeffs;  // c_1..c_r
    std::vector<GaussianRational> initial; // z_0..z_{r-1}

    std::size_t order() const { return coeffs.size(); }

    void check() const {
        if (coeffs.size() != initial.size()) throw length_mismatch(coeffs.size(), initial.size());
    }
};

/// Finite prefix z_0..z_M of a sequence.
using TermVector = std::vector<GaussianRational>;

/// First m+1 terms z_0..z_m.
inline TermVector gen_terms(const RecurrenceSequence& s, std::size_t m) {
    s.check();
    const std::size_t r = s.order();
    TermVector z(m + 1);
    for (std::size_t n = 0; n <= m; ++n) {
        if (n < r) {
            z[n] = s.initial[n];
        } else {
            GaussianRational acc;
            for (std::size_t j = 1; j <= r; ++j) acc += s.coeffs[j - 1] * z[n - j];
            z[n] = acc;
        }
    }
    return z;
}

/// Binomial convolution: out_n = sum_k C(n,k) x_k y_{n-k}.
inline TermVector hurwitz_product(const TermVector& x, const TermVector& y) {
    if (x.size() != y.size()) throw length_mismatch(x.size(), y.size());
    TermVector out(x.size());
    for (std::size_t n = 0; n < x.size(); ++n) {
        GaussianRational acc;
        for (std::size_t k = 0; k <= n; ++k) {
            mpz_class binom;
            mpz_bin_uiui(binom.get_mpz_t(), n, k);
            acc += GaussianRational(Rational(binom)) * x[k] * y[n - k];
        }
        out[n] = acc;
    }
    return out;
}

/// Ordinary convolution: out_n = sum_k x_k y_{n-k}.
inline TermVector cauchy_product(const TermVector& x, const TermVector& y) {
    if (x.size() != y.size()) throw length_mismatch(x.size(), y.size());
    TermVector out(x.size());
    for (std::size_t n = 0; n < x.size(); ++n) {
        GaussianRational acc;
        for (std::size_t k = 0; k <= n; ++k) acc += x[k] * y[n - k];
        out[n] = acc;
    }
    return out;
}

enum class zeta_direction { forward, inverse };

/// Termwise z_n / n! (forward) or z_n * n! (inverse).
inline TermVector zeta(const TermVector& x, zeta_direction dir = zeta_direction::forward) {
    TermVector out(x.size());
    for (std::size_t n = 0; n < x.size(); ++n) {
        GaussianRational f{Rational(factorial(n))};
        out[n] = dir == zeta_direction::forward ? x[n] / f : x[n] * f;
    }
    return out;
}

/// Berlekamp-Massey over Q(i): the minimal-order recurrence that regenerates
/// the given prefix exactly. With >= 2d terms of a sequence of true minimal
/// order d, the result is the true recurrence.
inline RecurrenceSequence berlekamp_massey(const TermVector& x) {
    const std::size_t n = x.size();
    std::vector<GaussianRational> cur{GaussianRational(1)}; // connection polynomial
    std::vector<GaussianRational> prev{GaussianRational(1)};
    std::size_t length = 0;  // current LFSR length
    std::size_t gap = 1;     // steps since prev was current
    GaussianRational prev_discrepancy(1);

    for (std::size_t i = 0; i < n; ++i) {
        GaussianRational d = x[i];
        for (std::size_t j = 1; j <= length && j < cur.size(); ++j) d += cur[j] * x[i - j];
        if (d.is_zero()) {
            ++gap;
            continue;
        }
        GaussianRational factor = d / prev_discrepancy;
        if (2 * length <= i) {
            std::vector<GaussianRational> keep = cur;
            if (cur.size() < prev.size() + gap) cur.resize(prev.size() + gap);
            for (std::size_t j = 0; j < prev.size(); ++j) cur[j + gap] -= factor * prev[j];
            length = i + 1 - length;
            prev = std::move(keep);
            prev_discrepancy = d;
            gap = 1;
        } else {
            if (cur.size() < prev.size() + gap) cur.resize(prev.size() + gap);
            for (std::size_t j = 0; j < prev.size(); ++j) cur[j + gap] -= factor * prev[j];
            ++gap;
        }
    }

    RecurrenceSequence out;
    out.coeffs.resize(length);
    out.initial.resize(length);
    for (std::size_t j = 1; j <= length; ++j)
        out.coeffs[j - 1] = j < cur.size() ? -cur[j] : GaussianRational();
    for (std::size_t j = 0; j < length; ++j) out.initial[j] = x[j];
    return out;
}

enum class product_kind { hurwitz, cauchy };

/// Recurrence for the termwise product of two recurrent sequences. The order
/// is bounded by r_x*r_y (hurwitz) or r_x+r_y (cauchy); the minimal recurrence
/// is recovered from 2B product terms and checked against 3B.
inline RecurrenceSequence product_recurrence(const RecurrenceSequence& x,
                                             const RecurrenceSequence& y, product_kind kind) {
    x.check();
    y.check();
    if (x.order() == 0 || y.order() == 0) return {};
    const std::size_t bound =
        kind == product_kind::hurwitz ? x.order() * y.order() : x.order() + y.order();
    const std::size_t total = 3 * bound;
    TermVector tx = gen_terms(x, total - 1);
    TermVector ty = gen_terms(y, total - 1);
    TermVector prod =
        kind == product_kind::hurwitz ? hurwitz_product(tx, ty) : cauchy_product(tx, ty);
    TermVector head(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(2 * bound));
    RecurrenceSequence rec = berlekamp_massey(head);
    if (gen_terms(rec, total - 1) != prod)
        throw verification_failure("product recurrence does not regenerate the product terms");
    return rec;
}

} // namespace linrec
