#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "linrec/normal_form.hpp"
#include "linrec/polynomial.hpp"
#include "linrec/scalar.hpp"
#include "linrec/sequence.hpp"

namespace linrec {

/// Power series known exactly modulo Z^(M+1). The truncation order is part of
/// the value; mixed-order arithmetic is refused rather than silently cut down.
class PowerSeriesTrunc {
public:
    explicit PowerSeriesTrunc(std::size_t order) : c_(order + 1) {}
    PowerSeriesTrunc(std::vector<GaussianRational> coeffs, std::size_t order)
        : c_(std::move(coeffs)) {
        c_.resize(order + 1);
    }

    static PowerSeriesTrunc monomial(std::size_t n, std::size_t order) {
        PowerSeriesTrunc s(order);
        if (n <= order) s.c_[n] = GaussianRational(1);
        return s;
    }

    std::size_t order() const { return c_.size() - 1; }
    const GaussianRational& coeff(std::size_t k) const { return c_[k]; }
    void set_coeff(std::size_t k, GaussianRational v) { c_[k] = std::move(v); }
    const std::vector<GaussianRational>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& c : c_)
            if (!c.is_zero()) return false;
        return true;
    }

    PowerSeriesTrunc& operator+=(const PowerSeriesTrunc& o) {
        require_same_order(o);
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
        return *this;
    }
    PowerSeriesTrunc& operator-=(const PowerSeriesTrunc& o) {
        require_same_order(o);
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
        return *this;
    }
    friend PowerSeriesTrunc operator+(PowerSeriesTrunc a, const PowerSeriesTrunc& b) { a += b; return a; }
    friend PowerSeriesTrunc operator-(PowerSeriesTrunc a, const PowerSeriesTrunc& b) { a -= b; return a; }

    /// Cauchy product mod Z^(M+1); orders must match.
    friend PowerSeriesTrunc operator*(const PowerSeriesTrunc& a, const PowerSeriesTrunc& b) {
        a.require_same_order(b);
        PowerSeriesTrunc out(a.order());
        for (std::size_t n = 0; n < a.c_.size(); ++n) {
            GaussianRational acc;
            for (std::size_t k = 0; k <= n; ++k) acc += a.c_[k] * b.c_[n - k];
            out.c_[n] = acc;
        }
        return out;
    }

    friend bool operator==(const PowerSeriesTrunc& a, const PowerSeriesTrunc& b) {
        return a.c_ == b.c_;
    }
    friend bool operator!=(const PowerSeriesTrunc& a, const PowerSeriesTrunc& b) { return !(a == b); }

private:
    void require_same_order(const PowerSeriesTrunc& o) const {
        if (c_.size() != o.c_.size()) throw order_mismatch(c_.size() - 1, o.c_.size() - 1);
    }

    std::vector<GaussianRational> c_;
};

/// Exponential generating series of a normal form, truncated at order M:
/// coefficient k is f(e_k) = f(X^k)/k!.
inline PowerSeriesTrunc egf_trunc(const NormalForm& f, std::size_t m) {
    PowerSeriesTrunc out(m);
    for (std::size_t k = 0; k <= m; ++k) out.set_coeff(k, f.eval_divided(k));
    return out;
}

/// The series with coefficient n equal to 1/(n+k)!. Its k-th shift Z^k * h_k
/// is exp(Z) minus its degree-(k-1) Taylor head. Not a recurrent sequence for
/// k >= 1, so it exists only in truncated form.
inline PowerSeriesTrunc h_series(std::size_t k, std::size_t m) {
    PowerSeriesTrunc out(m);
    for (std::size_t n = 0; n <= m; ++n)
        out.set_coeff(n, GaussianRational(Rational(mpz_class(1), factorial(n + k))));
    return out;
}

/// Least index with nonzero coefficient; nullopt when every stored
/// coefficient vanishes (the valuation exceeds the truncation order).
inline std::optional<std::size_t> valuation(const PowerSeriesTrunc& s) {
    for (std::size_t n = 0; n <= s.order(); ++n)
        if (!s.coeff(n).is_zero()) return n;
    return std::nullopt;
}

/// Reduced fraction p(Z)/q(Z) with q(0) = 1 and gcd(p, q) = 1.
struct RationalOGF {
    Polynomial num;
    Polynomial den = Polynomial::constant(GaussianRational(1));

    friend bool operator==(const RationalOGF& a, const RationalOGF& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const RationalOGF& a, const RationalOGF& b) { return !(a == b); }
};

inline RationalOGF make_ogf(Polynomial num, Polynomial den) {
    if (den.coeff(0).is_zero()) throw error("generating-function denominator vanishes at 0");
    if (num.is_zero()) return {};
    Polynomial g = poly_gcd(num, den);
    num = num.divexact(g);
    den = den.divexact(g);
    GaussianRational scale = GaussianRational(1) / den.coeff(0);
    return {num * scale, den * scale};
}

/// Coefficients 0..m of the series expansion of p/q.
inline TermVector ogf_series(const RationalOGF& g, std::size_t m) {
    TermVector out(m + 1);
    for (std::size_t n = 0; n <= m; ++n) {
        GaussianRational acc = g.num.coeff(n);
        for (std::size_t i = 1; i <= n && static_cast<long>(i) <= g.den.degree(); ++i)
            acc -= g.den.coeff(i) * out[n - i];
        out[n] = acc;
    }
    return out;
}

/// Ordinary generating function of a recurrent sequence: with the monic
/// characteristic convention b_r = 1, b_{r-j} = -c_j, the denominator is
/// q(Z) = sum_i b_{r-i} Z^i and the numerator p(Z) = sum_j (sum_{i<=j}
/// b_{r-i} z_{j-i}) Z^j, so that q(Z) * (sum z_n Z^n) = p(Z). The identity is
/// re-checked on 3r+3 coefficients after reduction.
inline RationalOGF ogf_from_recurrence(const RecurrenceSequence& s) {
    s.check();
    const std::size_t r = s.order();
    if (r == 0) return {};

    // monic convention: b[0..r], b_r = 1, b_{r-j} = -c_j
    std::vector<GaussianRational> b(r + 1);
    b[r] = GaussianRational(1);
    for (std::size_t j = 1; j <= r; ++j) b[r - j] = -s.coeffs[j - 1];

    std::vector<GaussianRational> q(r + 1), p(r);
    for (std::size_t i = 0; i <= r; ++i) q[i] = b[r - i];
    for (std::size_t j = 0; j < r; ++j) {
        GaussianRational acc;
        for (std::size_t i = 0; i <= j; ++i) acc += b[r - i] * s.initial[j - i];
        p[j] = acc;
    }
    RationalOGF g = make_ogf(Polynomial(std::move(p)), Polynomial(std::move(q)));

    const std::size_t check = 3 * r + 3;
    TermVector terms = gen_terms(s, check);
    for (std::size_t n = 0; n <= check; ++n) {
        GaussianRational acc;
        for (std::size_t i = 0; i <= n && static_cast<long>(i) <= g.den.degree(); ++i)
            acc += g.den.coeff(i) * terms[n - i];
        if (acc != g.num.coeff(n))
            throw verification_failure("generating function does not match the sequence");
    }
    return g;
}

/// Recurrence of the sequence expanded from p/q: order max(deg q, deg p + 1),
/// coefficients read off the denominator, initial terms from the expansion.
inline RecurrenceSequence recurrence_from_ogf(const RationalOGF& g) {
    if (g.num.is_zero()) return {};
    const long dq = g.den.degree();
    const long dp = g.num.degree();
    const std::size_t r = static_cast<std::size_t>(dq > dp + 1 ? dq : dp + 1);

    RecurrenceSequence s;
    s.coeffs.resize(r);
    for (std::size_t j = 1; j <= r; ++j)
        s.coeffs[j - 1] = static_cast<long>(j) <= dq ? -g.den.coeff(j) : GaussianRational();
    s.initial = ogf_series(g, r == 0 ? 0 : r - 1);
    s.initial.resize(r);

    const std::size_t check = 3 * static_cast<std::size_t>(dq > 0 ? dq : 0) + 3;
    if (gen_terms(s, check) != ogf_series(g, check))
        throw verification_failure("recurrence does not match the generating function");
    return s;
}

} // namespace linrec
