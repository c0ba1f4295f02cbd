#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "linrec/polynomial.hpp"
#include "linrec/scalar.hpp"

namespace linrec {

namespace detail {

// Gaussian integer a + b*i.
struct GInt {
    mpz_class a, b;
};

inline mpz_class gnorm(const GInt& z) { return z.a * z.a + z.b * z.b; }

inline GInt gmul(const GInt& x, const GInt& y) {
    return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a};
}

inline bool gdiv_exact(const GInt& z, const GInt& d, GInt& quot) {
    mpz_class n = gnorm(d);
    mpz_class qa = z.a * d.a + z.b * d.b;
    mpz_class qb = z.b * d.a - z.a * d.b;
    if (!mpz_divisible_p(qa.get_mpz_t(), n.get_mpz_t())) return false;
    if (!mpz_divisible_p(qb.get_mpz_t(), n.get_mpz_t())) return false;
    quot = {qa / n, qb / n};
    return true;
}

inline std::map<mpz_class, unsigned long> trial_factor(mpz_class n) {
    std::map<mpz_class, unsigned long> out;
    for (mpz_class p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
            ++out[p];
            n /= p;
        }
    }
    if (n > 1) ++out[n];
    return out;
}

inline unsigned long gmultiplicity(GInt& z, const GInt& prime) {
    unsigned long m = 0;
    GInt q;
    while (gdiv_exact(z, prime, q)) {
        z = q;
        ++m;
    }
    return m;
}

// Gaussian prime factorization up to units.
inline std::vector<std::pair<GInt, unsigned long>> gaussian_factor(GInt z) {
    std::vector<std::pair<GInt, unsigned long>> out;
    for (const auto& [p, e] : trial_factor(gnorm(z))) {
        if (p == 2) {
            GInt pi{1, 1};
            unsigned long m = gmultiplicity(z, pi);
            if (m > 0) out.emplace_back(pi, m);
        } else if (mpz_class(p % 4) == 3) {
            GInt pi{p, 0};
            unsigned long m = gmultiplicity(z, pi);
            if (m > 0) out.emplace_back(pi, m);
        } else {
            // split prime: find a^2 + b^2 = p
            mpz_class a = 1, bsq, b;
            for (;; ++a) {
                bsq = p - a * a;
                if (mpz_perfect_square_p(bsq.get_mpz_t())) break;
            }
            mpz_sqrt(b.get_mpz_t(), bsq.get_mpz_t());
            GInt pi{a, b}, pibar{a, -b};
            unsigned long m1 = gmultiplicity(z, pi);
            unsigned long m2 = gmultiplicity(z, pibar);
            if (m1 > 0) out.emplace_back(pi, m1);
            if (m2 > 0) out.emplace_back(pibar, m2);
        }
    }
    return out;
}

// All divisors of z up to units; z must be nonzero.
inline std::vector<GInt> gaussian_divisors(const GInt& z) {
    std::vector<GInt> divs{GInt{1, 0}};
    for (const auto& [prime, mult] : gaussian_factor(z)) {
        std::vector<GInt> next;
        next.reserve(divs.size() * (mult + 1));
        for (const auto& d : divs) {
            GInt cur = d;
            next.push_back(cur);
            for (unsigned long j = 0; j < mult; ++j) {
                cur = gmul(cur, prime);
                next.push_back(cur);
            }
        }
        divs = std::move(next);
    }
    return divs;
}

} // namespace detail

struct RootList {
    std::vector<std::pair<GaussianRational, unsigned long>> roots; // (root, multiplicity)
    Polynomial residual; // root-free over Q(i); constant iff the input splits
};

/// All roots of p in Q(i) with multiplicities, by candidate search over
/// Gaussian-integer divisor ratios of the cleared constant and leading
/// coefficients, with repeated exact deflation. No floating point anywhere.
inline RootList gaussian_rational_roots(Polynomial p) {
    if (p.is_zero()) throw zero_element();
    RootList out;

    // roots at zero
    unsigned long zero_mult = 0;
    while (p.degree() > 0 && p.coeff(0).is_zero()) {
        std::vector<GaussianRational> shifted(p.coeffs().begin() + 1, p.coeffs().end());
        p = Polynomial(std::move(shifted));
        ++zero_mult;
    }
    if (zero_mult > 0) out.roots.emplace_back(GaussianRational(), zero_mult);
    if (p.degree() <= 0) {
        out.residual = p;
        return out;
    }

    // clear denominators to Z[i]
    mpz_class lcm = 1;
    for (const auto& c : p.coeffs()) {
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.re().den().get_mpz_t());
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.im().den().get_mpz_t());
    }
    auto cleared = [&](const GaussianRational& c) {
        return detail::GInt{c.re().num() * (lcm / c.re().den()), c.im().num() * (lcm / c.im().den())};
    };
    detail::GInt constant = cleared(p.coeff(0));
    detail::GInt leading = cleared(p.leading());

    std::set<GaussianRational, ScalarLex> candidates;
    for (const auto& d : detail::gaussian_divisors(constant)) {
        for (const auto& e : detail::gaussian_divisors(leading)) {
            Rational n{detail::gnorm(e)};
            GaussianRational base{Rational(d.a * e.a + d.b * e.b) / n,
                                  Rational(d.b * e.a - d.a * e.b) / n};
            GaussianRational rotated = base;
            for (int unit = 0; unit < 4; ++unit) {
                candidates.insert(rotated);
                rotated *= GaussianRational::i();
            }
        }
    }

    for (const auto& lambda : candidates) {
        if (p.degree() <= 0) break;
        unsigned long mult = 0;
        while (p.degree() > 0 && p.eval(lambda).is_zero()) {
            Polynomial linear(std::vector<GaussianRational>{-lambda, GaussianRational(1)});
            p = p.divexact(linear);
            ++mult;
        }
        if (mult > 0) out.roots.emplace_back(lambda, mult);
    }

    out.residual = p;
    return out;
}

} // namespace linrec
