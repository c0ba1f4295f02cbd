#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "linrec/linalg.hpp"
#include "linrec/polynomial.hpp"
#include "linrec/roots.hpp"
#include "linrec/scalar.hpp"
#include "linrec/sequence.hpp"

namespace linrec {

class TensorSum;

/// Element of the normal-form algebra: a finite linear combination of basis
/// functionals indexed by (k, lambda), where the (k, lambda) functional sends
/// X^n to n(n-1)...(n-k+1) * lambda^(n-k), with 0^0 = 1. The key (0, lambda)
/// is the group-like evaluation at lambda (the geometric sequence lambda^n);
/// (k, 0) is the k-th power of the distinguished primitive functional
/// X^n -> delta_{n,1}. Stored coefficients are never zero; the zero element
/// has empty support.
class NormalForm {
public:
    struct Key {
        unsigned long k;
        GaussianRational lambda;
        friend bool operator==(const Key& a, const Key& b) {
            return a.k == b.k && a.lambda == b.lambda;
        }
    };
    struct KeyLess {
        bool operator()(const Key& a, const Key& b) const {
            if (a.k != b.k) return a.k < b.k;
            return ScalarLex{}(a.lambda, b.lambda);
        }
    };
    using Support = std::map<Key, GaussianRational, KeyLess>;

    NormalForm() = default;

    static NormalForm basis(unsigned long k, GaussianRational lambda,
                            GaussianRational coeff = GaussianRational(1)) {
        NormalForm f;
        f.add_term(k, std::move(lambda), std::move(coeff));
        return f;
    }
    /// Algebra map X -> lambda; the sequence (lambda^n).
    static NormalForm group_like(GaussianRational lambda) { return basis(0, std::move(lambda)); }
    /// k-th convolution power of the primitive functional X^n -> delta_{n,1}.
    static NormalForm primitive_power(unsigned long k) { return basis(k, GaussianRational()); }
    /// The unit: evaluation at X = 0, i.e. the counit of the polynomial algebra.
    static NormalForm one() { return basis(0, GaussianRational()); }

    const Support& support() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(unsigned long k, GaussianRational lambda, const GaussianRational& coeff) {
        if (coeff.is_zero()) return;
        Key key{k, std::move(lambda)};
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(std::move(key), coeff);
        } else {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    /// Value of the basis functional (k, lambda) on X^n.
    static GaussianRational basis_eval(unsigned long k, const GaussianRational& lambda,
                                       unsigned long n) {
        if (n < k) return {};
        GaussianRational fall{Rational(falling_factorial(mpz_class(n), k))};
        return fall * pow(lambda, n - k);
    }

    /// Value on X^n.
    GaussianRational eval(unsigned long n) const {
        GaussianRational acc;
        for (const auto& [key, coeff] : terms_) acc += coeff * basis_eval(key.k, key.lambda, n);
        return acc;
    }

    /// Value on e_n = X^n/n!; these are the coefficients of the exponential
    /// generating series.
    GaussianRational eval_divided(unsigned long n) const {
        return eval(n) / GaussianRational(Rational(factorial(n)));
    }

    /// The augmentation f -> f(1); equals eval(0).
    GaussianRational counit() const {
        GaussianRational acc;
        for (const auto& [key, coeff] : terms_)
            if (key.k == 0) acc += coeff;
        return acc;
    }

    NormalForm& operator+=(const NormalForm& o) {
        for (const auto& [key, coeff] : o.terms_) add_term(key.k, key.lambda, coeff);
        return *this;
    }
    NormalForm& operator-=(const NormalForm& o) {
        for (const auto& [key, coeff] : o.terms_) add_term(key.k, key.lambda, -coeff);
        return *this;
    }
    friend NormalForm operator+(NormalForm a, const NormalForm& b) { a += b; return a; }
    friend NormalForm operator-(NormalForm a, const NormalForm& b) { a -= b; return a; }

    NormalForm& operator*=(const GaussianRational& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [key, coeff] : terms_) coeff *= s;
        return *this;
    }
    friend NormalForm operator*(NormalForm a, const GaussianRational& s) { a *= s; return a; }
    friend NormalForm operator*(const GaussianRational& s, NormalForm a) { a *= s; return a; }

    /// Convolution product; on basis keys (k, l) * (k', l') = (k + k', l + l').
    friend NormalForm operator*(const NormalForm& a, const NormalForm& b) {
        NormalForm out;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                out.add_term(ka.k + kb.k, ka.lambda + kb.lambda, ca * cb);
        return out;
    }

    friend bool operator==(const NormalForm& a, const NormalForm& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const NormalForm& a, const NormalForm& b) { return !(a == b); }

    /// Precomposition with X -> -X; on basis keys (k, l) -> (-1)^k (k, -l).
    NormalForm antipode() const {
        NormalForm out;
        for (const auto& [key, coeff] : terms_)
            out.add_term(key.k, -key.lambda, key.k % 2 == 0 ? coeff : -coeff);
        return out;
    }

    TensorSum comultiply() const;

    /// Head of the primitive-power expansion: sum_{k<n} f(e_k) * (k, 0).
    /// The difference f - truncate(f, n) vanishes on e_0..e_{n-1}.
    NormalForm truncate(unsigned long n) const {
        NormalForm out;
        for (unsigned long k = 0; k < n; ++k)
            out.add_term(k, GaussianRational(), eval_divided(k));
        return out;
    }

    /// Sum over distinct lambda of (max k at lambda) + 1: the dimension of the
    /// smallest recurrence space containing this element, and a strict bound
    /// on where a nonzero element can first evaluate nonzero.
    std::size_t order_bound() const {
        std::map<GaussianRational, unsigned long, ScalarLex> max_k;
        for (const auto& [key, coeff] : terms_) {
            auto [it, inserted] = max_k.emplace(key.lambda, key.k);
            if (!inserted && key.k > it->second) it->second = key.k;
        }
        std::size_t d = 0;
        for (const auto& [lambda, k] : max_k) d += k + 1;
        return d;
    }

    static NormalForm from_recurrence(const RecurrenceSequence& s);
    RecurrenceSequence to_recurrence() const;

private:
    Support terms_;
};

/// Finite formal sum of basis-key pairs with nonzero coefficients; the image
/// of comultiplication.
class TensorSum {
public:
    using Key = NormalForm::Key;
    struct PairLess {
        bool operator()(const std::pair<Key, Key>& a, const std::pair<Key, Key>& b) const {
            NormalForm::KeyLess less;
            if (less(a.first, b.first)) return true;
            if (less(b.first, a.first)) return false;
            return less(a.second, b.second);
        }
    };
    using Support = std::map<std::pair<Key, Key>, GaussianRational, PairLess>;

    void add_term(const Key& left, const Key& right, const GaussianRational& coeff) {
        if (coeff.is_zero()) return;
        auto key = std::make_pair(left, right);
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(std::move(key), coeff);
        } else {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    const Support& support() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend bool operator==(const TensorSum& a, const TensorSum& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const TensorSum& a, const TensorSum& b) { return !(a == b); }

private:
    Support terms_;
};

/// Comultiplication, determined by f(pq) = sum f_1(p) f_2(q): group-likes map
/// to g (x) g, the primitive generator to x (x) 1 + 1 (x) x, so on a basis key
/// (k, l) it is sum_j C(k,j) (j, l) (x) (k-j, l).
inline TensorSum NormalForm::comultiply() const {
    TensorSum out;
    for (const auto& [key, coeff] : terms_) {
        for (unsigned long j = 0; j <= key.k; ++j) {
            mpz_class binom;
            mpz_bin_uiui(binom.get_mpz_t(), key.k, j);
            out.add_term(Key{j, key.lambda}, Key{key.k - j, key.lambda},
                         coeff * GaussianRational(Rational(binom)));
        }
    }
    return out;
}

/// Exact normal form of a recurrent sequence. The characteristic polynomial
/// x^r - c_1 x^{r-1} - ... - c_r must split over Q(i); a root lambda of
/// multiplicity m contributes candidate keys (0..m-1, lambda), and the
/// coefficients are fixed by the first r terms through a confluent
/// Vandermonde system. The result is checked against 2r+4 generated terms.
inline NormalForm NormalForm::from_recurrence(const RecurrenceSequence& s) {
    s.check();
    const std::size_t r = s.order();
    if (r == 0) return {};

    std::vector<GaussianRational> char_coeffs(r + 1);
    char_coeffs[r] = GaussianRational(1);
    for (std::size_t j = 1; j <= r; ++j) char_coeffs[r - j] = -s.coeffs[j - 1];
    RootList roots = gaussian_rational_roots(Polynomial(std::move(char_coeffs)));
    if (roots.residual.degree() > 0) throw non_split_char_poly(roots.residual.str("x"));

    std::vector<Key> keys;
    keys.reserve(r);
    for (const auto& [lambda, mult] : roots.roots)
        for (unsigned long k = 0; k < mult; ++k) keys.push_back(Key{k, lambda});

    Matrix m(r, std::vector<GaussianRational>(r));
    for (std::size_t n = 0; n < r; ++n)
        for (std::size_t c = 0; c < r; ++c)
            m[n][c] = basis_eval(keys[c].k, keys[c].lambda, n);
    std::vector<GaussianRational> coeffs = fraction_free_solve(std::move(m), s.initial);

    NormalForm f;
    for (std::size_t c = 0; c < r; ++c) f.add_term(keys[c].k, keys[c].lambda, coeffs[c]);

    TermVector expected = gen_terms(s, 2 * r + 3);
    for (std::size_t n = 0; n < expected.size(); ++n)
        if (f.eval(n) != expected[n])
            throw verification_failure("normal form does not reproduce the sequence terms");
    return f;
}

/// Inverse conversion: characteristic polynomial prod (x - lambda)^(K+1) over
/// the supported lambdas, initial terms by evaluation. Throws zero_element on
/// the zero element, which has no recurrence of well-defined minimal order.
inline RecurrenceSequence NormalForm::to_recurrence() const {
    if (is_zero()) throw zero_element();
    std::map<GaussianRational, unsigned long, ScalarLex> max_k;
    for (const auto& [key, coeff] : terms_) {
        auto [it, inserted] = max_k.emplace(key.lambda, key.k);
        if (!inserted && key.k > it->second) it->second = key.k;
    }
    Polynomial char_poly = Polynomial::constant(GaussianRational(1));
    for (const auto& [lambda, top_k] : max_k) {
        Polynomial linear(std::vector<GaussianRational>{-lambda, GaussianRational(1)});
        for (unsigned long j = 0; j <= top_k; ++j) char_poly = char_poly * linear;
    }
    const std::size_t r = static_cast<std::size_t>(char_poly.degree());
    RecurrenceSequence s;
    s.coeffs.resize(r);
    s.initial.resize(r);
    for (std::size_t j = 1; j <= r; ++j) s.coeffs[j - 1] = -char_poly.coeff(r - j);
    for (std::size_t n = 0; n < r; ++n) s.initial[n] = eval(n);
    return s;
}

} // namespace linrec
