#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>
#include <utility>

#include "linrec/errors.hpp"

namespace linrec {

/// Arbitrary-precision rational, always reduced, denominator > 0, zero is 0/1.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {} // NOLINT: implicit from integers is intended
    Rational(const mpz_class& n) : q_(n) {}
    Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
        if (den == 0) throw division_by_zero();
        q_.canonicalize();
    }
    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }

    bool is_zero() const { return q_ == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw division_by_zero();
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    Rational operator-() const { Rational r; r.q_ = -q_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    /// Canonical text: "n" or "n/d", e.g. "-3/4".
    std::string str() const { return q_.get_str(); }

private:
    mpq_class q_;
};

/// Element of Q(i): re + im*i with exact rational components.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(Rational re) : re_(std::move(re)) {} // NOLINT
    GaussianRational(long n) : re_(n) {}                  // NOLINT
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussianRational conj() const { return {re_, -im_}; }

    /// re^2 + im^2, the field norm down to Q.
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational m = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(m);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        if (o.is_zero()) throw division_by_zero();
        Rational n = o.norm();
        GaussianRational c = o.conj();
        *this *= c;
        re_ /= n;
        im_ /= n;
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { a += b; return a; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { a -= b; return a; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { a *= b; return a; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { a /= b; return a; }
    GaussianRational operator-() const { return {-re_, -im_}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    /// Minimal canonical text: "0", "-2", "1/2+2/3i", "i", "1-i".
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        if (!re_.is_zero()) out += re_.str();
        if (!im_.is_zero()) {
            if (!re_.is_zero() && im_.sign() > 0) out += '+';
            if (im_ == Rational(1)) out += "i";
            else if (im_ == Rational(-1)) out += "-i";
            else out += im_.str() + "i";
        }
        return out;
    }

private:
    Rational re_, im_;
};

/// Lexicographic order on (re, im); a structural order for containers and
/// canonical output, not a field order.
struct ScalarLex {
    bool operator()(const GaussianRational& a, const GaussianRational& b) const {
        if (a.re() != b.re()) return a.re() < b.re();
        return a.im() < b.im();
    }
};

inline GaussianRational pow(const GaussianRational& base, unsigned long e) {
    GaussianRational result(1);
    GaussianRational b = base;
    while (e > 0) {
        if (e & 1UL) result *= b;
        b *= b;
        e >>= 1UL;
    }
    return result;
}

inline mpz_class factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

/// n*(n-1)*...*(n-k+1) as an exact integer, for any integer n.
inline mpz_class falling_factorial(const mpz_class& n, unsigned long k) {
    mpz_class p = 1;
    for (unsigned long j = 0; j < k; ++j) p *= n - static_cast<long>(j);
    return p;
}

/// Generalized binomial coefficient C(n, d) = n(n-1)...(n-d+1)/d! for any
/// integer n; C(n, 0) = 1.
inline Rational gen_binomial(const mpz_class& n, unsigned long d) {
    return Rational(falling_factorial(n, d), factorial(d));
}

inline Rational gen_binomial(long n, unsigned long d) { return gen_binomial(mpz_class(n), d); }

namespace detail {

struct ScalarParser {
    std::string_view text;
    std::size_t pos = 0;

    bool at_end() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, pos); }

    mpz_class digits() {
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digit");
        std::size_t start = pos;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
        return mpz_class(std::string(text.substr(start, pos - start)), 10);
    }

    // sign? ('i' | int ('/' posint)? 'i'?)
    std::pair<Rational, bool> term() {
        int sign = 1;
        if (!at_end() && (peek() == '+' || peek() == '-')) {
            if (peek() == '-') sign = -1;
            ++pos;
        }
        if (!at_end() && peek() == 'i') {
            ++pos;
            return {Rational(sign), true};
        }
        mpz_class num = digits();
        mpz_class den = 1;
        if (!at_end() && peek() == '/') {
            ++pos;
            std::size_t den_pos = pos;
            den = digits();
            if (den == 0) throw parse_error("denominator must be positive", den_pos);
        }
        Rational value(sign < 0 ? mpz_class(-num) : num, den);
        if (!at_end() && peek() == 'i') {
            ++pos;
            return {value, true};
        }
        return {value, false};
    }

    GaussianRational parse() {
        auto [first, first_imag] = term();
        if (at_end()) {
            return first_imag ? GaussianRational(Rational(0), first) : GaussianRational(first);
        }
        if (first_imag) fail("unexpected trailing characters");
        if (peek() != '+' && peek() != '-') fail("expected '+' or '-' before imaginary part");
        auto [second, second_imag] = term();
        if (!second_imag) fail("expected 'i' after imaginary part");
        if (!at_end()) fail("unexpected trailing characters");
        return {first, second};
    }
};

} // namespace detail

/// Parse the canonical scalar grammar; parse(x.str()) == x for all x.
inline GaussianRational parse_scalar(std::string_view text) {
    detail::ScalarParser p{text};
    return p.parse();
}

} // namespace linrec
