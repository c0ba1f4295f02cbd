#pragma once

#include <string>
#include <utility>
#include <vector>

#include "linrec/scalar.hpp"

namespace linrec {

/// Dense univariate polynomial over Q(i), coefficients ascending, trailing
/// zeros stripped. The zero polynomial has an empty coefficient vector.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial constant(GaussianRational v) {
        return Polynomial(std::vector<GaussianRational>{std::move(v)});
    }
    static Polynomial monomial(std::size_t k, GaussianRational coeff = GaussianRational(1)) {
        std::vector<GaussianRational> c(k + 1);
        c[k] = std::move(coeff);
        return Polynomial(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }

    GaussianRational coeff(std::size_t k) const {
        return k < c_.size() ? c_[k] : GaussianRational();
    }
    const std::vector<GaussianRational>& coeffs() const { return c_; }

    GaussianRational leading() const { return is_zero() ? GaussianRational() : c_.back(); }

    Polynomial& operator+=(const Polynomial& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        trim();
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { a += b; return a; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { a -= b; return a; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<GaussianRational> out(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(out));
    }

    Polynomial& operator*=(const GaussianRational& s) {
        for (auto& c : c_) c *= s;
        trim();
        return *this;
    }
    friend Polynomial operator*(Polynomial a, const GaussianRational& s) { a *= s; return a; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    GaussianRational eval(const GaussianRational& x) const {
        GaussianRational acc;
        for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
        return acc;
    }

    /// Long division: *this = q*d + r with deg r < deg d. d must be nonzero.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
        if (d.is_zero()) throw division_by_zero();
        Polynomial rem = *this;
        if (rem.degree() < d.degree()) return {Polynomial(), rem};
        std::vector<GaussianRational> q(rem.c_.size() - d.c_.size() + 1);
        GaussianRational lead_inv = GaussianRational(1) / d.leading();
        while (!rem.is_zero() && rem.degree() >= d.degree()) {
            std::size_t shift = static_cast<std::size_t>(rem.degree() - d.degree());
            GaussianRational factor = rem.leading() * lead_inv;
            q[shift] = factor;
            for (std::size_t k = 0; k < d.c_.size(); ++k) rem.c_[k + shift] -= factor * d.c_[k];
            rem.trim();
        }
        return {Polynomial(std::move(q)), rem};
    }

    /// Quotient by an exact divisor; remainder must vanish.
    Polynomial divexact(const Polynomial& d) const {
        auto [q, r] = divmod(d);
        if (!r.is_zero()) throw verification_failure("inexact polynomial division");
        return q;
    }

    Polynomial monic() const {
        if (is_zero()) return {};
        Polynomial p = *this;
        GaussianRational inv = GaussianRational(1) / leading();
        for (auto& c : p.c_) c *= inv;
        return p;
    }

    std::string str(const std::string& var = "Z") const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (c_[k].is_zero()) continue;
            GaussianRational c = c_[k];
            bool negative = c.str().front() == '-';
            if (negative) c = -c;
            if (out.empty()) {
                if (negative) out += "-";
            } else {
                out += negative ? " - " : " + ";
            }
            std::string cs = c.str();
            bool composite = cs.find('+') != std::string::npos ||
                             cs.find('-', 1) != std::string::npos;
            if (k == 0) {
                out += composite ? "(" + cs + ")" : cs;
            } else {
                if (cs != "1") out += (composite ? "(" + cs + ")" : cs) + "*";
                out += var;
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<GaussianRational> c_;
};

/// Monic gcd via the Euclidean algorithm; gcd(0, 0) = 0.
inline Polynomial poly_gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

} // namespace linrec
