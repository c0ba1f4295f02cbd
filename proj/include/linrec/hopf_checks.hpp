#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "linrec/normal_form.hpp"
#include "linrec/scalar.hpp"

namespace linrec {

namespace detail {

using Key = NormalForm::Key;

struct TripleLess {
    bool operator()(const std::tuple<Key, Key, Key>& a, const std::tuple<Key, Key, Key>& b) const {
        NormalForm::KeyLess less;
        if (less(std::get<0>(a), std::get<0>(b))) return true;
        if (less(std::get<0>(b), std::get<0>(a))) return false;
        if (less(std::get<1>(a), std::get<1>(b))) return true;
        if (less(std::get<1>(b), std::get<1>(a))) return false;
        return less(std::get<2>(a), std::get<2>(b));
    }
};

using TripleSum = std::map<std::tuple<Key, Key, Key>, GaussianRational, TripleLess>;

inline void triple_add(TripleSum& sum, const Key& a, const Key& b, const Key& c,
                       const GaussianRational& coeff) {
    if (coeff.is_zero()) return;
    auto key = std::make_tuple(a, b, c);
    auto it = sum.find(key);
    if (it == sum.end()) {
        sum.emplace(std::move(key), coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) sum.erase(it);
    }
}

inline TensorSum comultiply_key(const Key& key) {
    return NormalForm::basis(key.k, key.lambda).comultiply();
}

} // namespace detail

/// (Delta (x) id) Delta f == (id (x) Delta) Delta f, compared exactly.
inline bool check_coassociativity(const NormalForm& f) {
    detail::TripleSum lhs, rhs;
    const TensorSum delta = f.comultiply();
    for (const auto& [pair, coeff] : delta.support()) {
        const TensorSum left = detail::comultiply_key(pair.first);
        for (const auto& [inner, inner_coeff] : left.support())
            detail::triple_add(lhs, inner.first, inner.second, pair.second, coeff * inner_coeff);
        const TensorSum right = detail::comultiply_key(pair.second);
        for (const auto& [inner, inner_coeff] : right.support())
            detail::triple_add(rhs, pair.first, inner.first, inner.second, coeff * inner_coeff);
    }
    return lhs == rhs;
}

/// (counit (x) id) Delta f == f == (id (x) counit) Delta f.
inline bool check_counit_law(const NormalForm& f) {
    NormalForm left, right;
    const TensorSum delta = f.comultiply();
    for (const auto& [pair, coeff] : delta.support()) {
        GaussianRational eps_l = NormalForm::basis(pair.first.k, pair.first.lambda).counit();
        GaussianRational eps_r = NormalForm::basis(pair.second.k, pair.second.lambda).counit();
        left.add_term(pair.second.k, pair.second.lambda, coeff * eps_l);
        right.add_term(pair.first.k, pair.first.lambda, coeff * eps_r);
    }
    return left == f && right == f;
}

/// mult (antipode (x) id) Delta f == counit(f) * unit.
inline bool check_antipode_law(const NormalForm& f) {
    NormalForm acc;
    const TensorSum delta = f.comultiply();
    for (const auto& [pair, coeff] : delta.support()) {
        NormalForm piece = NormalForm::basis(pair.first.k, pair.first.lambda).antipode() *
                           NormalForm::basis(pair.second.k, pair.second.lambda);
        acc += piece * coeff;
    }
    return acc == NormalForm::one() * f.counit();
}

/// Defining property of the comultiplication: f(X^(a+b)) equals
/// sum f_1(X^a) f_2(X^b) for every monomial pair with a + b <= max_total.
inline bool check_eval_duality(const NormalForm& f, unsigned long max_total) {
    TensorSum delta = f.comultiply();
    for (unsigned long a = 0; a <= max_total; ++a) {
        for (unsigned long b = 0; a + b <= max_total; ++b) {
            GaussianRational sum;
            for (const auto& [pair, coeff] : delta.support())
                sum += coeff * NormalForm::basis_eval(pair.first.k, pair.first.lambda, a) *
                       NormalForm::basis_eval(pair.second.k, pair.second.lambda, b);
            if (sum != f.eval(a + b)) return false;
        }
    }
    return true;
}

} // namespace linrec
