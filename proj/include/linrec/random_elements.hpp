#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "linrec/filtration.hpp"
#include "linrec/normal_form.hpp"
#include "linrec/scalar.hpp"
#include "linrec/sequence.hpp"

namespace linrec {

/// Deterministic generator for test instances. Sampling avoids
/// std::uniform_int_distribution so streams are identical across platforms.
class InstanceGen {
public:
    explicit InstanceGen(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next(std::uint64_t bound) { return bound == 0 ? 0 : eng_() % bound; }
    long next_int(long lo, long hi) { // inclusive
        return lo + static_cast<long>(next(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    Rational rational(long max_abs_num = 4, long max_den = 3) {
        return {next_int(-max_abs_num, max_abs_num), next_int(1, max_den)};
    }

    GaussianRational scalar(long max_abs_num = 4, long max_den = 3) {
        return {rational(max_abs_num, max_den), rational(max_abs_num, max_den)};
    }

    GaussianRational nonzero_scalar(long max_abs_num = 4, long max_den = 3) {
        for (;;) {
            GaussianRational s = scalar(max_abs_num, max_den);
            if (!s.is_zero()) return s;
        }
    }

    /// Evaluation points on a half-integer grid: a/2 + b/2 i, |a|,|b| <= max_abs.
    GaussianRational lambda(bool allow_imaginary = true, long max_abs = 4) {
        Rational re{next_int(-max_abs, max_abs), 2};
        Rational im = allow_imaginary ? Rational{next_int(-max_abs, max_abs), 2} : Rational(0);
        return {re, im};
    }

    NormalForm normal_form(std::size_t max_support, unsigned long max_k,
                           bool allow_imaginary = true) {
        NormalForm f;
        std::size_t n = 1 + next(max_support);
        for (std::size_t j = 0; j < n; ++j)
            f.add_term(next(max_k + 1), lambda(allow_imaginary), scalar());
        return f;
    }

    NormalForm nonzero_normal_form(std::size_t max_support, unsigned long max_k,
                                   bool allow_imaginary = true) {
        for (;;) {
            NormalForm f = normal_form(max_support, max_k, allow_imaginary);
            if (!f.is_zero()) return f;
        }
    }

    GroupAlgebraElement group_element(std::size_t max_support, bool allow_imaginary,
                                      long max_abs = 4) {
        GroupAlgebraElement g;
        std::size_t n = 1 + next(max_support);
        for (std::size_t j = 0; j < n; ++j) g.add_term(lambda(allow_imaginary, max_abs), scalar());
        return g;
    }

    /// Instances for the two membership oracles: small coordinate spread so
    /// the brute-force search box stays modest. Half are plain elements,
    /// half products of augmentation-ideal generators, so that memberships
    /// of depth > 1 actually occur.
    GroupAlgebraElement membership_instance(bool allow_imaginary) {
        if (next(2) == 0) return group_element(4, allow_imaginary, 2);
        GroupAlgebraElement acc =
            GroupAlgebraElement::group_like(lambda(allow_imaginary, 1)) -
            GroupAlgebraElement::group_like(GaussianRational());
        if (next(2) == 0) {
            GroupAlgebraElement gen =
                GroupAlgebraElement::group_like(lambda(allow_imaginary, 1)) -
                GroupAlgebraElement::group_like(GaussianRational());
            acc = acc * gen;
        }
        return acc;
    }

    RecurrenceSequence recurrence(std::size_t max_order) {
        RecurrenceSequence s;
        std::size_t r = 1 + next(max_order);
        s.coeffs.reserve(r);
        s.initial.reserve(r);
        for (std::size_t j = 0; j < r; ++j) {
            s.coeffs.push_back(scalar(3, 2));
            s.initial.push_back(scalar(3, 2));
        }
        return s;
    }

private:
    std::mt19937_64 eng_;
};

} // namespace linrec
