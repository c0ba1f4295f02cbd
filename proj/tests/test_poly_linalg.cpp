#include <catch2/catch.hpp>

#include "linrec/linalg.hpp"
#include "linrec/polynomial.hpp"
#include "linrec/random_elements.hpp"
#include "linrec/roots.hpp"

using namespace linrec;

namespace {

Polynomial poly(std::initializer_list<long> coeffs) {
    std::vector<GaussianRational> c;
    for (long v : coeffs) c.emplace_back(v);
    return Polynomial(std::move(c));
}

} // namespace

TEST_CASE("polynomial arithmetic basics") {
    Polynomial p = poly({1, 2});      // 1 + 2x
    Polynomial q = poly({0, 0, 3});   // 3x^2
    REQUIRE((p * q).degree() == 3);
    REQUIRE((p * q).coeff(2) == GaussianRational(3));
    REQUIRE((p * q).coeff(3) == GaussianRational(6));
    REQUIRE((p - p).is_zero());
    REQUIRE(p.eval(GaussianRational(2)) == GaussianRational(5));
}

TEST_CASE("division and gcd") {
    Polynomial a = poly({-1, 0, 1}); // x^2 - 1
    Polynomial b = poly({1, 1});     // x + 1
    auto [q, r] = a.divmod(b);
    REQUIRE(r.is_zero());
    REQUIRE(q == poly({-1, 1}));
    REQUIRE(poly_gcd(a, b) == b.monic());

    InstanceGen gen(3);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<GaussianRational> cf, cg;
        for (int i = 0; i < 4; ++i) cf.push_back(gen.scalar(3, 2));
        for (int i = 0; i < 3; ++i) cg.push_back(gen.scalar(3, 2));
        Polynomial f{std::move(cf)}, g{std::move(cg)};
        if (g.is_zero()) continue;
        auto [quot, rem] = f.divmod(g);
        REQUIRE(quot * g + rem == f);
        REQUIRE(rem.degree() < g.degree());
    }
}

TEST_CASE("fraction-free solve recovers known solutions") {
    InstanceGen gen(5);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t n = 1 + gen.next(4);
        Matrix a(n, std::vector<GaussianRational>(n));
        std::vector<GaussianRational> x(n);
        for (auto& v : x) v = gen.scalar();
        for (auto& row : a)
            for (auto& entry : row) entry = gen.scalar(2, 2);
        std::vector<GaussianRational> b(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) b[i] += a[i][j] * x[j];
        try {
            std::vector<GaussianRational> got = fraction_free_solve(a, b);
            REQUIRE(got == x);
        } catch (const verification_failure&) {
            // singular random matrix: consistent system, nothing to check
        }
    }
}

TEST_CASE("consistency detection") {
    Matrix a{{GaussianRational(1), GaussianRational(2)},
             {GaussianRational(2), GaussianRational(4)}};
    REQUIRE(is_consistent(a, {GaussianRational(3), GaussianRational(6)}));
    REQUIRE_FALSE(is_consistent(a, {GaussianRational(3), GaussianRational(7)}));
    // more rows than columns
    Matrix tall{{GaussianRational(1)}, {GaussianRational(1)}};
    REQUIRE(is_consistent(tall, {GaussianRational(5), GaussianRational(5)}));
    REQUIRE_FALSE(is_consistent(tall, {GaussianRational(5), GaussianRational(4)}));
}

namespace {

Polynomial linear_factor(const GaussianRational& root) {
    return Polynomial(std::vector<GaussianRational>{-root, GaussianRational(1)});
}

} // namespace

TEST_CASE("gaussian rational roots with multiplicities") {
    GaussianRational i = GaussianRational::i();
    Polynomial p = linear_factor(GaussianRational(2)) * linear_factor(GaussianRational(2)) *
                   linear_factor(i);
    RootList roots = gaussian_rational_roots(p);
    REQUIRE(roots.residual.degree() == 0);
    REQUIRE(roots.roots.size() == 2);
    unsigned long found = 0;
    for (const auto& [root, mult] : roots.roots) {
        if (root == GaussianRational(2)) REQUIRE(mult == 2);
        if (root == i) REQUIRE(mult == 1);
        found += mult;
    }
    REQUIRE(found == 3);
}

TEST_CASE("roots at zero and rational roots") {
    // x^3 * (2x - 1) = -x^3 + 2x^4 scaled
    Polynomial p = Polynomial::monomial(3) * poly({-1, 2});
    RootList roots = gaussian_rational_roots(p);
    REQUIRE(roots.residual.degree() == 0);
    bool saw_zero = false, saw_half = false;
    for (const auto& [root, mult] : roots.roots) {
        if (root == GaussianRational()) {
            saw_zero = true;
            REQUIRE(mult == 3);
        }
        if (root == GaussianRational(Rational(1, 2))) {
            saw_half = true;
            REQUIRE(mult == 1);
        }
    }
    REQUIRE(saw_zero);
    REQUIRE(saw_half);
}

TEST_CASE("irreducible factors are reported, not forced") {
    Polynomial fib = poly({-1, -1, 1}); // x^2 - x - 1
    RootList roots = gaussian_rational_roots(fib);
    REQUIRE(roots.roots.empty());
    REQUIRE(roots.residual == fib);

    // one true root times a root-free quadratic
    Polynomial mixed = linear_factor(GaussianRational(3)) * fib;
    RootList partial = gaussian_rational_roots(mixed);
    REQUIRE(partial.roots.size() == 1);
    REQUIRE(partial.roots[0].first == GaussianRational(3));
    REQUIRE(partial.residual.monic() == fib);
}

TEST_CASE("random split polynomials are fully recovered") {
    InstanceGen gen(13);
    for (int trial = 0; trial < 15; ++trial) {
        std::map<GaussianRational, unsigned long, ScalarLex> expected;
        Polynomial p = Polynomial::constant(GaussianRational(1));
        std::size_t factors = 1 + gen.next(4);
        for (std::size_t j = 0; j < factors; ++j) {
            GaussianRational root{Rational(gen.next_int(-2, 2), gen.next_int(1, 2)),
                                  Rational(gen.next_int(-2, 2), gen.next_int(1, 2))};
            ++expected[root];
            p = p * linear_factor(root);
        }
        RootList roots = gaussian_rational_roots(p);
        REQUIRE(roots.residual.degree() == 0);
        std::map<GaussianRational, unsigned long, ScalarLex> got;
        for (const auto& [root, mult] : roots.roots) got[root] = mult;
        REQUIRE(got == expected);
    }
}
