// Acceptance suite: one line per criterion, PASS/FAIL, exit 0 iff all pass.
// Every bound and tolerance is fixed here; all checks are exact.

#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "linrec/cli.hpp"
#include "linrec/filtration.hpp"
#include "linrec/genfun.hpp"
#include "linrec/hopf_checks.hpp"
#include "linrec/json_io.hpp"
#include "linrec/normal_form.hpp"
#include "linrec/random_elements.hpp"
#include "linrec/sequence.hpp"

using namespace linrec;

namespace {

struct Criterion {
    int number;
    std::string title;
    std::function<void()> check; // throws on failure
};

struct failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
    if (!ok) throw failure(what);
}

// 1. Separation: witness --max-n 10 emits rows (n, ideg = n, jdeg = 1), exactly.
void criterion_separation() {
    CommandResult r = run({"witness", "--max-n", "10"});
    expect(r.exit_code == 0, "witness command failed");
    json expected = json::array();
    for (int n = 1; n <= 10; ++n) expected.push_back(json{{"n", n}, {"ideg", n}, {"jdeg", 1}});
    expect(r.payload == expected, "witness rows differ from (n, n, 1)");
    std::size_t lines = 1;
    for (char c : r.text)
        if (c == '\n') ++lines;
    expect(lines == 11, "witness table must print a header and 10 rows");
}

// 2. The pinned membership verdicts for group_like(1) - identity.
void criterion_membership_pin() {
    GroupAlgebraElement g = GroupAlgebraElement::group_like(GaussianRational(1)) -
                            GroupAlgebraElement::group_like(GaussianRational());
    expect(aug_power_member(g, 1), "generator must lie in the augmentation ideal");
    expect(!aug_power_member(g, 2), "generator must not lie in its square");
}

// 3. Witness identity: egf(w_n) = Z^n * h_n at order 20 for n = 1..6.
void criterion_witness_identity() {
    for (std::size_t n = 1; n <= 6; ++n) {
        PowerSeriesTrunc lhs = egf_trunc(witness_element(n), 20);
        PowerSeriesTrunc rhs = PowerSeriesTrunc::monomial(n, 20) * h_series(n, 20);
        expect(lhs == rhs, "series mismatch at n = " + std::to_string(n));
    }
}

// 4. Hopf axioms on 50 random elements with support <= 5; duality on all
//    monomial pairs with a + b <= 12.
void criterion_hopf_axioms() {
    InstanceGen gen(2024);
    for (int trial = 0; trial < 50; ++trial) {
        NormalForm f = gen.normal_form(5, 4);
        expect(check_coassociativity(f), "coassociativity failed");
        expect(check_counit_law(f), "counit law failed");
        expect(check_antipode_law(f), "antipode law failed");
        expect(check_eval_duality(f, 12), "comultiplication duality failed");
    }
}

// 5. Representation coherence: product vs binomial convolution on 40 terms,
//    multiplicativity of the exponential series at order 20, and the
//    generating-fraction identity to order 3r+3, 50 instances each.
void criterion_representation_coherence() {
    InstanceGen gen(2025);
    for (int trial = 0; trial < 50; ++trial) {
        NormalForm f = gen.normal_form(4, 3);
        NormalForm g = gen.normal_form(4, 3);
        NormalForm prod = f * g;
        TermVector tf(40), tg(40);
        for (std::size_t n = 0; n < 40; ++n) {
            tf[n] = f.eval(n);
            tg[n] = g.eval(n);
        }
        TermVector expect_terms = hurwitz_product(tf, tg);
        for (std::size_t n = 0; n < 40; ++n)
            expect(prod.eval(n) == expect_terms[n], "product/value-table mismatch");
        expect(egf_trunc(prod, 20) == egf_trunc(f, 20) * egf_trunc(g, 20),
               "exponential series is not multiplicative");
    }
    for (int trial = 0; trial < 50; ++trial) {
        RecurrenceSequence s = gen.recurrence(6);
        RationalOGF g = ogf_from_recurrence(s);
        std::size_t bound = 3 * s.order() + 3;
        TermVector terms = gen_terms(s, bound);
        for (std::size_t n = 0; n <= bound; ++n) {
            GaussianRational acc;
            for (std::size_t i = 0; i <= n && static_cast<long>(i) <= g.den.degree(); ++i)
                acc += g.den.coeff(i) * terms[n - i];
            expect(acc == g.num.coeff(n), "fraction identity q*S = p failed");
        }
    }
}

// 6. The moment test agrees with the brute-force linear-algebra oracle on 100
//    instances with support <= 4, lattice rank <= 2, h <= 3.
void criterion_oracle_agreement() {
    InstanceGen gen(2026);
    int checked = 0;
    while (checked < 100) {
        GroupAlgebraElement g = gen.membership_instance(checked % 2 == 0);
        if (g.support().size() > 4) continue;
        for (unsigned long h = 0; h <= 3; ++h)
            expect(aug_power_member(g, h) == aug_power_member_bruteforce(g, h, 24),
                   "oracle disagreement at h = " + std::to_string(h));
        ++checked;
    }
}

// 7. Degree laws: jdeg <= ideg on 200 nonzero elements; additivity of ideg and
//    superadditivity of jdeg on 100 products; ideg equals the leading-zero
//    count of the recurrence wherever a recurrence exists.
void criterion_degree_laws() {
    InstanceGen gen(2027);
    for (int trial = 0; trial < 200; ++trial) {
        NormalForm f = gen.nonzero_normal_form(4, 3);
        auto j = jdeg(f), i = ideg(f);
        expect(j.has_value() && i.has_value(), "degrees must be finite for nonzero elements");
        expect(*j <= *i, "the finer filtration reported a larger degree");
        expect(ideg(f) == cauchy_jdeg(f.to_recurrence()),
               "induced degree differs from the recurrence leading-zero count");
    }
    for (int trial = 0; trial < 100; ++trial) {
        NormalForm f = gen.nonzero_normal_form(3, 2);
        NormalForm g = gen.nonzero_normal_form(3, 2);
        NormalForm prod = f * g;
        expect(!prod.is_zero(), "product of nonzero elements vanished");
        expect(*ideg(prod) == *ideg(f) + *ideg(g), "induced degree is not additive");
        expect(*jdeg(prod) >= *jdeg(f) + *jdeg(g), "adic degree is not superadditive");
    }
}

// 8. Density mechanism: the tail past the length-n truncation vanishes to
//    order at least n, for 50 random elements and every n <= 10.
void criterion_density() {
    InstanceGen gen(2028);
    for (int trial = 0; trial < 50; ++trial) {
        NormalForm f = gen.normal_form(4, 3);
        for (unsigned long n = 0; n <= 10; ++n) {
            NormalForm tail = f - f.truncate(n);
            auto d = ideg(tail);
            expect(!d.has_value() || *d >= n, "truncation tail has too small a degree");
        }
    }
}

// 9. Termwise division by n! escapes every fixed recurrence order: minimal
//    orders at prefix lengths 4, 8, 12, 16 strictly increase.
void criterion_zeta_escape() {
    TermVector scaled = zeta(TermVector(16, GaussianRational(1)));
    std::size_t last = 0;
    for (std::size_t len = 4; len <= 16; len += 4) {
        TermVector prefix(scaled.begin(), scaled.begin() + static_cast<std::ptrdiff_t>(len));
        std::size_t order = berlekamp_massey(prefix).order();
        expect(order > last, "minimal order did not increase at length " + std::to_string(len));
        last = order;
    }
}

} // namespace

int main() {
    std::vector<Criterion> criteria{
        {1, "separation table: witness rows (n, ideg=n, jdeg=1) for n=1..10", criterion_separation},
        {2, "augmentation-ideal pin: member at h=1, not at h=2", criterion_membership_pin},
        {3, "witness identity egf(w_n) = Z^n * h_n, n=1..6, order 20", criterion_witness_identity},
        {4, "Hopf axioms on 50 random elements, duality bound 12", criterion_hopf_axioms},
        {5, "representation coherence across the four forms", criterion_representation_coherence},
        {6, "membership oracles agree on 100 instances", criterion_oracle_agreement},
        {7, "degree laws: comparison, additivity, cross-form equality", criterion_degree_laws},
        {8, "density: truncation tails vanish to order n", criterion_density},
        {9, "factorial scaling escapes fixed recurrence order", criterion_zeta_escape},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        try {
            criterion.check();
            std::printf("PASS  %d  %s\n", criterion.number, criterion.title.c_str());
        } catch (const std::exception& e) {
            ++failures;
            std::printf("FAIL  %d  %s: %s\n", criterion.number, criterion.title.c_str(), e.what());
        }
    }
    if (failures == 0) {
        std::printf("all %zu acceptance criteria passed\n", criteria.size());
        return 0;
    }
    std::printf("%d acceptance criteria failed\n", failures);
    return 1;
}
