#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linrec/linalg.hpp"
#include "linrec/normal_form.hpp"
#include "linrec/scalar.hpp"
#include "linrec/sequence.hpp"

namespace linrec {

/// Finite linear combination of group-like functionals, indexed by their
/// evaluation points lambda. Nonzero coefficients only.
class GroupAlgebraElement {
public:
    using Support = std::map<GaussianRational, GaussianRational, ScalarLex>;

    GroupAlgebraElement() = default;

    static GroupAlgebraElement group_like(GaussianRational lambda) {
        GroupAlgebraElement g;
        g.add_term(std::move(lambda), GaussianRational(1));
        return g;
    }

    void add_term(GaussianRational lambda, const GaussianRational& coeff) {
        if (coeff.is_zero()) return;
        auto it = terms_.find(lambda);
        if (it == terms_.end()) {
            terms_.emplace(std::move(lambda), coeff);
        } else {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    const Support& support() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Augmentation: the sum of the coefficients.
    GaussianRational augmentation() const {
        GaussianRational acc;
        for (const auto& [lambda, coeff] : terms_) acc += coeff;
        return acc;
    }

    friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
        GroupAlgebraElement out;
        for (const auto& [la, ca] : a.terms_)
            for (const auto& [lb, cb] : b.terms_) out.add_term(la + lb, ca * cb);
        return out;
    }
    GroupAlgebraElement& operator-=(const GroupAlgebraElement& o) {
        for (const auto& [lambda, coeff] : o.terms_) add_term(lambda, -coeff);
        return *this;
    }
    friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) {
        a -= b;
        return a;
    }
    friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
        return a.terms_ == b.terms_;
    }

private:
    Support terms_;
};

/// Z-basis of the subgroup of (Q(i), +) generated by a finite support, with
/// exact integer coordinates for each supported point. Q(i) = Q^2 as a group,
/// so the rank is 0, 1 or 2.
struct LatticeBasis {
    unsigned rank = 0;
    std::vector<GaussianRational> basis;
    std::map<GaussianRational, std::vector<mpz_class>, ScalarLex> coords;
};

namespace detail {

struct Vec2 {
    mpz_class x, y;
    bool is_zero() const { return x == 0 && y == 0; }
};

// Hermite-style row reduction of at most rank-2 integer vectors. Produces
// rowA with pivot x > 0 (when present) and rowB = (0, y > 0), with rowA.y
// reduced mod rowB.y.
struct Lattice2 {
    std::optional<Vec2> row_a; // pivot in x
    std::optional<Vec2> row_b; // pivot in y (x == 0)

    void insert(Vec2 v) {
        if (v.is_zero()) return;
        if (v.x != 0) {
            if (!row_a) {
                row_a = v;
            } else {
                mpz_class g, s, t;
                mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), row_a->x.get_mpz_t(),
                           v.x.get_mpz_t());
                Vec2 combined{g, s * row_a->y + t * v.y};
                Vec2 eliminated{0, (v.x / g) * row_a->y - (row_a->x / g) * v.y};
                row_a = combined;
                insert(eliminated);
            }
        } else {
            if (!row_b) {
                row_b = v;
            } else {
                mpz_class g;
                mpz_gcd(g.get_mpz_t(), row_b->y.get_mpz_t(), v.y.get_mpz_t());
                row_b->y = g;
            }
        }
    }

    void normalize() {
        if (row_a && row_a->x < 0) {
            row_a->x = -row_a->x;
            row_a->y = -row_a->y;
        }
        if (row_b && row_b->y < 0) row_b->y = -row_b->y;
        if (row_a && row_b) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), row_a->y.get_mpz_t(), row_b->y.get_mpz_t());
            row_a->y -= q * row_b->y;
        }
    }

    // Integer coordinates of a lattice vector in terms of (row_a, row_b).
    std::vector<mpz_class> coordinates(const Vec2& v) const {
        std::vector<mpz_class> out;
        mpz_class rx = 0, ry = 0;
        if (row_a) {
            if (!mpz_divisible_p(v.x.get_mpz_t(), row_a->x.get_mpz_t()))
                throw verification_failure("vector outside its own lattice");
            mpz_class n1 = v.x / row_a->x;
            out.push_back(n1);
            rx = n1 * row_a->x;
            ry = n1 * row_a->y;
        } else if (v.x != 0) {
            throw verification_failure("vector outside its own lattice");
        }
        if (row_b) {
            mpz_class rem = v.y - ry;
            if (!mpz_divisible_p(rem.get_mpz_t(), row_b->y.get_mpz_t()))
                throw verification_failure("vector outside its own lattice");
            out.push_back(rem / row_b->y);
        } else if (v.y != ry) {
            throw verification_failure("vector outside its own lattice");
        }
        return out;
    }
};

} // namespace detail

/// Clear denominators, then Hermite-reduce the resulting integer vectors in
/// Z^2 to a basis of the generated subgroup; every supported point gets exact
/// integer coordinates.
inline LatticeBasis lattice_basis(const std::vector<GaussianRational>& support) {
    mpz_class lcm = 1;
    for (const auto& lambda : support) {
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), lambda.re().den().get_mpz_t());
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), lambda.im().den().get_mpz_t());
    }
    auto to_vec = [&](const GaussianRational& lambda) {
        return detail::Vec2{lambda.re().num() * (lcm / lambda.re().den()),
                            lambda.im().num() * (lcm / lambda.im().den())};
    };

    detail::Lattice2 lat;
    for (const auto& lambda : support) lat.insert(to_vec(lambda));
    lat.normalize();

    LatticeBasis out;
    Rational scale{mpz_class(1), lcm};
    if (lat.row_a) {
        out.basis.emplace_back(Rational(lat.row_a->x) * scale, Rational(lat.row_a->y) * scale);
        ++out.rank;
    }
    if (lat.row_b) {
        out.basis.emplace_back(Rational(lat.row_b->x) * scale, Rational(lat.row_b->y) * scale);
        ++out.rank;
    }
    for (const auto& lambda : support) out.coords[lambda] = lat.coordinates(to_vec(lambda));
    return out;
}

namespace detail {

// Multi-indices d in N^rank with |d| = total.
inline std::vector<std::vector<unsigned long>> multi_indices(unsigned rank, unsigned long total) {
    std::vector<std::vector<unsigned long>> out;
    if (rank == 0) {
        if (total == 0) out.push_back({});
        return out;
    }
    if (rank == 1) {
        out.push_back({total});
        return out;
    }
    for (unsigned long first = 0; first <= total; ++first)
        out.push_back({first, total - first});
    return out;
}

// Taylor coefficient of g at the group identity, in lattice coordinates:
// sum over lambda of a_lambda * prod_i C(n_i(lambda), d_i).
inline GaussianRational moment(const GroupAlgebraElement& g, const LatticeBasis& lattice,
                               const std::vector<unsigned long>& d) {
    GaussianRational acc;
    for (const auto& [lambda, coeff] : g.support()) {
        const auto& n = lattice.coords.at(lambda);
        GaussianRational weight(1);
        for (std::size_t i = 0; i < d.size(); ++i)
            weight *= GaussianRational(gen_binomial(n[i], d[i]));
        acc += coeff * weight;
    }
    return acc;
}

// Coordinate spread per dimension: sum of (max - min); the total degree of
// the support polynomial after shifting into the positive orthant, hence an
// upper bound on the augmentation order of a nonzero element.
inline unsigned long coordinate_spread(const LatticeBasis& lattice) {
    if (lattice.coords.empty()) return 0;
    unsigned long total = 0;
    for (unsigned i = 0; i < lattice.rank; ++i) {
        mpz_class lo, hi;
        bool first = true;
        for (const auto& [lambda, n] : lattice.coords) {
            if (first || n[i] < lo) lo = n[i];
            if (first || n[i] > hi) hi = n[i];
            first = false;
        }
        total += mpz_class(hi - lo).get_ui();
    }
    return total;
}

} // namespace detail

/// Membership of g in the h-th power of the augmentation ideal of the group
/// algebra, decided inside the finitely generated subgroup spanned by the
/// support: the ideal power is exactly the set of elements whose Taylor data
/// of total order < h vanish at the identity, and those Taylor coefficients
/// are the generalized-binomial moments of the coordinates.
inline bool aug_power_member(const GroupAlgebraElement& g, unsigned long h) {
    if (h == 0 || g.is_zero()) return true;
    std::vector<GaussianRational> support;
    for (const auto& [lambda, coeff] : g.support()) support.push_back(lambda);
    LatticeBasis lattice = lattice_basis(support);
    for (unsigned long total = 0; total < h; ++total)
        for (const auto& d : detail::multi_indices(lattice.rank, total))
            if (!detail::moment(g, lattice, d).is_zero()) return false;
    return true;
}

/// Largest h with g in the h-th augmentation-ideal power; nullopt (infinite)
/// only for g = 0. Equals the least total order of a nonvanishing moment.
inline std::optional<std::size_t> augmentation_order(const GroupAlgebraElement& g) {
    if (g.is_zero()) return std::nullopt;
    std::vector<GaussianRational> support;
    for (const auto& [lambda, coeff] : g.support()) support.push_back(lambda);
    LatticeBasis lattice = lattice_basis(support);
    const unsigned long bound = detail::coordinate_spread(lattice);
    for (unsigned long total = 0; total <= bound; ++total)
        for (const auto& d : detail::multi_indices(lattice.rank, total))
            if (!detail::moment(g, lattice, d).is_zero()) return total;
    throw verification_failure("nonzero group-algebra element with no nonvanishing moment");
}

/// Independent membership oracle: decide whether g is a linear combination of
/// h-fold products of (group_like(b) - 1), b over lattice generators, shifted
/// by group-like translates inside the box. Sound both ways when the box
/// covers the coordinate spread of g; otherwise a negative verdict could miss
/// a representation, and box_too_small is thrown instead.
inline bool aug_power_member_bruteforce(const GroupAlgebraElement& g, unsigned long h,
                                        unsigned long box) {
    if (h == 0 || g.is_zero()) return true;
    std::vector<GaussianRational> support;
    for (const auto& [lambda, coeff] : g.support()) support.push_back(lambda);
    LatticeBasis lattice = lattice_basis(support);
    const unsigned rank = lattice.rank;
    if (rank == 0) return false; // g is a nonzero multiple of the identity

    // shift coordinates into the positive orthant
    std::vector<mpz_class> lo(rank), hi(rank);
    bool first = true;
    for (const auto& [lambda, n] : lattice.coords) {
        for (unsigned i = 0; i < rank; ++i) {
            if (first || n[i] < lo[i]) lo[i] = n[i];
            if (first || n[i] > hi[i]) hi[i] = n[i];
        }
        first = false;
    }
    unsigned long spread = 0;
    for (unsigned i = 0; i < rank; ++i) spread += mpz_class(hi[i] - lo[i]).get_ui();

    // A representation of any member supported in the shifted box exists with
    // translates of coordinates at most spread - h, and products reach at
    // most translate + h per dimension.
    const unsigned long translate = spread > h ? spread - h : 0;
    if (spread > box || translate + h > box)
        throw box_too_small(spread > translate + h ? spread : translate + h, box);
    const unsigned long extent = translate + h; // monomial grid is [0, extent]^rank

    auto grid_index = [&](const std::vector<unsigned long>& e) {
        std::size_t idx = 0;
        for (unsigned i = 0; i < rank; ++i) idx = idx * (extent + 1) + e[i];
        return idx;
    };
    const std::size_t rows =
        rank == 1 ? extent + 1 : (extent + 1) * (extent + 1);

    // columns: translate u in [0, translate]^rank times generator multiset m
    // with |m| = h; the product expands by binomial coefficients with signs.
    Matrix a;
    std::vector<std::vector<unsigned long>> translates;
    {
        std::vector<unsigned long> u(rank, 0);
        for (;;) {
            translates.push_back(u);
            unsigned i = 0;
            while (i < rank && ++u[i] > translate) u[i++] = 0;
            if (i == rank) break;
        }
    }
    for (const auto& multiset : detail::multi_indices(rank, h)) {
        for (const auto& u : translates) {
            std::vector<GaussianRational> col(rows);
            // expand prod_i (T_i - 1)^(m_i) shifted by u
            std::vector<unsigned long> e(rank, 0);
            for (;;) {
                bool within = true;
                for (unsigned i = 0; i < rank; ++i)
                    if (e[i] > multiset[i]) within = false;
                if (within) {
                    mpz_class weight = 1;
                    unsigned long parity = 0;
                    std::vector<unsigned long> cell(rank);
                    for (unsigned i = 0; i < rank; ++i) {
                        mpz_class binom;
                        mpz_bin_uiui(binom.get_mpz_t(), multiset[i], e[i]);
                        weight *= binom;
                        parity += multiset[i] - e[i];
                        cell[i] = u[i] + e[i];
                    }
                    if (parity % 2 == 1) weight = -weight;
                    col[grid_index(cell)] += GaussianRational(Rational(weight));
                }
                unsigned i = 0;
                while (i < rank && ++e[i] > multiset[i]) e[i++] = 0;
                if (i == rank) break;
            }
            a.push_back(std::move(col)); // rows of `a` are columns for now
        }
    }

    std::vector<GaussianRational> target(rows);
    for (const auto& [lambda, coeff] : g.support()) {
        const auto& n = lattice.coords.at(lambda);
        std::vector<unsigned long> cell(rank);
        for (unsigned i = 0; i < rank; ++i) cell[i] = mpz_class(n[i] - lo[i]).get_ui();
        target[grid_index(cell)] += coeff;
    }

    // transpose into row-major rows x columns
    Matrix system(rows, std::vector<GaussianRational>(a.size()));
    for (std::size_t c = 0; c < a.size(); ++c)
        for (std::size_t r = 0; r < rows; ++r) system[r][c] = a[c][r];
    return is_consistent(std::move(system), std::move(target));
}

/// Splits a normal form along the primitive grading: f = sum_k (k-slice),
/// where the k-slice collects the group-algebra part of the keys at level k.
inline std::map<unsigned long, GroupAlgebraElement> primitive_slices(const NormalForm& f) {
    std::map<unsigned long, GroupAlgebraElement> out;
    for (const auto& [key, coeff] : f.support()) out[key.k].add_term(key.lambda, coeff);
    return out;
}

/// Degree of f in the filtration by powers of the whole augmentation ideal:
/// the k-slice of an element of the n-th power lies in the (n-k)-th power of
/// the group-algebra augmentation ideal, so the degree is the minimum over
/// nonzero slices of (k + augmentation order). Infinite only for f = 0.
inline std::optional<std::size_t> jdeg(const NormalForm& f) {
    if (f.is_zero()) return std::nullopt;
    std::optional<std::size_t> best;
    for (const auto& [k, slice] : primitive_slices(f)) {
        auto ord = augmentation_order(slice);
        if (!ord) continue;
        std::size_t n = k + *ord;
        if (!best || n < *best) best = n;
    }
    if (!best) throw verification_failure("nonzero element with no nonzero slice");
    return best;
}

/// Degree of f in the filtration induced from the full dual: the least m with
/// f(e_m) != 0. A nonzero element evaluates nonzero somewhere below its
/// order bound, which makes the search finite.
inline std::optional<std::size_t> ideg(const NormalForm& f) {
    if (f.is_zero()) return std::nullopt;
    const std::size_t bound = f.order_bound();
    for (std::size_t m = 0; m < bound; ++m)
        if (!f.eval(m).is_zero()) return m;
    throw verification_failure("nonzero normal form vanishing past its order bound");
}

/// Degree in the adic filtration on the Cauchy side: the number of leading
/// zero terms. A recurrence whose first r terms all vanish is identically
/// zero, so scanning the initial segment suffices. Infinite iff the zero
/// sequence.
inline std::optional<std::size_t> cauchy_jdeg(const RecurrenceSequence& s) {
    s.check();
    if (s.order() == 0) return std::nullopt;
    TermVector head = gen_terms(s, s.order() - 1);
    for (std::size_t n = 0; n < head.size(); ++n)
        if (!head[n].is_zero()) return n;
    return std::nullopt;
}

/// The witness family: w_n = group_like(1) minus its own truncation head of
/// length n. Vanishes on e_0..e_{n-1} but its degree in the finer filtration
/// stays at 1 for every n.
inline NormalForm witness_element(std::size_t n) {
    NormalForm g = NormalForm::group_like(GaussianRational(1));
    return g - g.truncate(n);
}

struct DegreeReport {
    std::string description;
    std::optional<std::size_t> ideg;
    std::optional<std::size_t> jdeg;
    std::optional<std::size_t> cauchy_jdeg;
};

/// One row per witness element w_1..w_N; the rows (n, ideg = n, jdeg = 1)
/// exhibit the unbounded gap between the two filtrations.
inline std::vector<DegreeReport> witness_table(std::size_t max_n) {
    std::vector<DegreeReport> out;
    out.reserve(max_n);
    for (std::size_t n = 1; n <= max_n; ++n) {
        NormalForm w = witness_element(n);
        DegreeReport row;
        row.description = "w_" + std::to_string(n);
        row.ideg = ideg(w);
        row.jdeg = jdeg(w);
        row.cauchy_jdeg = cauchy_jdeg(w.to_recurrence());
        out.push_back(std::move(row));
    }
    return out;
}

} // namespace linrec
