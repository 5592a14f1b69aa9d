#include "addact/basic_polynomials.hpp"

#include <algorithm>
#include <map>

#include "addact/linalg.hpp"
#include "addact/polynomial_map.hpp"

namespace addact {

BasicPolynomials basic_polynomials(const AlgebraPtr& a) {
    return basic_polynomials(a, Ring::numbered("x", a->mdim()));
}

BasicPolynomials basic_polynomials(const AlgebraPtr& a, RingPtr ring,
                                   bool allow_incompatible_basis) {
    const std::size_t n = a->mdim();
    if (ring->nvars() != n)
        throw ArityError("need one variable per maximal-ideal generator");
    if (!allow_incompatible_basis && !filtration_compatible(*a))
        throw FiltrationError(
            "algebra basis is not filtration-compatible; reorder the basis or "
            "opt in explicitly");

    const GenericElement e = exp(generic_m_element(a, ring));
    if (!coeff_is_one(e.coord(0)))
        throw Error("exp of a maximal-ideal element must have unit part 1");

    BasicPolynomials bp;
    bp.algebra = a;
    bp.ring = std::move(ring);
    bp.f.assign(e.coords().begin() + 1, e.coords().end());
    return bp;
}

bool is_triangular(std::span<const Polynomial> fs) {
    if (fs.empty()) return true;
    const RingPtr ring = fs[0].ring();
    if (ring->nvars() != fs.size())
        throw ArityError("triangularity needs one component per variable");
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (!same_ring(fs[i].ring(), ring))
            throw RingMismatchError("components live over different rings");
        Polynomial h = fs[i] - Polynomial::variable(ring, i);
        for (std::size_t j = i; j < ring->nvars(); ++j)
            if (h.involves(j)) return false;
    }
    return true;
}

bool is_triangular(const BasicPolynomials& bp) {
    return is_triangular(std::span<const Polynomial>(bp.f));
}

std::string SubspaceReport::summary() const {
    auto verdict = [](bool ok) { return ok ? "pass" : "FAIL"; };
    std::string out;
    out += "span dimension:        ";
    out += verdict(span_dimension_ok);
    out += "\ntranslation invariance: ";
    out += verdict(translation_invariant);
    out += "\ngeneration:            ";
    out += verdict(generates);
    return out;
}

SubspaceReport check_subspace_candidate(const RingPtr& xring,
                                        std::span<const Polynomial> fs) {
    const std::size_t n = xring->nvars();
    if (fs.size() != n)
        throw ArityError("candidate needs one component per variable");
    for (const auto& f : fs)
        if (!same_ring(f.ring(), xring))
            throw RingMismatchError("candidate lives over a different ring");

    SubspaceReport rep;
    rep.shift_ring = Ring::numbered("c", n);

    if (n == 0) {
        rep.span_dimension_ok = true;
        rep.translation_invariant = true;
        rep.generates = true;
        rep.translation_matrix = {{Polynomial::one(rep.shift_ring)}};
        return rep;
    }

    // F_0 = 1, F_i = fs[i-1]
    std::vector<Polynomial> span_polys;
    span_polys.push_back(Polynomial::one(xring));
    for (const auto& f : fs) span_polys.push_back(f);

    // translated targets over the union ring (x first, then c)
    std::vector<Polynomial> shifts;
    for (std::size_t i = 0; i < n; ++i)
        shifts.push_back(Polynomial::variable(rep.shift_ring, i));
    std::vector<Polynomial> targets;
    for (const auto& f : fs)
        targets.push_back(translate(f, std::span<const Polynomial>(shifts)));

    std::vector<std::size_t> xpos(n), cpos(n);
    for (std::size_t i = 0; i < n; ++i) {
        xpos[i] = i;
        cpos[i] = n + i;
    }

    // regroup targets by their x-monomials
    std::vector<std::map<Monomial, Polynomial, GrlexDescending>> grouped;
    for (const auto& t : targets)
        grouped.push_back(regroup(t, xpos, xring, cpos, rep.shift_ring));

    // column universe: every x-monomial seen in the span or any target
    std::map<Monomial, std::size_t, GrlexDescending> column;
    auto claim = [&](const Monomial& m) {
        column.emplace(m, 0);  // index assigned after collection
    };
    for (const auto& p : span_polys)
        for (const auto& [m, c] : p.terms()) claim(m);
    for (const auto& g : grouped)
        for (const auto& [m, q] : g) claim(m);
    {
        std::size_t idx = 0;
        for (auto& [m, i] : column) i = idx++;
    }
    const std::size_t cols = column.size();

    // echelonize the span rows, augmented with coordinates over F_0..F_n so
    // every echelon row remembers which combination produced it
    SpanBuilder sb(cols + n + 1);
    for (std::size_t k = 0; k < span_polys.size(); ++k) {
        std::vector<Rational> row(cols + n + 1);
        for (const auto& [m, c] : span_polys[k].terms()) row[column.at(m)] = c;
        row[cols + k] = Rational(1);
        sb.insert(std::move(row));
    }
    std::size_t span_dim = 0;
    for (auto p : sb.pivot_columns())
        if (p < cols) ++span_dim;
    rep.span_dimension_ok = (span_dim == n + 1);

    // eliminate each target against the echelon rows; residual => the
    // translated polynomial left the span
    const Polynomial czero = Polynomial::zero(rep.shift_ring);
    bool invariant = true;
    std::vector<std::vector<Polynomial>> lambda;
    {
        // row 0: F_0(x + c) = 1 = 1 * F_0
        std::vector<Polynomial> row0(n + 1, czero);
        row0[0] = Polynomial::one(rep.shift_ring);
        lambda.push_back(std::move(row0));
    }
    for (std::size_t t = 0; t < n && invariant; ++t) {
        std::vector<Polynomial> vec(cols, czero);
        for (const auto& [m, q] : grouped[t]) vec[column.at(m)] = q;

        std::vector<Polynomial> lam(n + 1, czero);
        const auto& rows = sb.basis();
        const auto& pivots = sb.pivot_columns();
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (pivots[r] >= cols) continue;
            const Polynomial coef = vec[pivots[r]];
            if (coef.is_zero()) continue;
            for (std::size_t c = 0; c < cols; ++c)
                if (!rows[r][c].is_zero()) vec[c] -= coef * rows[r][c];
            for (std::size_t k = 0; k <= n; ++k)
                if (!rows[r][cols + k].is_zero()) lam[k] += coef * rows[r][cols + k];
        }
        for (const auto& residue : vec)
            if (!residue.is_zero()) {
                invariant = false;
                break;
            }
        if (invariant) lambda.push_back(std::move(lam));
    }
    rep.translation_invariant = invariant;
    if (invariant) rep.translation_matrix = std::move(lambda);

    // generation: the tuple must invert as a triangular automorphism
    try {
        invert_triangular(PolynomialMap(xring, std::vector<Polynomial>(fs.begin(), fs.end())));
        rep.generates = true;
    } catch (const NotTriangularError&) {
        rep.generates = false;
    }

    return rep;
}

SubspaceReport check_basic_subspace(const BasicPolynomials& bp) {
    return check_subspace_candidate(bp.ring, bp.f);
}

}  // namespace addact
