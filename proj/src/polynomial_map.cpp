#include "addact/polynomial_map.hpp"

#include "addact/action.hpp"
#include "addact/basic_polynomials.hpp"

namespace addact {

PolynomialMap::PolynomialMap(RingPtr ring, std::vector<Polynomial> components)
    : ring_(std::move(ring)), components_(std::move(components)) {
    if (components_.size() != ring_->nvars())
        throw ArityError("polynomial map needs one component per variable");
    for (const auto& c : components_)
        if (!same_ring(c.ring(), ring_))
            throw RingMismatchError("component lives over a different ring");
}

PolynomialMap PolynomialMap::identity(RingPtr ring) {
    std::vector<Polynomial> comps;
    for (std::size_t i = 0; i < ring->nvars(); ++i)
        comps.push_back(Polynomial::variable(ring, i));
    return PolynomialMap(std::move(ring), std::move(comps));
}

std::string PolynomialMap::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < components_.size(); ++i) {
        if (i) out += ", ";
        out += components_[i].str();
    }
    out += ")";
    return out;
}

bool PolynomialMap::operator==(const PolynomialMap& o) const {
    return same_ring(ring_, o.ring_) && components_ == o.components_;
}

PolynomialMap compose(const PolynomialMap& f, const PolynomialMap& g) {
    if (!same_ring(f.ring(), g.ring()))
        throw RingMismatchError("composition needs a common ring");
    std::vector<Polynomial> comps;
    for (const auto& c : f.components())
        comps.push_back(substitute(c, g.components()));
    return PolynomialMap(g.ring(), std::move(comps));
}

PolynomialMap invert_triangular(const PolynomialMap& f) {
    const RingPtr ring = f.ring();
    const std::size_t n = f.arity();
    if (!is_triangular(std::span<const Polynomial>(f.components())))
        throw NotTriangularError("map is not triangular: " + f.str());

    // gi = xi - hi(g1, ..., g_{i-1}); hi only uses earlier variables, so the
    // placeholder images for later slots are never consulted
    std::vector<Polynomial> g;
    for (std::size_t i = 0; i < n; ++i) {
        const Polynomial hi = f.component(i) - Polynomial::variable(ring, i);
        std::vector<Polynomial> images;
        for (std::size_t k = 0; k < n; ++k)
            images.push_back(k < g.size() ? g[k] : Polynomial::variable(ring, k));
        g.push_back(Polynomial::variable(ring, i) - substitute(hi, images));
    }
    return PolynomialMap(ring, std::move(g));
}

PolynomialMap phi_from_algebra(const AlgebraPtr& a) {
    BasicPolynomials bp = basic_polynomials(a);
    return PolynomialMap(bp.ring, std::move(bp.f));
}

PolynomialMap phi_inverse_via_log(const AlgebraPtr& a) {
    const std::size_t n = a->mdim();
    const RingPtr ring = Ring::numbered("x", n);
    const GenericElement l = log(generic_unipotent(a, ring));
    if (!l.coord(0).is_zero())
        throw Error("log of a unipotent unit must land in the maximal ideal");
    std::vector<Polynomial> comps(l.coords().begin() + 1, l.coords().end());
    return PolynomialMap(ring, std::move(comps));
}

PolynomialMap shear_automorphism(const Polynomial& f, std::size_t n) {
    if (n < 2) throw ArityError("shear needs at least two variables");
    const RingPtr ring = f.ring();
    if (ring->nvars() != n)
        throw ArityError("shear polynomial must live over the n-variable ring");
    for (std::size_t j = 0; j < n; ++j)
        if (j != 1 && f.involves(j))
            throw Error("shear polynomial may only involve the second variable");
    std::vector<Polynomial> comps;
    comps.push_back(Polynomial::variable(ring, 0) + f);
    for (std::size_t i = 1; i < n; ++i) comps.push_back(Polynomial::variable(ring, i));
    return PolynomialMap(ring, std::move(comps));
}

std::string ConjugationReport::summary() const {
    if (passed) return "conjugation identity holds in Q[x, y]";
    std::string out = "conjugation identity FAILS:";
    for (std::size_t i = 0; i < diffs.size(); ++i) {
        if (diffs[i].is_zero()) continue;
        out += "\n  coordinate " + std::to_string(i + 1) +
               " residual: " + diffs[i].str();
    }
    return out;
}

ConjugationReport verify_conjugation(const AlgebraPtr& a) {
    ConjugationReport rep;
    const std::size_t n = a->mdim();
    rep.xring = Ring::numbered("x", n);
    rep.yring = Ring::numbered("y", n);
    const RingPtr u = union_ring(rep.xring, rep.yring);

    const BasicPolynomials bp = basic_polynomials(a, rep.xring);
    const ActionMatrix m = action_matrix(a, rep.yring);

    std::vector<Polynomial> shifts;
    for (std::size_t i = 0; i < n; ++i)
        shifts.push_back(Polynomial::variable(rep.yring, i));

    // F_0 = 1, F_j = f_j, embedded into Q[x, y]
    std::vector<Polynomial> basis;
    basis.push_back(Polynomial::one(u));
    for (const auto& f : bp.f) basis.push_back(embed(f, u));

    rep.passed = true;
    for (std::size_t i = 1; i <= n; ++i) {
        Polynomial lhs = translate(bp.f[i - 1], std::span<const Polynomial>(shifts));
        lhs = embed(lhs, u);  // translate already targets the union ring; keep explicit
        Polynomial rhs = Polynomial::zero(u);
        for (std::size_t j = 0; j <= n; ++j)
            rhs += embed(m.at(i, j), u) * basis[j];
        Polynomial diff = lhs - rhs;
        if (!diff.is_zero()) rep.passed = false;
        rep.diffs.push_back(std::move(diff));
    }
    return rep;
}

}  // namespace addact
