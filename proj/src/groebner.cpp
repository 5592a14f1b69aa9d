#include "addact/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "addact/local_algebra.hpp"

namespace addact {

// ===== Presentation =====

IdealPresentation::IdealPresentation(RingPtr ring_, std::vector<Polynomial> generators_)
    : ring(std::move(ring_)), generators(std::move(generators_)) {
    if (generators.empty()) throw ArityError("presentation needs at least one generator");
    for (const auto& g : generators) {
        if (!same_ring(g.ring(), ring))
            throw RingMismatchError("generator lives over a different ring");
        if (g.is_zero()) throw Error("zero generator");
        if (!g.constant_term().is_zero())
            throw Error("generator has nonzero constant term: " + g.str());
    }
}

std::string IdealPresentation::str() const {
    std::string out = "Q[";
    for (std::size_t i = 0; i < ring->nvars(); ++i) {
        if (i) out += ",";
        out += ring->var(i);
    }
    out += "]/(";
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (i) out += ", ";
        out += generators[i].str();
    }
    out += ")";
    return out;
}

// ===== Leading terms and S-polynomials =====

Term leading_term(const Polynomial& p, const MonomialOrder& order) {
    if (p.is_zero()) throw Error("the zero polynomial has no leading term");
    auto it = p.terms().begin();
    const auto* best = &*it;
    for (++it; it != p.terms().end(); ++it)
        if (order.compare(it->first, best->first) > 0) best = &*it;
    return Term{best->first, best->second};
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const MonomialOrder& order) {
    const Term lf = leading_term(f, order);
    const Term lg = leading_term(g, order);
    const Monomial l = Monomial::lcm(lf.mono, lg.mono);
    Polynomial a = term_product(f, l.divided_by(lf.mono), Rational(1) / lf.coeff);
    Polynomial b = term_product(g, l.divided_by(lg.mono), Rational(1) / lg.coeff);
    return a - b;
}

// ===== Normal form =====

namespace {

Polynomial normal_form_impl(const Polynomial& p, const std::vector<Polynomial>& basis,
                            const MonomialOrder& order) {
    Polynomial h = p;
    Polynomial r = Polynomial::zero(p.ring());
    while (!h.is_zero()) {
        const Term lt = leading_term(h, order);
        bool reduced = false;
        for (const auto& g : basis) {
            const Term lg = leading_term(g, order);
            if (lg.mono.divides(lt.mono)) {
                h -= term_product(g, lt.mono.divided_by(lg.mono), lt.coeff / lg.coeff);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            r.add_term(lt.mono, lt.coeff);
            h.add_term(lt.mono, -lt.coeff);
        }
    }
    return r;
}

Polynomial make_monic(const Polynomial& p, const MonomialOrder& order) {
    const Term lt = leading_term(p, order);
    Polynomial q = p;
    q *= Rational(1) / lt.coeff;
    return q;
}

// elements sorted by ascending leading-monomial degree, then descending
// monomial order within a degree (mirrors the quotient-basis convention).
void sort_elements(std::vector<Polynomial>& g, const MonomialOrder& order) {
    std::stable_sort(g.begin(), g.end(), [&](const Polynomial& a, const Polynomial& b) {
        const Monomial la = leading_term(a, order).mono;
        const Monomial lb = leading_term(b, order).mono;
        if (la.total_degree() != lb.total_degree())
            return la.total_degree() < lb.total_degree();
        return order.compare(la, lb) > 0;
    });
}

}  // namespace

GroebnerBasis::GroebnerBasis(RingPtr ring, MonomialOrder order,
                             std::vector<Polynomial> elements)
    : ring_(std::move(ring)), order_(std::move(order)), elements_(std::move(elements)) {
    if (order_.nvars() != ring_->nvars())
        throw RingMismatchError("monomial order does not match the ring");
    for (const auto& g : elements_)
        if (!same_ring(g.ring(), ring_))
            throw RingMismatchError("basis element lives over a different ring");
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
    if (!same_ring(p.ring(), gb.ring()))
        throw RingMismatchError("polynomial lives over a different ring than the basis");
    return normal_form_impl(p, gb.elements(), gb.order());
}

// ===== Buchberger =====

GroebnerBasis buchberger(const IdealPresentation& pres, const MonomialOrder& order,
                         std::size_t max_pairs) {
    if (order.nvars() != pres.ring->nvars())
        throw RingMismatchError("monomial order does not match the presentation ring");

    std::vector<Polynomial> g;
    for (const auto& gen : pres.generators) {
        Polynomial m = make_monic(gen, order);
        if (std::find(g.begin(), g.end(), m) == g.end()) g.push_back(std::move(m));
    }

    using Pair = std::pair<std::size_t, std::size_t>;
    // normal selection: smallest lcm first (by degree, then by the order)
    auto lcm_of = [&](const Pair& p) {
        return Monomial::lcm(leading_term(g[p.first], order).mono,
                             leading_term(g[p.second], order).mono);
    };
    auto pair_less = [&](const Pair& a, const Pair& b) {
        const Monomial la = lcm_of(a), lb = lcm_of(b);
        if (la.total_degree() != lb.total_degree())
            return la.total_degree() < lb.total_degree();
        if (auto c = order.compare(la, lb); c != 0) return c < 0;
        return a < b;
    };

    std::set<Pair> pending;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j) pending.insert({i, j});

    std::size_t processed = 0;
    while (!pending.empty()) {
        const Pair pick = *std::min_element(pending.begin(), pending.end(), pair_less);
        pending.erase(pick);
        if (++processed > max_pairs)
            throw SPairLimitError("S-pair budget of " + std::to_string(max_pairs) +
                                  " exceeded with " + std::to_string(g.size()) +
                                  " basis elements so far");

        const auto [i, j] = pick;
        const Monomial li = leading_term(g[i], order).mono;
        const Monomial lj = leading_term(g[j], order).mono;

        // product criterion: coprime leading monomials reduce to zero
        if (li.coprime_with(lj)) continue;

        // chain criterion: some g[k] divides lcm(li, lj) and both mixed
        // pairs have already been handled
        const Monomial l = Monomial::lcm(li, lj);
        bool skip = false;
        for (std::size_t k = 0; k < g.size() && !skip; ++k) {
            if (k == i || k == j) continue;
            if (!leading_term(g[k], order).mono.divides(l)) continue;
            const Pair ik{std::min(i, k), std::max(i, k)};
            const Pair jk{std::min(j, k), std::max(j, k)};
            if (!pending.count(ik) && !pending.count(jk)) skip = true;
        }
        if (skip) continue;

        const Polynomial r = normal_form_impl(s_polynomial(g[i], g[j], order), g, order);
        if (r.is_zero()) continue;

        const std::size_t idx = g.size();
        g.push_back(make_monic(r, order));
        for (std::size_t k = 0; k < idx; ++k) pending.insert({k, idx});
    }

    // auto-reduce to the unique reduced basis
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < g.size(); ++i) {
            std::vector<Polynomial> others;
            others.reserve(g.size() - 1);
            for (std::size_t k = 0; k < g.size(); ++k)
                if (k != i) others.push_back(g[k]);
            const Polynomial r = normal_form_impl(g[i], others, order);
            if (r.is_zero()) {
                g.erase(g.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
            const Polynomial m = make_monic(r, order);
            if (m != g[i]) {
                g[i] = m;
                changed = true;
            }
        }
    }

    sort_elements(g, order);
    return GroebnerBasis(pres.ring, order, std::move(g));
}

// ===== Quotient basis =====

std::vector<Monomial> quotient_basis(const GroebnerBasis& gb) {
    const std::size_t n = gb.ring()->nvars();
    std::vector<Monomial> lms;
    for (const auto& g : gb.elements()) lms.push_back(leading_term(g, gb.order()).mono);

    // finite dimension needs a pure power of every variable among the
    // leading monomials
    std::vector<std::uint32_t> bound(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        for (const auto& m : lms) {
            if (m.exponent(v) == 0 || m.total_degree() != m.exponent(v)) continue;
            if (bound[v] == 0 || m.exponent(v) < bound[v]) bound[v] = m.exponent(v);
        }
        if (bound[v] == 0)
            throw InfiniteDimensionalError(
                "the quotient is infinite-dimensional: no power of " + gb.ring()->var(v) +
                " lies in the leading-term ideal");
    }

    std::vector<Monomial> out;
    Monomial m = Monomial::unit(n);
    // odometer over the box [0, bound) in each variable
    while (true) {
        bool standard = true;
        for (const auto& lm : lms)
            if (lm.divides(m)) {
                standard = false;
                break;
            }
        if (standard) out.push_back(m);

        std::size_t v = 0;
        while (v < n) {
            if (m.exponent(v) + 1 < bound[v]) {
                m.set_exponent(v, m.exponent(v) + 1);
                break;
            }
            m.set_exponent(v, 0);
            ++v;
        }
        if (v == n) break;
    }

    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
        if (a.total_degree() != b.total_degree())
            return a.total_degree() < b.total_degree();
        return gb.order().compare(a, b) > 0;
    });
    return out;
}

// ===== Quotient algebra =====

AlgebraPtr algebra_from_presentation(const IdealPresentation& pres,
                                     const MonomialOrder& order) {
    const GroebnerBasis gb = buchberger(pres, order);
    const std::vector<Monomial> basis = quotient_basis(gb);
    if (basis.empty() || !basis.front().is_unit())
        throw Error("quotient basis lacks the unit monomial");  // cannot happen for proper ideals

    const std::size_t n = basis.size() - 1;
    std::map<Monomial, std::size_t, GrlexDescending> position;
    for (std::size_t k = 0; k < basis.size(); ++k) position.emplace(basis[k], k);

    LocalAlgebra::Table upper(n, std::vector<std::vector<Rational>>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const Polynomial prod = Polynomial::term(
                pres.ring, basis[i + 1].times(basis[j + 1]), Rational(1));
            const Polynomial nf = normal_form(prod, gb);
            std::vector<Rational> coords(n + 1);
            for (const auto& [m, c] : nf.terms()) {
                auto it = position.find(m);
                if (it == position.end())
                    throw Error("normal form left a non-standard monomial");  // contradiction
                coords[it->second] = c;
            }
            upper[i][j] = std::move(coords);
        }
    }

    std::vector<std::string> labels;
    for (std::size_t k = 1; k <= n; ++k) labels.push_back("s" + std::to_string(k));

    AlgebraPtr a = LocalAlgebra::from_upper_triangle(std::move(labels), upper);
    try {
        nilpotency_index(*a);
    } catch (const NotNilpotentError&) {
        throw NotLocalError("the quotient algebra is not local: " + pres.str());
    }
    return a;
}

AlgebraPtr algebra_from_presentation(const IdealPresentation& pres) {
    return algebra_from_presentation(pres, MonomialOrder::grevlex(pres.ring->nvars()));
}

}  // namespace addact
