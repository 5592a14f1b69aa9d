#include "addact/local_algebra.hpp"

#include <algorithm>

#include "addact/linalg.hpp"

namespace addact {

// ===== Construction =====

LocalAlgebra::LocalAlgebra(std::vector<std::string> labels, Table table)
    : labels_(std::move(labels)), table_(std::move(table)) {
    const std::size_t n = labels_.size() - 1;
    if (labels_.empty() || labels_[0] != "1")
        throw Error("algebra basis must start with the unit label '1'");
    for (std::size_t k = 1; k <= n; ++k) {
        if (labels_[k].empty() || labels_[k] == "1")
            throw Error("invalid generator label");
        for (std::size_t l = 1; l < k; ++l)
            if (labels_[k] == labels_[l]) throw Error("duplicate generator label '" + labels_[k] + "'");
    }
    if (table_.size() != n) throw ArityError("structure-constant table has wrong size");
    for (const auto& row : table_) {
        if (row.size() != n) throw ArityError("structure-constant table has wrong size");
        for (const auto& coords : row)
            if (coords.size() != n + 1)
                throw ArityError("structure-constant entry needs " +
                                 std::to_string(n + 1) + " coordinates");
    }
}

AlgebraPtr LocalAlgebra::from_upper_triangle(std::vector<std::string> labels,
                                             const Table& upper) {
    const std::size_t n = labels.size();
    if (upper.size() != n) throw ArityError("upper-triangle table has wrong size");
    Table full(n, std::vector<std::vector<Rational>>(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (upper[i].size() != n) throw ArityError("upper-triangle table has wrong size");
        for (std::size_t j = i; j < n; ++j) {
            full[i][j] = upper[i][j];
            full[j][i] = upper[i][j];
        }
    }
    std::vector<std::string> with_unit;
    with_unit.reserve(n + 1);
    with_unit.push_back("1");
    for (auto& l : labels) with_unit.push_back(std::move(l));
    return AlgebraPtr(new LocalAlgebra(std::move(with_unit), std::move(full)));
}

AlgebraPtr LocalAlgebra::from_full_table(std::vector<std::string> labels, Table table) {
    std::vector<std::string> with_unit;
    with_unit.reserve(labels.size() + 1);
    with_unit.push_back("1");
    for (auto& l : labels) with_unit.push_back(std::move(l));
    return AlgebraPtr(new LocalAlgebra(std::move(with_unit), std::move(table)));
}

std::span<const Rational> LocalAlgebra::product(std::size_t i, std::size_t j) const {
    return table_[i][j];
}

bool LocalAlgebra::table_symmetric() const {
    const std::size_t n = mdim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (table_[i][j] != table_[j][i]) return false;
    return true;
}

// ===== Canonical elements =====

AlgebraElement unit_element(const AlgebraPtr& a) {
    std::vector<Rational> c(a->dim());
    c[0] = Rational(1);
    return AlgebraElement(a, std::move(c));
}

AlgebraElement zero_element(const AlgebraPtr& a) {
    return AlgebraElement(a, std::vector<Rational>(a->dim()));
}

AlgebraElement basis_element(const AlgebraPtr& a, std::size_t k) {
    if (k >= a->dim()) throw ArityError("basis index out of range");
    std::vector<Rational> c(a->dim());
    c[k] = Rational(1);
    return AlgebraElement(a, std::move(c));
}

GenericElement generic_zero(const AlgebraPtr& a, const RingPtr& ring) {
    return GenericElement(a, std::vector<Polynomial>(a->dim(), Polynomial::zero(ring)));
}

GenericElement generic_unit(const AlgebraPtr& a, const RingPtr& ring) {
    std::vector<Polynomial> c(a->dim(), Polynomial::zero(ring));
    c[0] = Polynomial::one(ring);
    return GenericElement(a, std::move(c));
}

GenericElement generic_m_element(const AlgebraPtr& a, const RingPtr& ring) {
    if (ring->nvars() != a->mdim())
        throw ArityError("generic element needs one variable per generator");
    std::vector<Polynomial> c(a->dim(), Polynomial::zero(ring));
    for (std::size_t k = 1; k < a->dim(); ++k)
        c[k] = Polynomial::variable(ring, k - 1);
    return GenericElement(a, std::move(c));
}

GenericElement generic_unipotent(const AlgebraPtr& a, const RingPtr& ring) {
    GenericElement e = generic_m_element(a, ring);
    return e + generic_unit(a, ring);
}

GenericElement embed_element(const GenericElement& e, const RingPtr& bigger) {
    std::vector<Polynomial> c;
    c.reserve(e.coords().size());
    for (const auto& p : e.coords()) c.push_back(embed(p, bigger));
    return GenericElement(e.algebra(), std::move(c));
}

GenericElement to_generic(const AlgebraElement& e, const RingPtr& ring) {
    std::vector<Polynomial> c;
    c.reserve(e.coords().size());
    for (const auto& v : e.coords()) c.push_back(Polynomial::constant(ring, v));
    return GenericElement(e.algebra(), std::move(c));
}

// ===== Filtration invariants =====

namespace {

// Echelonized bases of m^1, m^2, ... down to (and excluding) zero; throws
// NotNilpotentError when the chain has not reached zero after dim steps.
std::vector<std::vector<std::vector<Rational>>> power_chain(const LocalAlgebra& a) {
    const std::size_t n = a.mdim();
    // non-owning view of the algebra: elem_mul needs an AlgebraPtr, so wrap
    // a shared_ptr with a no-op deleter for internal use
    const AlgebraPtr self(&a, [](const LocalAlgebra*) {});

    std::vector<std::vector<std::vector<Rational>>> chain;
    std::vector<std::vector<Rational>> current;
    for (std::size_t k = 1; k <= n; ++k)
        current.push_back(basis_element(self, k).coords());
    {
        SpanBuilder sb(n + 1);
        for (auto& v : current) sb.insert(std::move(v));
        current = sb.basis();
    }

    while (!current.empty()) {
        chain.push_back(current);
        if (chain.size() > a.dim())
            throw NotNilpotentError("maximal-ideal powers never reach zero");
        SpanBuilder next(n + 1);
        for (const auto& v : current) {
            const AlgebraElement ev(self, v);
            for (std::size_t j = 1; j <= n; ++j)
                next.insert(elem_mul(ev, basis_element(self, j)).coords());
        }
        current = next.basis();
    }
    return chain;
}

}  // namespace

std::size_t nilpotency_index(const LocalAlgebra& a) {
    return power_chain(a).size() + 1;
}

std::vector<std::size_t> hilbert_function(const LocalAlgebra& a) {
    const auto chain = power_chain(a);
    std::vector<std::size_t> dims;
    dims.push_back(a.dim());
    for (const auto& level : chain) dims.push_back(level.size());
    dims.push_back(0);
    std::vector<std::size_t> h;
    for (std::size_t k = 0; k + 1 < dims.size(); ++k) h.push_back(dims[k] - dims[k + 1]);
    return h;
}

std::size_t filtration_level(const LocalAlgebra& a, std::size_t i) {
    if (i >= a.mdim()) throw ArityError("generator index out of range");
    const auto chain = power_chain(a);
    std::vector<Rational> v(a.dim());
    v[i + 1] = Rational(1);
    std::size_t level = 0;
    for (std::size_t k = 0; k < chain.size(); ++k) {
        SpanBuilder sb(a.dim());
        for (const auto& row : chain[k]) sb.insert(row);
        if (sb.contains(v)) level = k + 1;
    }
    if (level == 0) throw Error("generator does not lie in the maximal ideal");
    return level;
}

bool filtration_compatible(const LocalAlgebra& a) {
    std::size_t prev = 1;
    for (std::size_t i = 0; i < a.mdim(); ++i) {
        const std::size_t l = filtration_level(a, i);
        if (l < prev) return false;
        prev = l;
    }
    return true;
}

// ===== exp / log =====

template <class K>
Element<K> exp(const Element<K>& a) {
    if (!coeff_is_zero(a.coord(0)))
        throw NotInMaximalIdealError("exp needs an element of the maximal ideal");
    const std::size_t d = nilpotency_index(*a.algebra());
    Element<K> result = a;  // unit + a, assembled below
    {
        std::vector<K> c = result.coords();
        c[0] = c[0] + coeff_one(c[0]);
        result = Element<K>(a.algebra(), std::move(c));
    }
    Element<K> power = a;
    for (std::size_t k = 2; k < d; ++k) {
        power = elem_mul(power, a);
        result = result + scalar_mul(Rational(1) / factorial(static_cast<unsigned>(k)), power);
    }
    return result;
}

template <class K>
Element<K> log(const Element<K>& u) {
    if (!coeff_is_one(u.coord(0)))
        throw NotUnipotentUnitError("log needs unit coordinate exactly 1");
    std::vector<K> xc = u.coords();
    xc[0] = coeff_zero(xc[0]);
    const Element<K> x(u.algebra(), std::move(xc));
    const std::size_t d = nilpotency_index(*u.algebra());
    Element<K> result = x;
    Element<K> power = x;
    for (std::size_t k = 2; k < d; ++k) {
        power = elem_mul(power, x);
        const Rational c = Rational(k % 2 == 0 ? -1 : 1, static_cast<long long>(k));
        result = result + scalar_mul(c, power);
    }
    return result;
}

template Element<Rational> exp(const Element<Rational>&);
template Element<Polynomial> exp(const Element<Polynomial>&);
template Element<Rational> log(const Element<Rational>&);
template Element<Polynomial> log(const Element<Polynomial>&);

// ===== Axiom diagnostics =====

AxiomReport check_axioms(const LocalAlgebra& a) {
    AxiomReport rep;
    const AlgebraPtr self(&a, [](const LocalAlgebra*) {});
    const std::size_t n = a.mdim();

    rep.commutative = true;
    for (std::size_t i = 0; i < n && rep.commutative; ++i)
        for (std::size_t j = i + 1; j < n && rep.commutative; ++j) {
            const auto pij = a.product(i, j);
            const auto pji = a.product(j, i);
            if (!std::equal(pij.begin(), pij.end(), pji.begin(), pji.end())) {
                rep.commutative = false;
                rep.detail = a.label(i + 1) + "*" + a.label(j + 1) + " != " +
                             a.label(j + 1) + "*" + a.label(i + 1);
            }
        }

    rep.associative = true;
    for (std::size_t i = 1; i <= n && rep.associative; ++i)
        for (std::size_t j = 1; j <= n && rep.associative; ++j)
            for (std::size_t k = 1; k <= n && rep.associative; ++k) {
                const AlgebraElement si = basis_element(self, i);
                const AlgebraElement sj = basis_element(self, j);
                const AlgebraElement sk = basis_element(self, k);
                if (elem_mul(elem_mul(si, sj), sk) != elem_mul(si, elem_mul(sj, sk))) {
                    rep.associative = false;
                    if (rep.detail.empty())
                        rep.detail = "(" + a.label(i) + "*" + a.label(j) + ")*" + a.label(k) +
                                     " != " + a.label(i) + "*(" + a.label(j) + "*" + a.label(k) + ")";
                }
            }

    rep.unital = true;
    for (std::size_t k = 0; k <= n && rep.unital; ++k) {
        const AlgebraElement e = basis_element(self, k);
        const AlgebraElement u = unit_element(self);
        if (elem_mul(u, e) != e || elem_mul(e, u) != e) {
            rep.unital = false;
            if (rep.detail.empty()) rep.detail = "1*" + a.label(k) + " != " + a.label(k);
        }
    }

    try {
        nilpotency_index(a);
        rep.nilpotent = true;
    } catch (const NotNilpotentError&) {
        rep.nilpotent = false;
        if (rep.detail.empty()) rep.detail = "maximal-ideal powers never reach zero";
    }

    return rep;
}

// ===== Printing =====

namespace {

template <class K>
std::string element_str_impl(const Element<K>& e,
                             std::string (*coord_text)(const K&),
                             bool (*coord_is_negative_constant)(const K&),
                             K (*coord_negate)(const K&)) {
    const LocalAlgebra& a = *e.algebra();
    std::string out;
    bool first = true;
    for (std::size_t k = 0; k < e.coords().size(); ++k) {
        const K& c = e.coord(k);
        if (coeff_is_zero(c)) continue;

        K shown = c;
        std::string sep;
        if (first) {
            sep = "";
            if (coord_is_negative_constant(c)) {
                // fold the sign into a leading '-'
                out += "-";
                shown = coord_negate(c);
            }
            first = false;
        } else if (coord_is_negative_constant(c)) {
            sep = " - ";
            shown = coord_negate(c);
        } else {
            sep = " + ";
        }
        out += sep;

        const std::string text = coord_text(shown);
        if (k == 0) {
            out += text;
        } else if (text == "1") {
            out += a.label(k);
        } else {
            const bool needs_parens = text.find(' ') != std::string::npos;
            out += needs_parens ? "(" + text + ")" : text;
            out += "*" + a.label(k);
        }
    }
    return out.empty() ? "0" : out;
}

std::string rat_text(const Rational& r) { return r.str(); }
bool rat_neg(const Rational& r) { return r.sign() < 0; }
Rational rat_negate(const Rational& r) { return -r; }

std::string poly_text(const Polynomial& p) { return p.str(); }
// single-term polynomials with a negative coefficient fold their sign into
// the surrounding sum; multi-term coordinates are parenthesized instead
bool poly_neg(const Polynomial& p) {
    return p.term_count() == 1 && p.terms().begin()->second.sign() < 0;
}
Polynomial poly_negate(const Polynomial& p) { return -p; }

}  // namespace

std::string element_str(const AlgebraElement& e) {
    return element_str_impl<Rational>(e, rat_text, rat_neg, rat_negate);
}

std::string element_str(const GenericElement& e) {
    return element_str_impl<Polynomial>(e, poly_text, poly_neg, poly_negate);
}

}  // namespace addact
