#include "addact/polynomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace addact {

// ===== Ring =====

Ring::Ring(std::vector<std::string> vars) : vars_(std::move(vars)) {
    std::set<std::string> seen;
    for (const auto& v : vars_) {
        if (v.empty()) throw Error("empty variable name");
        if (!seen.insert(v).second)
            throw Error("duplicate variable name '" + v + "'");
    }
}

RingPtr Ring::make(std::vector<std::string> vars) {
    return std::make_shared<const Ring>(std::move(vars));
}

RingPtr Ring::numbered(std::string_view prefix, std::size_t n) {
    std::vector<std::string> vars;
    vars.reserve(n);
    for (std::size_t i = 1; i <= n; ++i)
        vars.push_back(std::string(prefix) + std::to_string(i));
    return make(std::move(vars));
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return i;
    return std::nullopt;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

RingPtr union_ring(const RingPtr& a, const RingPtr& b) {
    if (same_ring(a, b)) return a;
    std::vector<std::string> vars = a->vars();
    for (const auto& v : b->vars())
        if (!a->index_of(v)) vars.push_back(v);
    return Ring::make(std::move(vars));
}

namespace {

void check_rings(const Polynomial& a, const Polynomial& b) {
    if (!same_ring(a.ring(), b.ring()))
        throw RingMismatchError(
            "polynomials live over different rings; embed them into a common "
            "universe first");
}

}  // namespace

// ===== Polynomial construction =====

Polynomial Polynomial::constant(RingPtr ring, Rational c) {
    Polynomial p(std::move(ring));
    if (!c.is_zero()) p.terms_.emplace(Monomial::unit(p.ring_->nvars()), std::move(c));
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
    if (index >= ring->nvars()) throw ArityError("variable index out of range");
    Polynomial p(std::move(ring));
    Monomial m = Monomial::unit(p.ring_->nvars());
    m.set_exponent(index, 1);
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, Rational c) {
    if (m.nvars() != ring->nvars())
        throw RingMismatchError("monomial universe does not match the ring");
    Polynomial p(std::move(ring));
    if (!c.is_zero()) p.terms_.emplace(std::move(m), std::move(c));
    return p;
}

// ===== Queries =====

bool Polynomial::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first.is_unit();
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational() : it->second;
}

Rational Polynomial::constant_term() const {
    return coefficient(Monomial::unit(ring_->nvars()));
}

std::uint32_t Polynomial::total_degree() const {
    if (terms_.empty()) return 0;
    // storage is graded descending, so the first term has maximal degree
    return terms_.begin()->first.total_degree();
}

bool Polynomial::involves(std::size_t var) const {
    for (const auto& [m, c] : terms_)
        if (m.exponent(var) != 0) return true;
    return false;
}

// ===== Arithmetic =====

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_rings(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_rings(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_rings(a, b);
    Polynomial r(a.ring());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms())
            r.add_term(ma.times(mb), ca * cb);
    return r;
}

Polynomial Polynomial::pow(std::uint32_t k) const {
    Polynomial r = one(ring_);
    for (std::uint32_t i = 0; i < k; ++i) r = r * (*this);
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    return same_ring(ring_, o.ring_) && terms_ == o.terms_;
}

Polynomial term_product(const Polynomial& p, const Monomial& m, const Rational& c) {
    if (m.nvars() != p.ring()->nvars())
        throw RingMismatchError("monomial universe does not match the ring");
    Polynomial r(p.ring());
    if (c.is_zero()) return r;
    for (const auto& [pm, pc] : p.terms()) r.add_term(pm.times(m), pc * c);
    return r;
}

// ===== Printing =====

namespace {

std::string monomial_str(const Monomial& m, const Ring& ring) {
    std::string out;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
        std::uint32_t e = m.exponent(i);
        if (e == 0) continue;
        if (!out.empty()) out += "*";
        out += ring.var(i);
        if (e >= 2) out += "^" + std::to_string(e);
    }
    return out;
}

}  // namespace

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool neg = c.sign() < 0;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        const Rational a = c.abs();
        if (m.is_unit()) {
            out += a.str();
        } else {
            if (!a.is_one()) out += a.str() + "*";
            out += monomial_str(m, *ring_);
        }
    }
    return out;
}

// ===== Substitution, embedding, translation =====

Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images) {
    const std::size_t n = p.ring()->nvars();
    if (images.size() != n)
        throw ArityError("substitute: expected " + std::to_string(n) + " images, got " +
                         std::to_string(images.size()));
    if (n == 0) return p;  // constants over the empty ring

    const RingPtr target = images[0].ring();
    for (const auto& im : images)
        if (!same_ring(im.ring(), target))
            throw RingMismatchError("substitute: images live over different rings");

    // cache powers of each image up to the largest exponent used
    std::vector<std::uint32_t> max_exp(n, 0);
    for (const auto& [m, c] : p.terms())
        for (std::size_t i = 0; i < n; ++i)
            max_exp[i] = std::max(max_exp[i], m.exponent(i));

    std::vector<std::vector<Polynomial>> powers(n);
    for (std::size_t i = 0; i < n; ++i) {
        powers[i].push_back(Polynomial::one(target));
        for (std::uint32_t e = 1; e <= max_exp[i]; ++e)
            powers[i].push_back(powers[i].back() * images[i]);
    }

    Polynomial r(target);
    for (const auto& [m, c] : p.terms()) {
        Polynomial t = Polynomial::constant(target, c);
        for (std::size_t i = 0; i < n; ++i)
            if (m.exponent(i) != 0) t = t * powers[i][m.exponent(i)];
        r += t;
    }
    return r;
}

Polynomial embed(const Polynomial& p, const RingPtr& bigger) {
    if (same_ring(p.ring(), bigger)) return p;
    const std::size_t n = p.ring()->nvars();
    std::vector<std::size_t> where(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto idx = bigger->index_of(p.ring()->var(i));
        if (!idx)
            throw RingMismatchError("embed: target ring lacks variable '" +
                                    p.ring()->var(i) + "'");
        where[i] = *idx;
    }
    Polynomial r(bigger);
    for (const auto& [m, c] : p.terms()) {
        Monomial big = Monomial::unit(bigger->nvars());
        for (std::size_t i = 0; i < n; ++i) big.set_exponent(where[i], m.exponent(i));
        r.add_term(big, c);
    }
    return r;
}

Polynomial translate(const Polynomial& p, std::span<const Polynomial> shifts) {
    const std::size_t n = p.ring()->nvars();
    if (shifts.size() != n)
        throw ArityError("translate: expected one shift per variable");
    if (n == 0) return p;

    const RingPtr shift_ring = shifts[0].ring();
    for (const auto& s : shifts)
        if (!same_ring(s.ring(), shift_ring))
            throw RingMismatchError("translate: shifts live over different rings");

    const RingPtr u = union_ring(p.ring(), shift_ring);
    std::vector<Polynomial> images;
    images.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial img = embed(Polynomial::variable(p.ring(), i), u);
        img += embed(shifts[i], u);
        images.push_back(std::move(img));
    }
    return substitute(p, images);
}

Polynomial translate(const Polynomial& p, std::span<const Rational> shifts) {
    const std::size_t n = p.ring()->nvars();
    if (shifts.size() != n)
        throw ArityError("translate: expected one shift per variable");
    std::vector<Polynomial> images;
    images.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial img = Polynomial::variable(p.ring(), i);
        img += Polynomial::constant(p.ring(), shifts[i]);
        images.push_back(std::move(img));
    }
    return substitute(p, images);
}

std::map<Monomial, Polynomial, GrlexDescending> regroup(
    const Polynomial& p,
    std::span<const std::size_t> sel, const RingPtr& sel_ring,
    std::span<const std::size_t> rest, const RingPtr& rest_ring) {
    const std::size_t n = p.ring()->nvars();
    if (sel.size() + rest.size() != n ||
        sel.size() != sel_ring->nvars() || rest.size() != rest_ring->nvars())
        throw ArityError("regroup: sel/rest must partition the ring");
    std::vector<bool> covered(n, false);
    for (auto i : sel) covered.at(i) = true;
    for (auto i : rest) {
        if (covered.at(i)) throw ArityError("regroup: sel/rest overlap");
        covered[i] = true;
    }

    std::map<Monomial, Polynomial, GrlexDescending> out;
    for (const auto& [m, c] : p.terms()) {
        Monomial ms = Monomial::unit(sel.size());
        for (std::size_t k = 0; k < sel.size(); ++k) ms.set_exponent(k, m.exponent(sel[k]));
        Monomial mr = Monomial::unit(rest.size());
        for (std::size_t k = 0; k < rest.size(); ++k) mr.set_exponent(k, m.exponent(rest[k]));
        auto it = out.find(ms);
        if (it == out.end())
            it = out.emplace(std::move(ms), Polynomial::zero(rest_ring)).first;
        it->second.add_term(mr, c);
    }
    return out;
}

}  // namespace addact
