#pragma once

// Sparse multivariate polynomials with exact rational coefficients over an
// explicit, ordered variable universe (Ring). Terms are stored in the
// canonical print order (graded-lex descending), so iteration order and
// text output always agree.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "addact/errors.hpp"
#include "addact/monomial.hpp"
#include "addact/rational.hpp"

namespace addact {

// An immutable, ordered list of variable names. Shared by pointer; two rings
// are interchangeable when their name lists are equal.
class Ring {
public:
    explicit Ring(std::vector<std::string> vars);

    static std::shared_ptr<const Ring> make(std::vector<std::string> vars);
    // x1..xn style: numbered(prefix, n)
    static std::shared_ptr<const Ring> numbered(std::string_view prefix, std::size_t n);

    std::size_t nvars() const { return vars_.size(); }
    const std::string& var(std::size_t i) const { return vars_[i]; }
    const std::vector<std::string>& vars() const { return vars_; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    bool operator==(const Ring& o) const { return vars_ == o.vars_; }
    bool operator!=(const Ring& o) const { return vars_ != o.vars_; }

private:
    std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const Ring>;

// All of a's variables followed by those of b not already present (merged by
// name). The shared universe for cross-ring operations.
RingPtr union_ring(const RingPtr& a, const RingPtr& b);

bool same_ring(const RingPtr& a, const RingPtr& b);

class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GrlexDescending>;

    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {
        if (!ring_) throw Error("polynomial needs a ring");
    }

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(RingPtr ring, Rational c);
    static Polynomial one(RingPtr ring) { return constant(std::move(ring), Rational(1)); }
    static Polynomial variable(RingPtr ring, std::size_t index);
    static Polynomial term(RingPtr ring, Monomial m, Rational c);

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t term_count() const { return terms_.size(); }

    Rational coefficient(const Monomial& m) const;
    Rational constant_term() const;
    std::uint32_t total_degree() const;  // 0 for the zero polynomial
    bool involves(std::size_t var) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial p, const Rational& c) { return p *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial p) { return p *= c; }

    Polynomial pow(std::uint32_t k) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Canonical text form: terms in graded-lex descending order, " + "/" - "
    // separators, unit coefficients elided, '*' between factors, '^' for
    // exponents >= 2; the zero polynomial prints as "0".
    std::string str() const;

    void add_term(const Monomial& m, const Rational& c);  // += c*m

private:
    RingPtr ring_;
    TermMap terms_;
};

// c * m * p in one pass.
Polynomial term_product(const Polynomial& p, const Monomial& m, const Rational& c);

// Simultaneous substitution: one image per variable of p's ring, all images
// over one common ring (the result's ring). For a variable-free p the result
// is the same constant over p's own ring.
Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images);

// p(x + shift): symbolic shifts live in their own ring; the result lives over
// union_ring(p.ring(), shift ring). Rational shifts keep p's ring.
Polynomial translate(const Polynomial& p, std::span<const Polynomial> shifts);
Polynomial translate(const Polynomial& p, std::span<const Rational> shifts);

// Rewrite p over a larger universe that contains every variable of p's ring
// by name.
Polynomial embed(const Polynomial& p, const RingPtr& bigger);

// Regroup p by the monomials in the selected variables. sel/rest give the
// positions (in p's ring) of the selected and remaining variables and must
// partition the ring; sel_ring/rest_ring name them in the same order. The
// result maps each selected-variable monomial to its cofactor over rest_ring.
std::map<Monomial, Polynomial, GrlexDescending> regroup(
    const Polynomial& p,
    std::span<const std::size_t> sel, const RingPtr& sel_ring,
    std::span<const std::size_t> rest, const RingPtr& rest_ring);

}  // namespace addact
