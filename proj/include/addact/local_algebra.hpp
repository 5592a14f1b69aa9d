#pragma once

// Finite-dimensional commutative local algebras over Q, presented by a
// structure-constant table on a basis 1 = e0, s1, ..., sn of A = Q·1 ⊕ m,
// together with elements over scalar (rational) or polynomial coordinates
// and the exp/log correspondence between m and 1 + m.

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "addact/errors.hpp"
#include "addact/polynomial.hpp"
#include "addact/rational.hpp"

namespace addact {

class LocalAlgebra {
public:
    // coords of s_{i+1} * s_{j+1}, each of length n+1: slot 0 is the
    // coefficient of 1 (zero for any genuine local algebra — the unit slot
    // exists so that corrupted tables remain representable for diagnostics),
    // slot k >= 1 the coefficient of s_k.
    using Table = std::vector<std::vector<std::vector<Rational>>>;

    // labels: n maximal-ideal generator names (the unit's label "1" is
    // implicit). upper[i][j] for i <= j only; mirrored to a symmetric table.
    static std::shared_ptr<const LocalAlgebra> from_upper_triangle(
        std::vector<std::string> labels, const Table& upper);

    // Full (possibly asymmetric) grid, for diagnostics on corrupted tables.
    static std::shared_ptr<const LocalAlgebra> from_full_table(
        std::vector<std::string> labels, Table table);

    std::size_t dim() const { return labels_.size(); }     // n + 1
    std::size_t mdim() const { return labels_.size() - 1; }  // n

    // label(0) == "1"; label(k) for k >= 1 names s_k.
    const std::string& label(std::size_t k) const { return labels_[k]; }

    // coords (length n+1) of s_{i+1} * s_{j+1}, 0-based i, j < n.
    std::span<const Rational> product(std::size_t i, std::size_t j) const;

    bool table_symmetric() const;

private:
    LocalAlgebra(std::vector<std::string> labels, Table table);

    std::vector<std::string> labels_;  // size n+1, labels_[0] == "1"
    Table table_;                      // n x n grid of (n+1)-coordinate vectors
};

using AlgebraPtr = std::shared_ptr<const LocalAlgebra>;

// ===== Elements =====

// Coordinate-kind helpers so Element works over Rational and Polynomial
// coordinates alike. The sample argument supplies the ring where needed.
inline Rational coeff_zero(const Rational&) { return Rational(); }
inline Rational coeff_one(const Rational&) { return Rational(1); }
inline bool coeff_is_zero(const Rational& v) { return v.is_zero(); }
inline bool coeff_is_one(const Rational& v) { return v.is_one(); }
inline Rational coeff_scale(const Rational& v, const Rational& c) { return v * c; }

inline Polynomial coeff_zero(const Polynomial& sample) { return Polynomial::zero(sample.ring()); }
inline Polynomial coeff_one(const Polynomial& sample) { return Polynomial::one(sample.ring()); }
inline bool coeff_is_zero(const Polynomial& v) { return v.is_zero(); }
inline bool coeff_is_one(const Polynomial& v) { return v == Polynomial::one(v.ring()); }
inline Polynomial coeff_scale(const Polynomial& v, const Rational& c) { return v * c; }

inline void validate_element_coords(const std::vector<Rational>&) {}
inline void validate_element_coords(const std::vector<Polynomial>& coords) {
    for (const auto& c : coords)
        if (!same_ring(c.ring(), coords.front().ring()))
            throw RingMismatchError("element coordinates live over different rings");
}

template <class K>
class Element {
public:
    Element(AlgebraPtr algebra, std::vector<K> coords)
        : alg_(std::move(algebra)), coords_(std::move(coords)) {
        if (!alg_) throw Error("element needs an algebra");
        if (coords_.size() != alg_->dim())
            throw ArityError("element needs " + std::to_string(alg_->dim()) +
                             " coordinates, got " + std::to_string(coords_.size()));
        validate_element_coords(coords_);
    }

    const AlgebraPtr& algebra() const { return alg_; }
    const std::vector<K>& coords() const { return coords_; }
    const K& coord(std::size_t k) const { return coords_[k]; }

    bool is_zero() const {
        for (const auto& c : coords_)
            if (!coeff_is_zero(c)) return false;
        return true;
    }

    bool operator==(const Element& o) const {
        return alg_ == o.alg_ && coords_ == o.coords_;
    }
    bool operator!=(const Element& o) const { return !(*this == o); }

private:
    AlgebraPtr alg_;
    std::vector<K> coords_;
};

using AlgebraElement = Element<Rational>;
using GenericElement = Element<Polynomial>;

template <class K>
void check_same_algebra(const Element<K>& a, const Element<K>& b) {
    if (a.algebra() != b.algebra())
        throw RingMismatchError("elements belong to different algebras");
}

template <class K>
Element<K> operator+(const Element<K>& a, const Element<K>& b) {
    check_same_algebra(a, b);
    std::vector<K> r = a.coords();
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = r[k] + b.coord(k);
    return Element<K>(a.algebra(), std::move(r));
}

template <class K>
Element<K> operator-(const Element<K>& a, const Element<K>& b) {
    check_same_algebra(a, b);
    std::vector<K> r = a.coords();
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = r[k] - b.coord(k);
    return Element<K>(a.algebra(), std::move(r));
}

template <class K>
Element<K> scalar_mul(const Rational& c, const Element<K>& a) {
    std::vector<K> r = a.coords();
    for (auto& v : r) v = coeff_scale(v, c);
    return Element<K>(a.algebra(), std::move(r));
}

// The structure-constant bilinear product. Uses the stored (i, j) entry for
// the i-from-a, j-from-b pair, so asymmetric diagnostic tables multiply
// exactly as stored.
template <class K>
Element<K> elem_mul(const Element<K>& a, const Element<K>& b) {
    check_same_algebra(a, b);
    const LocalAlgebra& alg = *a.algebra();
    const std::size_t n = alg.mdim();
    const K zero = coeff_zero(a.coord(0));

    std::vector<K> r(n + 1, zero);
    r[0] = a.coord(0) * b.coord(0);
    for (std::size_t k = 1; k <= n; ++k)
        r[k] = a.coord(0) * b.coord(k) + b.coord(0) * a.coord(k);
    for (std::size_t i = 1; i <= n; ++i) {
        if (coeff_is_zero(a.coord(i))) continue;
        for (std::size_t j = 1; j <= n; ++j) {
            if (coeff_is_zero(b.coord(j))) continue;
            const K p = a.coord(i) * b.coord(j);
            const auto c = alg.product(i - 1, j - 1);
            for (std::size_t k = 0; k <= n; ++k)
                if (!c[k].is_zero()) r[k] = r[k] + coeff_scale(p, c[k]);
        }
    }
    return Element<K>(a.algebra(), std::move(r));
}

// ===== Canonical elements =====

AlgebraElement unit_element(const AlgebraPtr& a);
AlgebraElement zero_element(const AlgebraPtr& a);
AlgebraElement basis_element(const AlgebraPtr& a, std::size_t k);  // k = 0 => 1

GenericElement generic_zero(const AlgebraPtr& a, const RingPtr& ring);
GenericElement generic_unit(const AlgebraPtr& a, const RingPtr& ring);
// x1*s1 + ... + xn*sn over a ring with exactly n variables.
GenericElement generic_m_element(const AlgebraPtr& a, const RingPtr& ring);
// 1 + x1*s1 + ... + xn*sn.
GenericElement generic_unipotent(const AlgebraPtr& a, const RingPtr& ring);

GenericElement embed_element(const GenericElement& e, const RingPtr& bigger);
GenericElement to_generic(const AlgebraElement& e, const RingPtr& ring);

// ===== Invariants =====

// Smallest d with m^d = 0; throws NotNilpotentError when the chain of powers
// fails to reach zero within dim(A) steps.
std::size_t nilpotency_index(const LocalAlgebra& a);

// h_k = dim(m^k) - dim(m^{k+1}) for k = 0, 1, ...; starts with h_0 = 1 and
// has nilpotency_index entries, all positive.
std::vector<std::size_t> hilbert_function(const LocalAlgebra& a);

// Largest k >= 1 with s_{i+1} in m^k (0-based i).
std::size_t filtration_level(const LocalAlgebra& a, std::size_t i);

// True when filtration levels are non-decreasing along s1, ..., sn, i.e. the
// basis is compatible with the maximal-ideal filtration.
bool filtration_compatible(const LocalAlgebra& a);

// ===== exp / log =====

// Truncated exponential series; requires zero unit coordinate.
template <class K>
Element<K> exp(const Element<K>& a);

// Truncated logarithm series; requires unit coordinate exactly 1.
template <class K>
Element<K> log(const Element<K>& u);

extern template Element<Rational> exp(const Element<Rational>&);
extern template Element<Polynomial> exp(const Element<Polynomial>&);
extern template Element<Rational> log(const Element<Rational>&);
extern template Element<Polynomial> log(const Element<Polynomial>&);

// ===== Axiom diagnostics =====

struct AxiomReport {
    bool commutative = false;
    bool associative = false;
    bool unital = false;
    bool nilpotent = false;
    std::string detail;  // first failure witness, empty when all pass

    bool all_pass() const { return commutative && associative && unital && nilpotent; }
};

AxiomReport check_axioms(const LocalAlgebra& a);

// ===== Printing =====

// "1 + x1*s1 + (1/2*x1^2 + x2)*s2" style; multi-term polynomial coordinates
// are parenthesized, zero coordinates skipped, the zero element prints "0".
std::string element_str(const AlgebraElement& e);
std::string element_str(const GenericElement& e);

}  // namespace addact
