#pragma once

// Groebner bases for the zero-dimensional ideals that present finite local
// algebras: Buchberger's algorithm with the product and chain pair-skipping
// criteria, full normal forms, and the standard-monomial basis of the
// quotient.

#include <cstddef>
#include <memory>
#include <vector>

#include "addact/monomial.hpp"
#include "addact/polynomial.hpp"

namespace addact {

class LocalAlgebra;

// Generators of an ideal inside the maximal ideal (S1, ..., Sm): each one
// nonzero with zero constant term.
struct IdealPresentation {
    RingPtr ring;
    std::vector<Polynomial> generators;

    IdealPresentation(RingPtr ring_, std::vector<Polynomial> generators_);

    // "Q[S1,S2]/(S1*S2, S1^3 - S2^2)" with canonical polynomial text.
    std::string str() const;
};

// Leading term of a nonzero polynomial under the given order.
struct Term {
    Monomial mono;
    Rational coeff;
};
Term leading_term(const Polynomial& p, const MonomialOrder& order);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const MonomialOrder& order);

class GroebnerBasis {
public:
    GroebnerBasis(RingPtr ring, MonomialOrder order, std::vector<Polynomial> elements);

    const RingPtr& ring() const { return ring_; }
    const MonomialOrder& order() const { return order_; }
    // Monic, auto-reduced, sorted by ascending leading-monomial degree and
    // descending monomial order within a degree.
    const std::vector<Polynomial>& elements() const { return elements_; }

private:
    RingPtr ring_;
    MonomialOrder order_;
    std::vector<Polynomial> elements_;
};

// Buchberger with normal pair selection; throws SPairLimitError after
// max_pairs S-pairs have been taken off the queue.
GroebnerBasis buchberger(const IdealPresentation& pres, const MonomialOrder& order,
                         std::size_t max_pairs = 10000);

// Full remainder of p on division by the basis: no monomial of the result is
// divisible by any leading monomial.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

// Monomials outside the leading-term ideal, sorted ascending by total degree
// and descending by the basis order within a degree. Throws
// InfiniteDimensionalError when the quotient has infinite dimension.
std::vector<Monomial> quotient_basis(const GroebnerBasis& gb);

// The quotient algebra Q[S]/I as a structure-constant table over the
// standard-monomial basis (unit first). Throws NotLocalError when the
// generators' images fail to be nilpotent.
std::shared_ptr<const LocalAlgebra> algebra_from_presentation(
    const IdealPresentation& pres,
    const MonomialOrder& order);
std::shared_ptr<const LocalAlgebra> algebra_from_presentation(
    const IdealPresentation& pres);  // grevlex, natural precedence

}  // namespace addact
