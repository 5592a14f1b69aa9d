#pragma once

// Polynomial self-maps of affine n-space, triangular inversion, and the
// conjugation that carries any additive action to the coordinate-translation
// one: phi = (f1, ..., fn) built from the basic polynomials, its inverse via
// the logarithm, and the exact identity
//   f_i(x + y) = sum_j M(y)_ij * F_j(x),   F_0 = 1, F_j = f_j,
// checked as polynomials in Q[x1..xn, y1..yn].

#include <cstddef>
#include <string>
#include <vector>

#include "addact/local_algebra.hpp"
#include "addact/polynomial.hpp"

namespace addact {

class PolynomialMap {
public:
    PolynomialMap(RingPtr ring, std::vector<Polynomial> components);

    static PolynomialMap identity(RingPtr ring);

    const RingPtr& ring() const { return ring_; }
    std::size_t arity() const { return components_.size(); }
    const std::vector<Polynomial>& components() const { return components_; }
    const Polynomial& component(std::size_t i) const { return components_[i]; }

    // "(x1, x2 + 1/2*x1^2)"
    std::string str() const;

    bool operator==(const PolynomialMap& o) const;
    bool operator!=(const PolynomialMap& o) const { return !(*this == o); }

private:
    RingPtr ring_;
    std::vector<Polynomial> components_;
};

// (f o g)(x) = f(g(x)).
PolynomialMap compose(const PolynomialMap& f, const PolynomialMap& g);

// Inverse of a triangular map (xi + hi with hi over earlier variables) by
// forward substitution; throws NotTriangularError otherwise.
PolynomialMap invert_triangular(const PolynomialMap& f);

// The conjugating map phi = (f1, ..., fn) over x1..xn.
PolynomialMap phi_from_algebra(const AlgebraPtr& a);

// Coordinates of log(1 + x1*s1 + ... + xn*sn): the same inverse computed
// without inverting anything, via the logarithm series.
PolynomialMap phi_inverse_via_log(const AlgebraPtr& a);

// (x1 + f(x2), x2, ..., xn) for f depending on x2 only; an automorphism
// that is deliberately not triangular in the x1-first sense.
PolynomialMap shear_automorphism(const Polynomial& f, std::size_t n);

struct ConjugationReport {
    bool passed = false;
    RingPtr xring;
    RingPtr yring;
    // one entry per coordinate i = 1..n: f_i(x+y) - sum_j M(y)_ij F_j(x),
    // identically zero exactly when that coordinate checks out
    std::vector<Polynomial> diffs;

    std::string summary() const;
};

// Verifies the conjugation identity exactly, coordinate by coordinate.
ConjugationReport verify_conjugation(const AlgebraPtr& a);

}  // namespace addact
