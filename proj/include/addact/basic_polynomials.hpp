#pragma once

// Basic polynomials of a local algebra: the coordinates f1, ..., fn of
// exp(x1*s1 + ... + xn*sn) = 1 + f1(x)*s1 + ... + fn(x)*sn, together with
// the subspace axioms that characterize such tuples (span dimension,
// translation invariance, generation).

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "addact/local_algebra.hpp"
#include "addact/polynomial.hpp"

namespace addact {

struct BasicPolynomials {
    AlgebraPtr algebra;
    RingPtr ring;               // x1, ..., xn
    std::vector<Polynomial> f;  // f[i] is f_{i+1}; each has zero constant term
};

// exp of the generic maximal-ideal element. Requires the basis to be
// compatible with the maximal-ideal filtration (which makes the tuple
// triangular); pass allow_incompatible_basis to proceed anyway.
BasicPolynomials basic_polynomials(const AlgebraPtr& a);
BasicPolynomials basic_polynomials(const AlgebraPtr& a, RingPtr ring,
                                   bool allow_incompatible_basis = false);

// fi = xi + hi with hi depending only on x1, ..., x_{i-1}.
bool is_triangular(std::span<const Polynomial> fs);
bool is_triangular(const BasicPolynomials& bp);

struct SubspaceReport {
    bool span_dimension_ok = false;    // dim span{1, f1, ..., fn} = n + 1
    bool translation_invariant = false;  // span stable under x -> x + c
    bool generates = false;            // x -> (f1, ..., fn) invertible

    RingPtr shift_ring;  // c1, ..., cn used by the translation check
    // Row i expresses F_i(x + c) = sum_j lambda[i][j] * F_j(x) with
    // F_0 = 1; entries are polynomials in c. Filled when the translation
    // check succeeds.
    std::vector<std::vector<Polynomial>> translation_matrix;

    bool all_pass() const {
        return span_dimension_ok && translation_invariant && generates;
    }
    std::string summary() const;
};

SubspaceReport check_basic_subspace(const BasicPolynomials& bp);
// Same checks for an arbitrary candidate tuple (one component per variable).
SubspaceReport check_subspace_candidate(const RingPtr& xring,
                                        std::span<const Polynomial> fs);

}  // namespace addact
