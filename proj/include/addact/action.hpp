#pragma once

// The unipotent matrices by which translations act on P(A): column j of
// M(y) holds the coordinates of exp(y1*s1 + ... + yn*sn) * b_j over the
// basis 1, s1, ..., sn. Includes projective points, the group-law and
// effectiveness diagnostics, exact determinants, and unipotence.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "addact/local_algebra.hpp"
#include "addact/polynomial.hpp"

namespace addact {

class ActionMatrix {
public:
    // rows of a square matrix; every entry over the same ring
    ActionMatrix(RingPtr ring, std::vector<std::vector<Polynomial>> rows);

    static ActionMatrix identity(RingPtr ring, std::size_t size);

    std::size_t size() const { return rows_.size(); }
    const RingPtr& ring() const { return ring_; }
    const Polynomial& at(std::size_t i, std::size_t j) const { return rows_[i][j]; }

    // One line per row; entries comma-separated, rows ';'-terminated columns:
    // "1, 0, 0; y1, 1, 0; ..." broken across lines for readability.
    std::string str() const;

    friend ActionMatrix operator*(const ActionMatrix& a, const ActionMatrix& b);
    friend ActionMatrix operator-(const ActionMatrix& a, const ActionMatrix& b);
    bool operator==(const ActionMatrix& o) const;
    bool operator!=(const ActionMatrix& o) const { return !(*this == o); }

    bool is_zero() const;

private:
    RingPtr ring_;
    std::vector<std::vector<Polynomial>> rows_;
};

// M with symbolic coordinates: one polynomial per generator, common ring.
ActionMatrix action_matrix(const AlgebraPtr& a, std::span<const Polynomial> y);
// Convenience: y = the variables of yring (which needs exactly n of them).
ActionMatrix action_matrix(const AlgebraPtr& a, const RingPtr& yring);
// Evaluated at a rational point; entries are constants over the empty ring.
ActionMatrix action_matrix(const AlgebraPtr& a, std::span<const Rational> y);

// The matrix of the coordinate-translation action on P^n: identity plus the
// y-column under the unit coordinate.
ActionMatrix standard_action_matrix(std::size_t n, const RingPtr& yring);

ActionMatrix embed_matrix(const ActionMatrix& m, const RingPtr& bigger);

// Exact determinant via Laplace expansion with column-subset memoization.
Polynomial det(const ActionMatrix& m);

// (M - I)^d == 0?
bool unipotent_within(const ActionMatrix& m, std::size_t d);

// ===== Projective points =====

class ProjectivePoint {
public:
    // homogeneous coordinates, not all zero
    ProjectivePoint(RingPtr ring, std::vector<Polynomial> coords);
    static ProjectivePoint from_rationals(std::vector<Rational> coords);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& coords() const { return coords_; }

    // Divides through by the first nonzero coordinate when that coordinate
    // is a rational constant; symbolic leading coordinates are kept as-is.
    ProjectivePoint canonical() const;

    // "[1 : 2 : 5/2]"
    std::string str() const;

    bool operator==(const ProjectivePoint& o) const;

private:
    RingPtr ring_;
    std::vector<Polynomial> coords_;
};

// Matrix-vector action followed by canonicalization; point and matrix are
// embedded into their union ring first.
ProjectivePoint apply(const ActionMatrix& m, const ProjectivePoint& p);

// ===== Group-law diagnostics =====

struct GroupLawReport {
    bool homomorphism = false;   // M(y) * M(w) = M(y + w) symbolically
    bool identity_at_zero = false;  // M(0) = I
    bool effective = false;      // column 0 = (1, f1(y), ..., fn(y)), f triangular
    std::string detail;

    bool all_pass() const { return homomorphism && identity_at_zero && effective; }
};

GroupLawReport check_group_law(const AlgebraPtr& a);

}  // namespace addact
