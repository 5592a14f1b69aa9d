#include "addact/action.hpp"

#include <algorithm>

#include "addact/basic_polynomials.hpp"

namespace addact {

// ===== ActionMatrix =====

ActionMatrix::ActionMatrix(RingPtr ring, std::vector<std::vector<Polynomial>> rows)
    : ring_(std::move(ring)), rows_(std::move(rows)) {
    for (const auto& row : rows_) {
        if (row.size() != rows_.size())
            throw ArityError("action matrix must be square");
        for (const auto& e : row)
            if (!same_ring(e.ring(), ring_))
                throw RingMismatchError("matrix entry lives over a different ring");
    }
}

ActionMatrix ActionMatrix::identity(RingPtr ring, std::size_t size) {
    std::vector<std::vector<Polynomial>> rows(
        size, std::vector<Polynomial>(size, Polynomial::zero(ring)));
    for (std::size_t i = 0; i < size; ++i) rows[i][i] = Polynomial::one(ring);
    return ActionMatrix(std::move(ring), std::move(rows));
}

std::string ActionMatrix::str() const {
    std::string out;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i) out += ";\n";
        for (std::size_t j = 0; j < rows_.size(); ++j) {
            if (j) out += ", ";
            out += rows_[i][j].str();
        }
    }
    return out;
}

ActionMatrix operator*(const ActionMatrix& a, const ActionMatrix& b) {
    if (!same_ring(a.ring_, b.ring_))
        throw RingMismatchError("matrix product needs a common ring");
    if (a.size() != b.size()) throw ArityError("matrix product needs equal sizes");
    const std::size_t n = a.size();
    std::vector<std::vector<Polynomial>> rows(
        n, std::vector<Polynomial>(n, Polynomial::zero(a.ring_)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                rows[i][j] += a.rows_[i][k] * b.rows_[k][j];
    return ActionMatrix(a.ring_, std::move(rows));
}

ActionMatrix operator-(const ActionMatrix& a, const ActionMatrix& b) {
    if (!same_ring(a.ring_, b.ring_))
        throw RingMismatchError("matrix difference needs a common ring");
    if (a.size() != b.size()) throw ArityError("matrix difference needs equal sizes");
    std::vector<std::vector<Polynomial>> rows = a.rows_;
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j) rows[i][j] -= b.rows_[i][j];
    return ActionMatrix(a.ring_, std::move(rows));
}

bool ActionMatrix::operator==(const ActionMatrix& o) const {
    return same_ring(ring_, o.ring_) && rows_ == o.rows_;
}

bool ActionMatrix::is_zero() const {
    for (const auto& row : rows_)
        for (const auto& e : row)
            if (!e.is_zero()) return false;
    return true;
}

// ===== Constructors from algebras =====

ActionMatrix action_matrix(const AlgebraPtr& a, std::span<const Polynomial> y) {
    const std::size_t n = a->mdim();
    if (y.size() != n) throw ArityError("need one coordinate per generator");
    RingPtr ring = y.empty() ? Ring::make({}) : y[0].ring();
    for (const auto& p : y)
        if (!same_ring(p.ring(), ring))
            throw RingMismatchError("coordinates live over different rings");

    std::vector<Polynomial> coords;
    coords.push_back(Polynomial::zero(ring));
    coords.insert(coords.end(), y.begin(), y.end());
    const GenericElement u = exp(GenericElement(a, std::move(coords)));

    std::vector<std::vector<Polynomial>> rows(
        n + 1, std::vector<Polynomial>(n + 1, Polynomial::zero(ring)));
    for (std::size_t j = 0; j <= n; ++j) {
        std::vector<Polynomial> basis_coords(n + 1, Polynomial::zero(ring));
        basis_coords[j] = Polynomial::one(ring);
        const GenericElement col = elem_mul(u, GenericElement(a, std::move(basis_coords)));
        for (std::size_t i = 0; i <= n; ++i) rows[i][j] = col.coord(i);
    }
    return ActionMatrix(std::move(ring), std::move(rows));
}

ActionMatrix action_matrix(const AlgebraPtr& a, const RingPtr& yring) {
    if (yring->nvars() != a->mdim())
        throw ArityError("need one variable per generator");
    std::vector<Polynomial> y;
    for (std::size_t i = 0; i < yring->nvars(); ++i)
        y.push_back(Polynomial::variable(yring, i));
    return action_matrix(a, std::span<const Polynomial>(y));
}

ActionMatrix action_matrix(const AlgebraPtr& a, std::span<const Rational> y) {
    const RingPtr empty = Ring::make({});
    std::vector<Polynomial> coords;
    for (const auto& v : y) coords.push_back(Polynomial::constant(empty, v));
    return action_matrix(a, std::span<const Polynomial>(coords));
}

ActionMatrix standard_action_matrix(std::size_t n, const RingPtr& yring) {
    if (yring->nvars() != n) throw ArityError("need one variable per coordinate");
    std::vector<std::vector<Polynomial>> rows(
        n + 1, std::vector<Polynomial>(n + 1, Polynomial::zero(yring)));
    for (std::size_t i = 0; i <= n; ++i) rows[i][i] = Polynomial::one(yring);
    for (std::size_t i = 1; i <= n; ++i) rows[i][0] = Polynomial::variable(yring, i - 1);
    return ActionMatrix(yring, std::move(rows));
}

ActionMatrix embed_matrix(const ActionMatrix& m, const RingPtr& bigger) {
    std::vector<std::vector<Polynomial>> rows;
    for (std::size_t i = 0; i < m.size(); ++i) {
        std::vector<Polynomial> row;
        for (std::size_t j = 0; j < m.size(); ++j) row.push_back(embed(m.at(i, j), bigger));
        rows.push_back(std::move(row));
    }
    return ActionMatrix(bigger, std::move(rows));
}

// ===== Determinant =====

Polynomial det(const ActionMatrix& m) {
    const std::size_t n = m.size();
    // expand along rows; memoize on the set of unused columns
    std::vector<Polynomial> memo(std::size_t(1) << n, Polynomial::zero(m.ring()));
    std::vector<bool> known(std::size_t(1) << n, false);

    auto rec = [&](auto&& self, std::size_t row, std::size_t mask) -> Polynomial {
        if (row == n) return Polynomial::one(m.ring());
        if (known[mask]) return memo[mask];
        Polynomial acc = Polynomial::zero(m.ring());
        bool negate = false;
        for (std::size_t j = 0; j < n; ++j) {
            if (mask & (std::size_t(1) << j)) continue;  // column already used
            const Polynomial& e = m.at(row, j);
            if (!e.is_zero()) {
                Polynomial sub = self(self, row + 1, mask | (std::size_t(1) << j));
                Polynomial contrib = e * sub;
                if (negate) acc -= contrib;
                else acc += contrib;
            }
            negate = !negate;
        }
        known[mask] = true;
        memo[mask] = acc;
        return acc;
    };
    return rec(rec, 0, 0);
}

bool unipotent_within(const ActionMatrix& m, std::size_t d) {
    const ActionMatrix nil = m - ActionMatrix::identity(m.ring(), m.size());
    ActionMatrix power = nil;
    for (std::size_t k = 1; k < d; ++k) power = power * nil;
    return power.is_zero();
}

// ===== ProjectivePoint =====

ProjectivePoint::ProjectivePoint(RingPtr ring, std::vector<Polynomial> coords)
    : ring_(std::move(ring)), coords_(std::move(coords)) {
    if (coords_.empty()) throw ArityError("projective point needs coordinates");
    bool nonzero = false;
    for (const auto& c : coords_) {
        if (!same_ring(c.ring(), ring_))
            throw RingMismatchError("coordinate lives over a different ring");
        if (!c.is_zero()) nonzero = true;
    }
    if (!nonzero) throw Error("projective point needs a nonzero coordinate");
}

ProjectivePoint ProjectivePoint::from_rationals(std::vector<Rational> coords) {
    const RingPtr empty = Ring::make({});
    std::vector<Polynomial> c;
    for (const auto& v : coords) c.push_back(Polynomial::constant(empty, v));
    return ProjectivePoint(empty, std::move(c));
}

ProjectivePoint ProjectivePoint::canonical() const {
    for (const auto& c : coords_) {
        if (c.is_zero()) continue;
        if (!c.is_constant()) return *this;  // no exact division by symbols
        const Rational lead = c.constant_term();
        std::vector<Polynomial> out;
        for (const auto& v : coords_) out.push_back(v * (Rational(1) / lead));
        return ProjectivePoint(ring_, std::move(out));
    }
    return *this;  // unreachable: some coordinate is nonzero
}

std::string ProjectivePoint::str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) out += " : ";
        out += coords_[i].str();
    }
    out += "]";
    return out;
}

bool ProjectivePoint::operator==(const ProjectivePoint& o) const {
    return same_ring(ring_, o.ring_) && coords_ == o.coords_;
}

ProjectivePoint apply(const ActionMatrix& m, const ProjectivePoint& p) {
    if (p.coords().size() != m.size())
        throw ArityError("point dimension does not match the matrix");
    const RingPtr u = union_ring(m.ring(), p.ring());
    const ActionMatrix mu = embed_matrix(m, u);
    std::vector<Polynomial> pc;
    for (const auto& c : p.coords()) pc.push_back(embed(c, u));

    std::vector<Polynomial> out(m.size(), Polynomial::zero(u));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) out[i] += mu.at(i, j) * pc[j];
    return ProjectivePoint(u, std::move(out)).canonical();
}

// ===== Group law =====

GroupLawReport check_group_law(const AlgebraPtr& a) {
    GroupLawReport rep;
    const std::size_t n = a->mdim();
    const RingPtr yring = Ring::numbered("y", n);
    const RingPtr wring = Ring::numbered("w", n);
    const RingPtr u = union_ring(yring, wring);

    const ActionMatrix my = action_matrix(a, yring);
    const ActionMatrix product = embed_matrix(my, u) * embed_matrix(action_matrix(a, wring), u);

    std::vector<Polynomial> sums;
    for (std::size_t i = 0; i < n; ++i)
        sums.push_back(embed(Polynomial::variable(yring, i), u) +
                       embed(Polynomial::variable(wring, i), u));
    const ActionMatrix msum = action_matrix(a, std::span<const Polynomial>(sums));
    rep.homomorphism = (product == msum);
    if (!rep.homomorphism) rep.detail = "M(y)*M(w) differs from M(y+w)";

    const std::vector<Rational> zeros(n, Rational(0));
    const ActionMatrix mzero = action_matrix(a, std::span<const Rational>(zeros));
    rep.identity_at_zero = (mzero == ActionMatrix::identity(mzero.ring(), n + 1));
    if (!rep.identity_at_zero && rep.detail.empty()) rep.detail = "M(0) is not the identity";

    // effectiveness: column 0 must read (1, f1(y), ..., fn(y)) with the
    // basic polynomials themselves triangular
    bool effective = my.at(0, 0) == Polynomial::one(yring);
    const BasicPolynomials bp = basic_polynomials(a, yring, /*allow_incompatible_basis=*/true);
    for (std::size_t i = 1; i <= n && effective; ++i)
        if (my.at(i, 0) != bp.f[i - 1]) effective = false;
    if (effective) effective = is_triangular(bp);
    rep.effective = effective;
    if (!rep.effective && rep.detail.empty())
        rep.detail = "column 0 does not list the basic polynomials triangularly";

    return rep;
}

}  // namespace addact
