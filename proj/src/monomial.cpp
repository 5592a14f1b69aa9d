#include "addact/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace addact {

namespace {

void check_same_universe(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars())
        throw RingMismatchError("monomials live over different variable universes");
}

}  // namespace

Monomial Monomial::times(const Monomial& o) const {
    check_same_universe(*this, o);
    std::vector<std::uint32_t> e(nvars());
    for (std::size_t i = 0; i < nvars(); ++i) e[i] = exps_[i] + o.exps_[i];
    return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& o) const {
    check_same_universe(*this, o);
    for (std::size_t i = 0; i < nvars(); ++i)
        if (exps_[i] > o.exps_[i]) return false;
    return true;
}

Monomial Monomial::divided_by(const Monomial& o) const {
    check_same_universe(*this, o);
    std::vector<std::uint32_t> e(nvars());
    for (std::size_t i = 0; i < nvars(); ++i) {
        if (o.exps_[i] > exps_[i])
            throw Error("monomial division is not exact");
        e[i] = exps_[i] - o.exps_[i];
    }
    return Monomial(std::move(e));
}

bool Monomial::coprime_with(const Monomial& o) const {
    check_same_universe(*this, o);
    for (std::size_t i = 0; i < nvars(); ++i)
        if (exps_[i] != 0 && o.exps_[i] != 0) return false;
    return true;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    check_same_universe(a, b);
    std::vector<std::uint32_t> e(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i)
        e[i] = std::max(a.exponent(i), b.exponent(i));
    return Monomial(std::move(e));
}

MonomialOrder::MonomialOrder(Kind kind, std::vector<std::size_t> precedence)
    : kind_(kind), prec_(std::move(precedence)) {
    // precedence must be a permutation of 0..n-1
    std::vector<std::size_t> sorted = prec_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != i)
            throw ArityError("monomial order precedence is not a permutation");
}

MonomialOrder MonomialOrder::lex(std::size_t nvars) {
    std::vector<std::size_t> p(nvars);
    std::iota(p.begin(), p.end(), 0);
    return MonomialOrder(Kind::Lex, std::move(p));
}

MonomialOrder MonomialOrder::grlex(std::size_t nvars) {
    std::vector<std::size_t> p(nvars);
    std::iota(p.begin(), p.end(), 0);
    return MonomialOrder(Kind::GrLex, std::move(p));
}

MonomialOrder MonomialOrder::grevlex(std::size_t nvars) {
    std::vector<std::size_t> p(nvars);
    std::iota(p.begin(), p.end(), 0);
    return MonomialOrder(Kind::GrevLex, std::move(p));
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.nvars() != prec_.size() || b.nvars() != prec_.size())
        throw RingMismatchError("monomial order applied to the wrong universe");

    auto lex_tie = [&]() -> std::strong_ordering {
        // scan from highest precedence; larger exponent wins
        for (std::size_t v : prec_) {
            if (a.exponent(v) != b.exponent(v))
                return a.exponent(v) <=> b.exponent(v);
        }
        return std::strong_ordering::equal;
    };

    switch (kind_) {
        case Kind::Lex:
            return lex_tie();
        case Kind::GrLex: {
            if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
            return lex_tie();
        }
        case Kind::GrevLex: {
            if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
            // scan from LOWEST precedence; smaller exponent wins
            for (auto it = prec_.rbegin(); it != prec_.rend(); ++it) {
                if (a.exponent(*it) != b.exponent(*it))
                    return b.exponent(*it) <=> a.exponent(*it);
            }
            return std::strong_ordering::equal;
        }
    }
    return std::strong_ordering::equal;  // unreachable
}

}  // namespace addact
