#pragma once

// Monomials as exponent vectors over a fixed variable universe, plus the
// monomial orders (lex / graded-lex / graded-reverse-lex with a configurable
// variable precedence permutation).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "addact/errors.hpp"

namespace addact {

class Monomial {
public:
    explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

    // The unit monomial (all exponents zero) over n variables. A named
    // factory instead of a count constructor so that Monomial({2}) can only
    // ever mean "x^2 in one variable".
    static Monomial unit(std::size_t nvars) {
        return Monomial(std::vector<std::uint32_t>(nvars, 0));
    }

    std::size_t nvars() const { return exps_.size(); }
    std::uint32_t exponent(std::size_t i) const { return exps_[i]; }
    void set_exponent(std::size_t i, std::uint32_t e) { exps_[i] = e; }

    std::uint32_t total_degree() const {
        std::uint32_t d = 0;
        for (auto e : exps_) d += e;
        return d;
    }

    bool is_unit() const {
        for (auto e : exps_)
            if (e != 0) return false;
        return true;
    }

    Monomial times(const Monomial& o) const;
    bool divides(const Monomial& o) const;       // *this | o
    Monomial divided_by(const Monomial& o) const;  // *this / o, requires o | *this
    bool coprime_with(const Monomial& o) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    bool operator!=(const Monomial& o) const { return exps_ != o.exps_; }

private:
    std::vector<std::uint32_t> exps_;
};

// A total multiplicative monomial order. `precedence` lists variable indices
// from highest to lowest precedence; the natural order is {0, 1, ..., n-1}.
class MonomialOrder {
public:
    enum class Kind { Lex, GrLex, GrevLex };

    MonomialOrder(Kind kind, std::vector<std::size_t> precedence);

    static MonomialOrder lex(std::size_t nvars);
    static MonomialOrder grlex(std::size_t nvars);
    static MonomialOrder grevlex(std::size_t nvars);

    Kind kind() const { return kind_; }
    std::size_t nvars() const { return prec_.size(); }
    const std::vector<std::size_t>& precedence() const { return prec_; }

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

private:
    Kind kind_;
    std::vector<std::size_t> prec_;
};

// Canonical storage/printing comparator: graded-lex with natural precedence,
// DESCENDING (largest monomial first). Must agree with
// MonomialOrder::grlex(n) reversed; a test pins that down.
struct GrlexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const {
        std::uint32_t da = a.total_degree(), db = b.total_degree();
        if (da != db) return da > db;
        for (std::size_t i = 0; i < a.nvars(); ++i) {
            if (a.exponent(i) != b.exponent(i)) return a.exponent(i) > b.exponent(i);
        }
        return false;
    }
};

}  // namespace addact
