#include "doctest.h"

#include "addact/errors.hpp"
#include "addact/monomial.hpp"
#include "addact/parser.hpp"
#include "addact/polynomial.hpp"
#include "addact/rational.hpp"

#include <map>
#include <random>
#include <sstream>
#include <vector>

using namespace addact;

TEST_SUITE("rational") {
    TEST_CASE("construction normalizes to lowest terms") {
        CHECK(Rational(2, 4) == Rational(1, 2));
        CHECK(Rational(-3, -6) == Rational(1, 2));
        CHECK(Rational(3, -6).str() == "-1/2");
        CHECK(Rational(0, 7).str() == "0");
        CHECK(Rational(-7).str() == "-7");
    }

    TEST_CASE("zero denominator is rejected") {
        CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    }

    TEST_CASE("string round trip") {
        for (const char* text : {"0", "1", "-1", "5/3", "-22/7", "100000000000000000001/3"}) {
            CHECK(Rational::from_string(text).str() == text);
        }
        CHECK(Rational::from_string("4/6").str() == "2/3");
    }

    TEST_CASE("arithmetic is exact at large magnitudes") {
        Rational third(1, 3);
        Rational sum;
        for (int i = 0; i < 3000; ++i) sum += third;
        CHECK(sum == Rational(1000));

        // 1/3 in floating point would lose this identity immediately.
        Rational a(1, 1000000007);
        Rational b(1, 998244353);
        CHECK((a + b) * (a - b) == a * a - b * b);
    }

    TEST_CASE("ordering and helpers") {
        CHECK(Rational(1, 3) < Rational(1, 2));
        CHECK(Rational(-5, 2).abs() == Rational(5, 2));
        CHECK(Rational(-5, 2).sign() == -1);
        CHECK(Rational(0).sign() == 0);
        CHECK(Rational(7, 1).is_integer());
        CHECK_FALSE(Rational(7, 2).is_integer());
        CHECK(factorial(0) == Rational(1));
        CHECK(factorial(5) == Rational(120));
        CHECK(factorial(20) == Rational::from_string("2432902008176640000"));
    }
}

TEST_SUITE("monomial") {
    TEST_CASE("degree, products, divisibility") {
        Monomial x2y({2, 1, 0});
        Monomial yz({0, 1, 1});
        CHECK(x2y.total_degree() == 3);
        CHECK(x2y.times(yz) == Monomial({2, 2, 1}));
        CHECK(Monomial({0, 0, 0}).is_unit());
        CHECK(Monomial({1, 0, 0}).divides(x2y));
        CHECK_FALSE(yz.divides(x2y));
        CHECK(x2y.times(yz).divided_by(yz) == x2y);
        CHECK(Monomial::lcm(x2y, yz) == Monomial({2, 1, 1}));
        CHECK(Monomial({2, 0, 0}).coprime_with(Monomial({0, 0, 3})));
        CHECK_FALSE(x2y.coprime_with(yz));
    }

    TEST_CASE("universe size mismatches are rejected") {
        CHECK_THROWS_AS(Monomial({1, 0}).times(Monomial({1, 0, 0})), Error);
        CHECK_THROWS_AS(Monomial({1, 0}).divides(Monomial({1})), Error);
    }

    TEST_CASE("single-element brace construction means an exponent vector") {
        // Regression guard: Monomial({2}) must be x^2 over one variable, not
        // a unit monomial over two.
        Monomial m({2});
        CHECK(m.nvars() == 1);
        CHECK(m.exponent(0) == 2);
        CHECK(Monomial::unit(2).nvars() == 2);
        CHECK(Monomial::unit(2).is_unit());
    }

    TEST_CASE("invalid division is rejected") {
        CHECK_THROWS(Monomial({1, 0}).divided_by(Monomial({0, 1})));
    }
}

TEST_SUITE("monomial orders") {
    // The classic discriminating pair: x^2*z vs x*y^2 (same total degree 3).
    // Graded lex compares exponents from the most significant variable down,
    // so x^2*z > x*y^2.  Graded reverse lex penalizes the *last* variable,
    // so x^2*z < x*y^2.
    TEST_CASE("grlex and grevlex disagree on x^2*z vs x*y^2") {
        Monomial xxz({2, 0, 1});
        Monomial xyy({1, 2, 0});
        auto grlex = MonomialOrder::grlex(3);
        auto grevlex = MonomialOrder::grevlex(3);
        CHECK(grlex.compare(xxz, xyy) == std::strong_ordering::greater);
        CHECK(grevlex.compare(xxz, xyy) == std::strong_ordering::less);
    }

    TEST_CASE("lex ignores total degree") {
        auto lex = MonomialOrder::lex(2);
        CHECK(lex.compare(Monomial({1, 0}), Monomial({0, 5})) == std::strong_ordering::greater);
        auto grlex = MonomialOrder::grlex(2);
        CHECK(grlex.compare(Monomial({1, 0}), Monomial({0, 5})) == std::strong_ordering::less);
    }

    TEST_CASE("precedence permutation reverses variable significance") {
        // precedence {1, 0} makes variable 1 the most significant.
        MonomialOrder reversed(MonomialOrder::Kind::GrLex, {1, 0});
        CHECK(reversed.compare(Monomial({0, 1}), Monomial({1, 0})) == std::strong_ordering::greater);
        auto plain = MonomialOrder::grlex(2);
        CHECK(plain.compare(Monomial({0, 1}), Monomial({1, 0})) == std::strong_ordering::less);
    }

    TEST_CASE("orders agree on all degree-<=4 monomials in 2 vars where they must") {
        // In two variables grlex and grevlex coincide.
        auto grlex = MonomialOrder::grlex(2);
        auto grevlex = MonomialOrder::grevlex(2);
        std::vector<Monomial> all;
        for (uint32_t a = 0; a <= 4; ++a)
            for (uint32_t b = 0; b <= 4; ++b) all.push_back(Monomial({a, b}));
        for (const auto& m1 : all)
            for (const auto& m2 : all) CHECK(grlex.compare(m1, m2) == grevlex.compare(m1, m2));
    }

    TEST_CASE("storage comparator matches descending grlex") {
        auto grlex = MonomialOrder::grlex(3);
        GrlexDescending desc;
        std::mt19937 rng(20240811);
        std::uniform_int_distribution<uint32_t> exp_dist(0, 3);
        for (int trial = 0; trial < 200; ++trial) {
            Monomial m1({exp_dist(rng), exp_dist(rng), exp_dist(rng)});
            Monomial m2({exp_dist(rng), exp_dist(rng), exp_dist(rng)});
            bool storage_first = desc(m1, m2);
            bool order_greater = grlex.compare(m1, m2) == std::strong_ordering::greater;
            CHECK(storage_first == order_greater);
        }
    }
}

TEST_SUITE("ring") {
    TEST_CASE("construction validates names") {
        CHECK_THROWS(Ring::make({"x", "x"}));
        CHECK_THROWS(Ring::make({""}));
        auto r = Ring::numbered("x", 3);
        CHECK(r->vars() == std::vector<std::string>{"x1", "x2", "x3"});
        CHECK(r->index_of("x2") == 1);
        // The empty ring is legal: it carries the constants.
        auto empty = Ring::make({});
        CHECK(Polynomial::constant(empty, Rational(5)).str() == "5");
    }

    TEST_CASE("value equality vs pointer identity") {
        auto r1 = Ring::numbered("x", 2);
        auto r2 = Ring::numbered("x", 2);
        CHECK(r1 != r2);  // distinct shared_ptrs
        CHECK(same_ring(r1, r2));
        CHECK(Polynomial::variable(r1, 0) == Polynomial::variable(r2, 0));
    }

    TEST_CASE("union ring merges by name, left operand first") {
        auto xr = Ring::make({"x1", "x2"});
        auto yr = Ring::make({"x2", "y1"});
        auto u = union_ring(xr, yr);
        CHECK(u->vars() == std::vector<std::string>{"x1", "x2", "y1"});
        // Union with itself (by value) returns the same variable list.
        CHECK(union_ring(xr, xr)->vars() == xr->vars());
    }
}

TEST_SUITE("polynomial printing") {
    auto ring = Ring::numbered("x", 3);
    auto x1 = Polynomial::variable(ring, 0);
    auto x2 = Polynomial::variable(ring, 1);
    auto x3 = Polynomial::variable(ring, 2);

    TEST_CASE("canonical text form") {
        CHECK(Polynomial::zero(ring).str() == "0");
        CHECK(Polynomial::one(ring).str() == "1");
        CHECK(Polynomial::constant(ring, Rational(-3)).str() == "-3");
        CHECK(x1.str() == "x1");
        CHECK((x1 * Rational(-1)).str() == "-x1");
        CHECK((x1 * x1 * Rational(1, 2) + x2).str() == "1/2*x1^2 + x2");
        CHECK((x2 - x1).str() == "-x1 + x2");
        CHECK((x1 * x2 * x3 * Rational(3)).str() == "3*x1*x2*x3");
        CHECK((x1.pow(2) * x3 + x1 * x2.pow(2)).str() == "x1^2*x3 + x1*x2^2");
        CHECK((x1 - Polynomial::one(ring)).str() == "x1 - 1");
        CHECK((Polynomial::one(ring) - x1 - x1 * x1).str() == "-x1^2 - x1 + 1");
    }

    TEST_CASE("terms iterate in descending graded lex order") {
        auto p = x3 + x1 * x2 + Polynomial::one(ring) + x1.pow(3);
        std::vector<std::string> printed;
        for (const auto& [mono, coeff] : p.terms()) {
            (void)coeff;
            printed.push_back(Polynomial::term(ring, mono, Rational(1)).str());
        }
        CHECK(printed == std::vector<std::string>{"x1^3", "x1*x2", "x3", "1"});
    }
}

TEST_SUITE("polynomial arithmetic") {
    auto ring = Ring::numbered("x", 2);
    auto x = Polynomial::variable(ring, 0);
    auto y = Polynomial::variable(ring, 1);

    TEST_CASE("binomial identities") {
        auto p = (x + y).pow(2);
        CHECK(p == x.pow(2) + x * y * Rational(2) + y.pow(2));
        CHECK((x + y) * (x - y) == x.pow(2) - y.pow(2));
        CHECK((x - x).is_zero());
        CHECK(x.pow(0) == Polynomial::one(ring));
    }

    TEST_CASE("queries") {
        auto p = x.pow(2) * y + x * Rational(5) + Polynomial::constant(ring, Rational(7));
        CHECK(p.total_degree() == 3);
        CHECK(p.constant_term() == Rational(7));
        CHECK(p.coefficient(Monomial({2, 1})) == Rational(1));
        CHECK(p.coefficient(Monomial({9, 9})) == Rational(0));
        CHECK(p.involves(0));
        CHECK_FALSE((y + Polynomial::one(ring)).involves(0));
        CHECK(Polynomial::zero(ring).total_degree() == 0);
    }

    TEST_CASE("operations on different rings are rejected") {
        auto other = Ring::numbered("y", 2);
        CHECK_THROWS_AS(x + Polynomial::variable(other, 0), RingMismatchError);
        CHECK_THROWS_AS(x * Polynomial::variable(other, 1), RingMismatchError);
    }

    TEST_CASE("distributivity on random polynomials") {
        std::mt19937 rng(987654);
        std::uniform_int_distribution<int> coeff_dist(-4, 4);
        std::uniform_int_distribution<uint32_t> exp_dist(0, 3);
        auto random_poly = [&]() {
            Polynomial p = Polynomial::zero(ring);
            for (int t = 0; t < 4; ++t) {
                Monomial m({exp_dist(rng), exp_dist(rng)});
                p.add_term(m, Rational(coeff_dist(rng)));
            }
            return p;
        };
        for (int trial = 0; trial < 50; ++trial) {
            auto a = random_poly(), b = random_poly(), c = random_poly();
            CHECK((a + b) * c == a * c + b * c);
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
        }
    }
}

TEST_SUITE("substitution and ring maps") {
    auto ring = Ring::numbered("x", 2);
    auto x = Polynomial::variable(ring, 0);
    auto y = Polynomial::variable(ring, 1);

    TEST_CASE("substitute composes polynomials") {
        auto p = x.pow(2) + y;
        // x -> y, y -> x*y
        auto q = substitute(p, std::vector<Polynomial>{y, x * y});
        CHECK(q == y.pow(2) + x * y);
        // Substituting the identity returns the same polynomial.
        CHECK(substitute(p, std::vector<Polynomial>{x, y}) == p);
    }

    TEST_CASE("substitute validates arity and image rings") {
        auto p = x + y;
        CHECK_THROWS_AS(substitute(p, std::vector<Polynomial>{x}), ArityError);
        auto other = Ring::numbered("z", 1);
        auto z = Polynomial::variable(other, 0);
        CHECK_THROWS_AS(substitute(p, std::vector<Polynomial>{x, z}), RingMismatchError);
    }

    TEST_CASE("embed keeps values, relocates by name") {
        auto big = Ring::make({"w", "x2", "x1"});
        auto moved = embed(x * y + x, big);
        auto X1 = Polynomial::variable(big, 2);
        auto X2 = Polynomial::variable(big, 1);
        CHECK(moved == X1 * X2 + X1);
        // The whole source ring must map, not just the variables that appear.
        auto tiny = Ring::make({"x1"});
        CHECK_THROWS_AS(embed(x * y, tiny), RingMismatchError);
        CHECK_THROWS_AS(embed(x, tiny), RingMismatchError);
        CHECK(embed(x, ring) == x);
    }

    TEST_CASE("translate by symbols produces the shifted polynomial") {
        auto shift_ring = Ring::numbered("c", 2);
        auto shifted = translate(x.pow(2) + y, std::vector<Polynomial>{
                                                   Polynomial::variable(shift_ring, 0),
                                                   Polynomial::variable(shift_ring, 1)});
        auto u = shifted.ring();
        CHECK(u->vars() == std::vector<std::string>{"x1", "x2", "c1", "c2"});
        auto X = Polynomial::variable(u, 0), Y = Polynomial::variable(u, 1);
        auto C1 = Polynomial::variable(u, 2), C2 = Polynomial::variable(u, 3);
        CHECK(shifted == X.pow(2) + X * C1 * Rational(2) + C1.pow(2) + Y + C2);
    }

    TEST_CASE("translate by rationals stays in the same ring") {
        auto shifted = translate(x.pow(2), std::vector<Rational>{Rational(1), Rational(0)});
        CHECK(shifted.ring() == ring);
        CHECK(shifted == x.pow(2) + x * Rational(2) + Polynomial::one(ring));
    }

    TEST_CASE("regroup splits by the selected variables") {
        auto mixed_ring = Ring::make({"x1", "c1"});
        auto X = Polynomial::variable(mixed_ring, 0);
        auto C = Polynomial::variable(mixed_ring, 1);
        auto p = X.pow(2) + X * C * Rational(2) + C.pow(2);
        auto xonly = Ring::make({"x1"});
        auto conly = Ring::make({"c1"});
        std::vector<std::size_t> sel{0}, rest{1};
        auto groups = regroup(p, sel, xonly, rest, conly);
        REQUIRE(groups.size() == 3);
        CHECK(groups.at(Monomial({2})).str() == "1");      // x1^2 coefficient
        CHECK(groups.at(Monomial({1})).str() == "2*c1");   // x1 coefficient
        CHECK(groups.at(Monomial({0})).str() == "c1^2");   // constant in x
    }
}

TEST_SUITE("polynomial text round trip") {
    TEST_CASE("str then parse is the identity") {
        auto ring = Ring::numbered("x", 3);
        std::mt19937 rng(424242);
        std::uniform_int_distribution<int> num(-9, 9);
        std::uniform_int_distribution<int> den(1, 9);
        std::uniform_int_distribution<uint32_t> exp_dist(0, 4);
        for (int trial = 0; trial < 100; ++trial) {
            Polynomial p = Polynomial::zero(ring);
            for (int t = 0; t < 5; ++t) {
                Monomial m({exp_dist(rng), exp_dist(rng), exp_dist(rng)});
                p.add_term(m, Rational(num(rng), den(rng)));
            }
            CAPTURE(p.str());
            CHECK(parse_polynomial(p.str(), ring) == p);
        }
    }

    TEST_CASE("parser accepts equivalent spellings") {
        auto ring = Ring::numbered("x", 2);
        auto x = Polynomial::variable(ring, 0);
        CHECK(parse_polynomial("x1^2 - x1", ring) == x.pow(2) - x);
        CHECK(parse_polynomial("-1/2*x1 + 3", ring) ==
              x * Rational(-1, 2) + Polynomial::constant(ring, Rational(3)));
        CHECK(parse_polynomial("x1*x1", ring) == x.pow(2));
        CHECK(parse_polynomial("0", ring).is_zero());
    }

    TEST_CASE("parse errors carry positions") {
        auto ring = Ring::numbered("x", 1);
        try {
            parse_polynomial("x1 + ", ring);
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line == 1);
            CHECK(e.column == 6);
        }
        CHECK_THROWS_AS(parse_polynomial("x9", ring), ParseError);
        CHECK_THROWS_AS(parse_polynomial("x1^0", ring), ParseError);
    }
}
