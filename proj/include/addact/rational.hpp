#pragma once

// Exact rational scalar. Always normalized: lowest terms, positive
// denominator, zero stored as 0/1. Backed by boost::multiprecision so
// numerators and denominators never overflow.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "addact/errors.hpp"

namespace addact {

class Rational {
public:
    using Int = boost::multiprecision::cpp_int;
    using Rep = boost::multiprecision::cpp_rational;

    Rational() = default;
    Rational(int n) : v_(n) {}
    Rational(long long n) : v_(n) {}
    Rational(const Int& n) : v_(n) {}
    Rational(const Int& num, const Int& den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        // cpp_rational reduces to lowest terms on construction but insists on
        // a positive denominator, so move the sign to the numerator first.
        if (den < 0)
            v_ = Rep(Int(-num), Int(-den));
        else
            v_ = Rep(num, den);
    }
    Rational(long long num, long long den) : Rational(Int(num), Int(den)) {}

    // Parses "a" or "a/b", optionally starting with '-'. Throws Error on
    // anything else.
    static Rational from_string(std::string_view text);

    Int numerator() const { return boost::multiprecision::numerator(v_); }
    Int denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return v_.sign(); }

    Rational operator-() const { return Rational(Rep(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    // "a" when integral, "a/b" otherwise; b always positive.
    std::string str() const {
        if (is_integer()) return numerator().str();
        return numerator().str() + "/" + denominator().str();
    }

private:
    explicit Rational(Rep v) : v_(std::move(v)) {}
    Rep v_{};
};

inline Rational Rational::from_string(std::string_view text) {
    auto fail = [&] {
        throw Error("not a rational literal: '" + std::string(text) + "'");
    };
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && text[pos] == '-') {
        negative = true;
        ++pos;
    }
    auto digits = [&]() -> Int {
        std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == start) fail();
        return Int(std::string(text.substr(start, pos - start)));
    };
    Int num = digits();
    Int den = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = digits();
        if (den == 0) fail();
    }
    if (pos != text.size()) fail();
    if (negative) num = -num;
    return Rational(num, den);
}

// n! as a Rational; used by exponential/logarithm series.
inline Rational factorial(unsigned n) {
    Rational::Int f = 1;
    for (unsigned k = 2; k <= n; ++k) f *= k;
    return Rational(f);
}

}  // namespace addact
