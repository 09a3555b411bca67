#pragma once

#include "coxfs/cyclotomic.hpp"
#include "coxfs/rational.hpp"

#include <string>

namespace coxfs {

/// a + b*sqrt(5) with rational a, b.
class GoldenRational {
public:
    GoldenRational() = default;
    GoldenRational(int a) : a_(a) {}
    GoldenRational(const Rational& a, const Rational& b = Rational(0)) : a_(a), b_(b) {}

    /// (1 + sqrt5) / 2
    static GoldenRational phi() { return {Rational(1, 2), Rational(1, 2)}; }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    int sign() const;
    GoldenRational conj() const { return {a_, -b_}; }
    Rational norm() const { return a_ * a_ - Rational(5) * b_ * b_; }
    GoldenRational inverse() const;
    Cyclo to_cyclo() const { return Cyclo(a_) + Cyclo(b_) * sqrt5(); }
    double to_double() const;
    std::string str() const;

    GoldenRational operator-() const { return {-a_, -b_}; }
    GoldenRational& operator+=(const GoldenRational& o) { a_ += o.a_; b_ += o.b_; return *this; }
    GoldenRational& operator-=(const GoldenRational& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
    GoldenRational& operator*=(const GoldenRational& o)
    {
        Rational a = a_ * o.a_ + Rational(5) * b_ * o.b_;
        b_ = a_ * o.b_ + b_ * o.a_;
        a_ = a;
        return *this;
    }
    GoldenRational& operator/=(const GoldenRational& o) { return *this *= o.inverse(); }

    friend GoldenRational operator+(GoldenRational x, const GoldenRational& y) { return x += y; }
    friend GoldenRational operator-(GoldenRational x, const GoldenRational& y) { return x -= y; }
    friend GoldenRational operator*(GoldenRational x, const GoldenRational& y) { return x *= y; }
    friend GoldenRational operator/(GoldenRational x, const GoldenRational& y) { return x /= y; }
    friend bool operator==(const GoldenRational& x, const GoldenRational& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

private:
    Rational a_{0};
    Rational b_{0};
};

} // namespace coxfs
