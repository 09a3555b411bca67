#include "coxfs/golden.hpp"

#include <cmath>

namespace coxfs {

int GoldenRational::sign() const
{
    int sa = a_.sign(), sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 with 5 b^2
    Rational lhs = a_ * a_, rhs = Rational(5) * b_ * b_;
    if (lhs == rhs) return 0;
    return lhs > rhs ? sa : sb;
}

GoldenRational GoldenRational::inverse() const
{
    Rational n = norm();
    if (n.is_zero()) throw std::domain_error("inverse of zero in Q(sqrt5)");
    return {a_ / n, -b_ / n};
}

double GoldenRational::to_double() const { return a_.to_double() + b_.to_double() * std::sqrt(5.0); }

std::string GoldenRational::str() const
{
    if (b_.is_zero()) return a_.str();
    std::string s = a_.is_zero() ? "" : a_.str();
    std::string coef = b_ == Rational(1) ? "" : b_ == Rational(-1) ? "-" : b_.str() + "*";
    std::string t = coef + "sqrt5";
    if (!s.empty() && t[0] != '-') s += "+";
    return s + t;
}

} // namespace coxfs
