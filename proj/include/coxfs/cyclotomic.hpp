#pragma once

#include "coxfs/rational.hpp"

#include <complex>
#include <string>
#include <string_view>
#include <vector>

namespace coxfs {

long gcd_l(long a, long b);
long lcm_l(long a, long b);
long euler_phi(long n);
std::vector<long> prime_factors(long n);
std::vector<long long> cyclotomic_polynomial(long n);

/// Element of Q(E(N)) in the power basis 1, E(N), ..., E(N)^(phi(N)-1) modulo the
/// N-th cyclotomic polynomial. The conductor N is always minimal, so two values are
/// equal exactly when conductor and coefficients agree.
class Cyclo {
public:
    Cyclo() : n_(1), c_{Rational(0)} {}
    Cyclo(int v) : n_(1), c_{Rational(v)} {}
    Cyclo(long v) : n_(1), c_{Rational(v)} {}
    Cyclo(const Rational& r) : n_(1), c_{r} {}

    /// E(n)^k.
    static Cyclo zeta(long n, long k = 1);
    /// sum_k coeffs[k] * E(n)^k; any length, any n >= 1.
    static Cyclo from_exponents(long n, const std::vector<Rational>& coeffs);
    /// GAP-style text: sums of rational multiples of E(N)^k, with parentheses and products.
    static Cyclo parse(std::string_view text);

    long conductor() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const { return n_ == 1 && c_[0].is_zero(); }
    bool is_one() const { return n_ == 1 && c_[0].is_one(); }
    bool is_rational() const { return n_ == 1; }
    Rational to_rational() const;
    bool is_real() const;
    bool is_integer() const { return n_ == 1 && c_[0].is_integer(); }

    Cyclo conj() const { return galois(-1); }
    Cyclo galois(long a) const;
    Cyclo inverse() const;

    std::complex<double> to_complex() const;
    /// Sign of a real value in the embedding E(N) = exp(2 pi i / N).
    int real_sign() const;

    std::string str() const;

    Cyclo operator-() const;
    Cyclo& operator+=(const Cyclo& o);
    Cyclo& operator-=(const Cyclo& o);
    Cyclo& operator*=(const Cyclo& o);
    Cyclo& operator/=(const Cyclo& o) { return *this *= o.inverse(); }

    friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
    friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
    friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
    friend Cyclo operator/(Cyclo a, const Cyclo& b) { return a /= b; }
    friend bool operator==(const Cyclo& a, const Cyclo& b) { return a.n_ == b.n_ && a.c_ == b.c_; }

    friend std::ostream& operator<<(std::ostream& os, const Cyclo& x) { return os << x.str(); }

private:
    Cyclo(long n, std::vector<Rational> c) : n_(n), c_(std::move(c)) {}
    std::vector<Rational> lifted(long to) const;
    void normalize();

    long n_;
    std::vector<Rational> c_;
};

Cyclo pow(const Cyclo& base, long exponent);
/// sqrt(5) = 2(E(5) + E(5)^4) + 1.
Cyclo sqrt5();
/// 2cos(2 pi k / n) = E(n)^k + E(n)^-k.
Cyclo two_cos(long n, long k);

} // namespace coxfs
