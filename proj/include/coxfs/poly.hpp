#pragma once

#include "coxfs/scalar.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace coxfs {

/// Dense univariate polynomial, coefficients from low to high degree, no trailing zeros.
template <class T>
class Poly {
public:
    Poly() = default;
    Poly(const T& c)
    {
        if (!scalar_is_zero(c)) c_.push_back(c);
    }
    Poly(int c) : Poly(T(c)) {}
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly monomial(const T& c, int degree)
    {
        if (degree < 0) throw std::invalid_argument("negative monomial degree");
        std::vector<T> v(degree + 1, T(0));
        v[degree] = c;
        return Poly(std::move(v));
    }
    static Poly x() { return monomial(T(1), 1); }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    /// Lowest exponent with nonzero coefficient; -1 for the zero polynomial.
    int valuation() const
    {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!scalar_is_zero(c_[i])) return static_cast<int>(i);
        return -1;
    }
    bool is_zero() const { return c_.empty(); }
    T coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : T(0); }
    const std::vector<T>& coeffs() const { return c_; }
    T leading() const { return c_.empty() ? T(0) : c_.back(); }

    T eval(const T& at) const
    {
        T acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
        return acc;
    }

    /// p(x^k)
    Poly subs_power(int k) const
    {
        if (c_.empty()) return {};
        std::vector<T> v(degree() * k + 1, T(0));
        for (std::size_t i = 0; i < c_.size(); ++i) v[i * k] = c_[i];
        return Poly(std::move(v));
    }

    template <class F>
    auto map(F f) const -> Poly<decltype(f(std::declval<T>()))>
    {
        using U = decltype(f(std::declval<T>()));
        std::vector<U> v;
        v.reserve(c_.size());
        for (const auto& c : c_) v.push_back(f(c));
        return Poly<U>(std::move(v));
    }

    Poly operator-() const
    {
        Poly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    Poly& operator+=(const Poly& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly& operator*=(const T& s)
    {
        if (scalar_is_zero(s)) return *this = Poly();
        for (auto& c : c_) c *= s;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b)
    {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> v(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (scalar_is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                if (!scalar_is_zero(b.c_[j])) v[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(v));
    }
    friend Poly operator*(Poly a, const T& s) { return a *= s; }
    friend Poly operator*(const T& s, Poly a) { return a *= s; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    /// Quotient and remainder; requires division in T.
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b)
    {
        if (b.is_zero()) throw std::domain_error("polynomial division by zero");
        std::vector<T> r = a.c_;
        int db = b.degree();
        if (a.degree() < db) return {Poly(), a};
        std::vector<T> q(a.degree() - db + 1, T(0));
        T lead_inv = T(1) / b.c_.back();
        for (int i = a.degree(); i >= db; --i) {
            if (scalar_is_zero(r[i])) continue;
            T f = r[i] * lead_inv;
            q[i - db] = f;
            for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.c_[j];
        }
        return {Poly(std::move(q)), Poly(std::move(r))};
    }

    /// Exact quotient; throws if b does not divide a.
    friend Poly exact_div(const Poly& a, const Poly& b)
    {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
        return q;
    }

    /// Ascending form, e.g. "1+2*x^3".
    std::string str(const std::string& var = "x") const
    {
        if (c_.empty()) return "0";
        std::string out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (scalar_is_zero(c_[i])) continue;
            std::string c = scalar_str(c_[i]);
            std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
            std::string term;
            if (i == 0)
                term = scalar_is_atomic(c) ? c : "(" + c + ")";
            else if (c == "1")
                term = mono;
            else if (c == "-1")
                term = "-" + mono;
            else
                term = (scalar_is_atomic(c) ? c : "(" + c + ")") + "*" + mono;
            if (!out.empty() && term[0] != '-') out += "+";
            out += term;
        }
        return out;
    }

private:
    void trim()
    {
        while (!c_.empty() && scalar_is_zero(c_.back())) c_.pop_back();
    }

    std::vector<T> c_;
};

/// x^c * p(1/x); requires c >= deg p.
template <class T>
Poly<T> reverse(const Poly<T>& p, int c)
{
    if (p.is_zero()) return {};
    if (c < p.degree()) throw std::invalid_argument("reverse: exponent below degree");
    std::vector<T> v(c + 1, T(0));
    for (int i = 0; i <= p.degree(); ++i) v[c - i] = p.coeff(i);
    return Poly<T>(std::move(v));
}

template <class T>
Poly<T> pow(const Poly<T>& p, int e)
{
    Poly<T> r(T(1));
    for (int i = 0; i < e; ++i) r *= p;
    return r;
}

using RatPoly = Poly<Rational>;
using CycloPoly = Poly<Cyclo>;

inline CycloPoly to_cyclo_poly(const RatPoly& p)
{
    return p.map([](const Rational& r) { return Cyclo(r); });
}

} // namespace coxfs
