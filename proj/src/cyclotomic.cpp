#include "coxfs/cyclotomic.hpp"

#include <cctype>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace coxfs {

long gcd_l(long a, long b)
{
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

long lcm_l(long a, long b) { return a / gcd_l(a, b) * b; }

std::vector<long> prime_factors(long n)
{
    std::vector<long> ps;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

long euler_phi(long n)
{
    long r = n;
    for (long p : prime_factors(n)) r = r / p * (p - 1);
    return r;
}

namespace {

using IntVec = std::vector<long long>;

struct Field {
    long n = 1;
    long phi = 1;
    std::vector<IntVec> red; // red[e] = E(n)^e in the power basis, 0 <= e < n
};

struct Descent {
    long d = 1;
    long phi_d = 1;
    std::vector<IntVec> basis;           // basis[k] = image of E(d)^k, length phi(n)
    std::vector<long> rows;              // pivot rows
    std::vector<std::vector<Rational>> inv; // inverse of basis restricted to pivot rows
};

std::mutex& cache_mutex()
{
    static std::mutex m;
    return m;
}

std::map<long, IntVec>& cyclo_poly_cache()
{
    static std::map<long, IntVec> c;
    return c;
}

IntVec cyclo_poly_locked(long n)
{
    auto& cache = cyclo_poly_cache();
    if (auto it = cache.find(n); it != cache.end()) return it->second;
    // x^n - 1 divided by Phi_d for every proper divisor d
    IntVec p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (long d = 1; d < n; ++d) {
        if (n % d) continue;
        IntVec q = cyclo_poly_locked(d);
        long dq = static_cast<long>(q.size()) - 1;
        long dp = static_cast<long>(p.size()) - 1;
        IntVec quot(dp - dq + 1, 0);
        for (long i = dp; i >= dq; --i) {
            long long c = p[i];
            quot[i - dq] = c;
            if (c == 0) continue;
            for (long j = 0; j <= dq; ++j) p[i - dq + j] -= c * q[j];
        }
        p = quot;
    }
    cache[n] = p;
    return p;
}

std::map<long, std::unique_ptr<Field>>& field_cache()
{
    static std::map<long, std::unique_ptr<Field>> c;
    return c;
}

std::map<std::pair<long, long>, std::unique_ptr<Descent>>& descent_cache()
{
    static std::map<std::pair<long, long>, std::unique_ptr<Descent>> c;
    return c;
}

const Field& field(long n)
{
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto& cache = field_cache();
    if (auto it = cache.find(n); it != cache.end()) return *it->second;
    auto f = std::make_unique<Field>();
    f->n = n;
    IntVec phi_poly = cyclo_poly_locked(n);
    f->phi = static_cast<long>(phi_poly.size()) - 1;
    f->red.resize(n);
    IntVec v(f->phi, 0);
    v[0] = 1;
    for (long e = 0; e < n; ++e) {
        f->red[e] = v;
        long long top = v[f->phi - 1];
        for (long i = f->phi - 1; i > 0; --i) v[i] = v[i - 1];
        v[0] = 0;
        if (top != 0)
            for (long i = 0; i < f->phi; ++i) v[i] -= top * phi_poly[i];
    }
    const Field& ref = *f;
    cache[n] = std::move(f);
    return ref;
}

std::vector<std::vector<Rational>> invert_square(std::vector<std::vector<Rational>> a)
{
    std::size_t n = a.size();
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) throw std::logic_error("singular matrix in cyclotomic descent");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rational s = a[col][col].inverse();
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] *= s;
            inv[col][j] *= s;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            Rational f = a[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

const Descent& descent(long n, long d)
{
    const Field& fn = field(n);
    const Field& fd = field(d);
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto& cache = descent_cache();
    auto key = std::make_pair(n, d);
    if (auto it = cache.find(key); it != cache.end()) return *it->second;
    auto ds = std::make_unique<Descent>();
    ds->d = d;
    ds->phi_d = fd.phi;
    for (long k = 0; k < fd.phi; ++k) ds->basis.push_back(fn.red[(k * (n / d)) % n]);
    // choose pivot rows by elimination on the transposed basis
    std::vector<std::vector<Rational>> work(fd.phi, std::vector<Rational>(fn.phi));
    for (long k = 0; k < fd.phi; ++k)
        for (long i = 0; i < fn.phi; ++i) work[k][i] = Rational(ds->basis[k][i]);
    long r = 0;
    for (long col = 0; col < fn.phi && r < fd.phi; ++col) {
        long piv = r;
        while (piv < fd.phi && work[piv][col].is_zero()) ++piv;
        if (piv == fd.phi) continue;
        std::swap(work[piv], work[r]);
        for (long k = r + 1; k < fd.phi; ++k) {
            if (work[k][col].is_zero()) continue;
            Rational f = work[k][col] / work[r][col];
            for (long i = col; i < fn.phi; ++i) work[k][i] -= f * work[r][i];
        }
        ds->rows.push_back(col);
        ++r;
    }
    std::vector<std::vector<Rational>> sq(fd.phi, std::vector<Rational>(fd.phi));
    for (long a = 0; a < fd.phi; ++a)
        for (long k = 0; k < fd.phi; ++k) sq[a][k] = Rational(ds->basis[k][ds->rows[a]]);
    ds->inv = invert_square(std::move(sq));
    const Descent& ref = *ds;
    cache[key] = std::move(ds);
    return ref;
}

void add_scaled(std::vector<Rational>& acc, const IntVec& v, const Rational& s)
{
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        if (v[i] == 1)
            acc[i] += s;
        else if (v[i] == -1)
            acc[i] -= s;
        else
            acc[i] += s * Rational(static_cast<long>(v[i]));
    }
}

long mod_l(long a, long n)
{
    long r = a % n;
    return r < 0 ? r + n : r;
}

} // namespace

std::vector<long long> cyclotomic_polynomial(long n)
{
    if (n < 1) throw std::invalid_argument("cyclotomic polynomial of order < 1");
    std::lock_guard<std::mutex> lock(cache_mutex());
    return cyclo_poly_locked(n);
}

Cyclo Cyclo::zeta(long n, long k)
{
    if (n < 1) throw std::invalid_argument("E(n) needs n >= 1");
    const Field& f = field(n);
    std::vector<Rational> c(f.phi, Rational(0));
    add_scaled(c, f.red[mod_l(k, n)], Rational(1));
    Cyclo x(n, std::move(c));
    x.normalize();
    return x;
}

Cyclo Cyclo::from_exponents(long n, const std::vector<Rational>& coeffs)
{
    if (n < 1) throw std::invalid_argument("E(n) needs n >= 1");
    const Field& f = field(n);
    std::vector<Rational> c(f.phi, Rational(0));
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        if (!coeffs[k].is_zero()) add_scaled(c, f.red[k % n], coeffs[k]);
    Cyclo x(n, std::move(c));
    x.normalize();
    return x;
}

std::vector<Rational> Cyclo::lifted(long to) const
{
    if (to == n_) return c_;
    const Field& f = field(to);
    std::vector<Rational> c(f.phi, Rational(0));
    long step = to / n_;
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (!c_[k].is_zero()) add_scaled(c, f.red[(static_cast<long>(k) * step) % to], c_[k]);
    return c;
}

void Cyclo::normalize()
{
    for (;;) {
        if (n_ == 1) return;
        bool rational = true;
        for (std::size_t k = 1; k < c_.size(); ++k)
            if (!c_[k].is_zero()) {
                rational = false;
                break;
            }
        if (rational) {
            c_.resize(1);
            n_ = 1;
            return;
        }
        bool moved = false;
        for (long p : prime_factors(n_)) {
            long d = n_ / p;
            if (d % 4 == 2) d /= 2;
            const Descent& ds = descent(n_, d);
            std::vector<Rational> y(ds.phi_d, Rational(0));
            for (long a = 0; a < ds.phi_d; ++a)
                for (long b = 0; b < ds.phi_d; ++b)
                    if (!ds.inv[a][b].is_zero()) y[a] += ds.inv[a][b] * c_[ds.rows[b]];
            std::vector<Rational> back(c_.size(), Rational(0));
            for (long k = 0; k < ds.phi_d; ++k)
                if (!y[k].is_zero()) add_scaled(back, ds.basis[k], y[k]);
            if (back == c_) {
                n_ = d;
                c_ = std::move(y);
                moved = true;
                break;
            }
        }
        if (!moved) return;
    }
}

Rational Cyclo::to_rational() const
{
    if (n_ != 1) throw std::domain_error("cyclotomic value is not rational: " + str());
    return c_[0];
}

bool Cyclo::is_real() const { return n_ <= 2 || conj() == *this; }

Cyclo Cyclo::galois(long a) const
{
    if (n_ == 1) return *this;
    if (gcd_l(a, n_) != 1) throw std::invalid_argument("Galois exponent not coprime to conductor");
    const Field& f = field(n_);
    std::vector<Rational> c(f.phi, Rational(0));
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (!c_[k].is_zero()) add_scaled(c, f.red[mod_l(a * static_cast<long>(k), n_)], c_[k]);
    return Cyclo(n_, std::move(c));
}

Cyclo Cyclo::inverse() const
{
    if (is_zero()) throw std::domain_error("inverse of zero cyclotomic");
    if (n_ == 1) return Cyclo(c_[0].inverse());
    // solve (x * y) = 1 via the multiplication-by-x matrix
    const Field& f = field(n_);
    long phi = f.phi;
    std::vector<std::vector<Rational>> m(phi, std::vector<Rational>(phi, Rational(0)));
    for (long j = 0; j < phi; ++j) {
        std::vector<Rational> col(phi, Rational(0));
        for (long k = 0; k < phi; ++k)
            if (!c_[k].is_zero()) add_scaled(col, f.red[(k + j) % n_], c_[k]);
        for (long i = 0; i < phi; ++i) m[i][j] = col[i];
    }
    auto inv = invert_square(std::move(m));
    std::vector<Rational> y(phi);
    for (long i = 0; i < phi; ++i) y[i] = inv[i][0];
    Cyclo r(n_, std::move(y));
    r.normalize();
    return r;
}

std::complex<double> Cyclo::to_complex() const
{
    std::complex<long double> s = 0;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        long double ang = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(k) / n_;
        s += static_cast<long double>(c_[k].to_double()) * std::complex<long double>(std::cos(ang), std::sin(ang));
    }
    return {static_cast<double>(s.real()), static_cast<double>(s.imag())};
}

int Cyclo::real_sign() const
{
    if (is_zero()) return 0;
    if (n_ == 1) return c_[0].sign();
    if (!is_real()) throw std::domain_error("sign of a non-real cyclotomic: " + str());
    double v = to_complex().real();
    if (std::abs(v) < 1e-12) throw std::domain_error("sign undetermined in double precision: " + str());
    return v > 0 ? 1 : -1;
}

std::string Cyclo::str() const
{
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        const Rational& c = c_[k];
        if (c.is_zero()) continue;
        std::string term;
        if (k == 0) {
            term = c.str();
        } else {
            std::string mono = "E(" + std::to_string(n_) + ")";
            if (k > 1) mono += "^" + std::to_string(k);
            if (c == Rational(1))
                term = mono;
            else if (c == Rational(-1))
                term = "-" + mono;
            else
                term = c.str() + "*" + mono;
        }
        if (!out.empty() && term[0] != '-') out += "+";
        out += term;
    }
    return out;
}

Cyclo Cyclo::operator-() const
{
    std::vector<Rational> c = c_;
    for (auto& x : c) x = -x;
    return Cyclo(n_, std::move(c));
}

Cyclo& Cyclo::operator+=(const Cyclo& o)
{
    if (o.n_ == 1 && n_ != 1) {
        c_[0] += o.c_[0];
        return *this;
    }
    long l = lcm_l(n_, o.n_);
    std::vector<Rational> a = lifted(l);
    std::vector<Rational> b = o.lifted(l);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    n_ = l;
    c_ = std::move(a);
    normalize();
    return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) { return *this += -o; }

Cyclo& Cyclo::operator*=(const Cyclo& o)
{
    if (o.n_ == 1) {
        if (o.c_[0].is_zero()) return *this = Cyclo();
        for (auto& x : c_) x *= o.c_[0];
        return *this;
    }
    if (n_ == 1) {
        Rational s = c_[0];
        *this = o;
        if (s.is_zero()) return *this = Cyclo();
        for (auto& x : c_) x *= s;
        return *this;
    }
    long l = lcm_l(n_, o.n_);
    const Field& f = field(l);
    long sa = l / n_, sb = l / o.n_;
    std::vector<Rational> acc(l, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j].is_zero()) continue;
            acc[(static_cast<long>(i) * sa + static_cast<long>(j) * sb) % l] += c_[i] * o.c_[j];
        }
    }
    std::vector<Rational> c(f.phi, Rational(0));
    for (long e = 0; e < l; ++e)
        if (!acc[e].is_zero()) add_scaled(c, f.red[e], acc[e]);
    n_ = l;
    c_ = std::move(c);
    normalize();
    return *this;
}

Cyclo pow(const Cyclo& base, long exponent)
{
    if (exponent < 0) return pow(base.inverse(), -exponent);
    Cyclo result(1), b = base;
    while (exponent > 0) {
        if (exponent & 1) result *= b;
        exponent >>= 1;
        if (exponent) b *= b;
    }
    return result;
}

Cyclo sqrt5() { return Cyclo(2) * (Cyclo::zeta(5, 1) + Cyclo::zeta(5, 4)) + Cyclo(1); }

Cyclo two_cos(long n, long k) { return Cyclo::zeta(n, k) + Cyclo::zeta(n, -k); }

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    Cyclo parse_all()
    {
        Cyclo v = expr();
        skip();
        if (pos_ != s_.size()) fail("trailing input");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what)
    {
        throw std::invalid_argument("cannot parse cyclotomic '" + std::string(s_) + "': " + what);
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    BigInt integer()
    {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return BigInt(std::string(s_.substr(start, pos_ - start)));
    }

    long small_integer()
    {
        BigInt v = integer();
        if (!v.fits_slong_p()) fail("integer too large");
        return v.get_si();
    }

    Cyclo expr()
    {
        Cyclo v;
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        v = term();
        if (neg) v = -v;
        for (;;) {
            if (eat('+'))
                v += term();
            else if (eat('-'))
                v -= term();
            else
                break;
        }
        return v;
    }

    Cyclo term()
    {
        Cyclo v = factor();
        for (;;) {
            if (eat('*'))
                v *= factor();
            else if (eat('/')) {
                Cyclo d = factor();
                if (d.is_zero()) fail("division by zero");
                v /= d;
            } else
                break;
        }
        return v;
    }

    Cyclo factor()
    {
        Cyclo b = base();
        if (eat('^')) {
            bool neg = eat('-');
            long e = small_integer();
            b = pow(b, neg ? -e : e);
        }
        return b;
    }

    Cyclo base()
    {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Cyclo v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        if (c == 'E') {
            ++pos_;
            if (!eat('(')) fail("expected '(' after E");
            long n = small_integer();
            if (n < 1) fail("E(n) needs n >= 1");
            if (!eat(')')) fail("expected ')'");
            return Cyclo::zeta(n, 1);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Cyclo(Rational(integer()));
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace

Cyclo Cyclo::parse(std::string_view text) { return Parser(text).parse_all(); }

} // namespace coxfs
