#include "coxfs/rational.hpp"

#include <cctype>

namespace coxfs {

Rational::Rational(const BigInt& n, const BigInt& d)
{
    if (d == 0) throw std::domain_error("rational with zero denominator");
    q_ = mpq_class(n, d);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty rational");
    auto slash = s.find('/');
    auto check_int = [](const std::string& t) {
        std::size_t i = (t.size() > 0 && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i == t.size()) throw std::invalid_argument("malformed rational: " + t);
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i])))
                throw std::invalid_argument("malformed rational: " + t);
    };
    auto strip_plus = [](std::string t) { return (!t.empty() && t[0] == '+') ? t.substr(1) : t; };
    if (slash == std::string::npos) {
        check_int(s);
        return Rational(BigInt(strip_plus(s)));
    }
    std::string n = s.substr(0, slash), d = s.substr(slash + 1);
    check_int(n);
    check_int(d);
    return Rational(BigInt(strip_plus(n)), BigInt(strip_plus(d)));
}

long Rational::to_long() const
{
    if (!is_integer() || !q_.get_num().fits_slong_p())
        throw std::domain_error("rational is not a machine integer: " + str());
    return q_.get_num().get_si();
}

std::string Rational::str() const
{
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero()) throw std::domain_error("division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::inverse() const
{
    if (is_zero()) throw std::domain_error("inverse of zero");
    return Rational(mpq_class(1 / q_));
}

Rational pow(const Rational& base, long exponent)
{
    if (exponent < 0) return pow(base.inverse(), -exponent);
    Rational result(1), b = base;
    while (exponent > 0) {
        if (exponent & 1) result *= b;
        b *= b;
        exponent >>= 1;
    }
    return result;
}

BigInt binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

} // namespace coxfs
