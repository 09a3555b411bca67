#pragma once

#include "coxfs/cyclotomic.hpp"
#include "coxfs/golden.hpp"
#include "coxfs/rational.hpp"

#include <cstdint>
#include <string>

namespace coxfs {

inline bool scalar_is_zero(long long x) { return x == 0; }
inline bool scalar_is_zero(const BigInt& x) { return x == 0; }
inline bool scalar_is_zero(const Rational& x) { return x.is_zero(); }
inline bool scalar_is_zero(const Cyclo& x) { return x.is_zero(); }
inline bool scalar_is_zero(const GoldenRational& x) { return x.is_zero(); }

inline std::string scalar_str(long long x) { return std::to_string(x); }
inline std::string scalar_str(const BigInt& x) { return x.get_str(); }
inline std::string scalar_str(const Rational& x) { return x.str(); }
inline std::string scalar_str(const Cyclo& x) { return x.str(); }
inline std::string scalar_str(const GoldenRational& x) { return x.str(); }

/// True when the printed value is a single signed token (no inner + or -).
inline bool scalar_is_atomic(const std::string& s)
{
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i] == '+' || s[i] == '-') return false;
    return true;
}

} // namespace coxfs
