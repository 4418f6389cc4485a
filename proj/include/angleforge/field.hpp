#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace angleforge {

/// Arbitrary-precision rationals; the default ground field.
using Rational = mpq_class;

/// Residue classes modulo a prime. The modulus is process-wide and must be
/// set before any value is created (the CLI does this once from `--field`).
class Fp {
public:
    Fp() = default;
    Fp(long long v) : v_(reduce(v)) {}

    static std::uint64_t modulus() { return p_; }
    static void set_modulus(std::uint64_t p) {
        if (p < 2 || p > 0xFFFFFFFFull || !is_prime(p))
            throw std::invalid_argument("modulus must be a prime below 2^32");
        p_ = p;
    }
    static bool is_prime(std::uint64_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    std::uint64_t value() const { return v_; }

    Fp& operator+=(const Fp& o) { v_ += o.v_; if (v_ >= p_) v_ -= p_; return *this; }
    Fp& operator-=(const Fp& o) { v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_; return *this; }
    Fp& operator*=(const Fp& o) { v_ = v_ * o.v_ % p_; return *this; }
    Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }
    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
    Fp operator-() const { Fp r; r.v_ = v_ == 0 ? 0 : p_ - v_; return r; }
    friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Fp& a, const Fp& b) { return a.v_ != b.v_; }

    Fp inverse() const {
        if (v_ == 0) throw std::domain_error("division by zero in F_p");
        std::uint64_t result = 1, base = v_, e = p_ - 2;
        while (e) {
            if (e & 1) result = result * base % p_;
            base = base * base % p_;
            e >>= 1;
        }
        Fp r;
        r.v_ = result;
        return r;
    }

private:
    static std::uint64_t reduce(long long v) {
        long long m = static_cast<long long>(p_);
        long long r = v % m;
        return static_cast<std::uint64_t>(r < 0 ? r + m : r);
    }
    std::uint64_t v_ = 0;
    static inline std::uint64_t p_ = 32003;
};

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const Fp& x) { return x.value() == 0; }

inline std::string to_string(const Rational& x) { return x.get_str(); }
inline std::string to_string(const Fp& x) { return std::to_string(x.value()); }

/// Parses "a" or "a/b".
template <class K>
K parse_scalar(const std::string& s);

template <>
inline Rational parse_scalar<Rational>(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    r.canonicalize();
    return r;
}

template <>
inline Fp parse_scalar<Fp>(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Fp(std::stoll(s));
    return Fp(std::stoll(s.substr(0, slash))) / Fp(std::stoll(s.substr(slash + 1)));
}

template <class K>
std::string field_name();
template <>
inline std::string field_name<Rational>() { return "Q"; }
template <>
inline std::string field_name<Fp>() { return "F_" + std::to_string(Fp::modulus()); }

}  // namespace angleforge
