#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace specht {

/// Exact arbitrary-precision rational scalar.  No floating point anywhere.
using Rational = mpq_class;

inline Rational rational_inverse(const Rational& x) {
    if (x == 0) throw std::domain_error("division by zero");
    return Rational(1) / x;
}

std::string scalar_str(const Rational& x);

/// Element of a prime field F_p with runtime modulus.  The default value is
/// the context-free zero (p = 0); it combines with any modulus, so generic
/// code can start accumulators from F().  Any nonzero value carries its p.
class Fp {
public:
    Fp() = default;
    Fp(long long value, long long p) : p_(p) {
        if (p <= 0) throw std::invalid_argument("modulus must be positive");
        v_ = value % p;
        if (v_ < 0) v_ += p;
    }

    long long value() const { return v_; }
    long long modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    friend Fp operator+(const Fp& a, const Fp& b) {
        long long p = merged_modulus(a, b);
        if (p == 0) return Fp();
        return Fp(a.v_ + b.v_, p);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        long long p = merged_modulus(a, b);
        if (p == 0) return Fp();
        return Fp(a.v_ - b.v_, p);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        long long p = merged_modulus(a, b);
        if (p == 0) return Fp();
        return Fp(a.v_ * b.v_, p);
    }
    Fp operator-() const { return p_ == 0 ? Fp() : Fp(-v_, p_); }
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }

    Fp inverse() const;
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
    Fp& operator/=(const Fp& o) { return *this = *this / o; }

    friend bool operator==(const Fp& a, const Fp& b) {
        merged_modulus(a, b);  // consistency check
        return a.v_ == b.v_;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }
    friend bool operator==(const Fp& a, long long b) { return a == Fp::lift(b, a.p_); }
    friend bool operator!=(const Fp& a, long long b) { return !(a == b); }

    std::string str() const { return std::to_string(v_); }

private:
    static long long merged_modulus(const Fp& a, const Fp& b) {
        if (a.p_ == 0) return b.p_;
        if (b.p_ == 0) return a.p_;
        if (a.p_ != b.p_) throw std::logic_error("mixed prime field moduli");
        return a.p_;
    }
    static Fp lift(long long value, long long p) {
        if (p == 0) {
            if (value != 0) throw std::logic_error("cannot lift into unknown modulus");
            return Fp();
        }
        return Fp(value, p);
    }

    long long v_ = 0;
    long long p_ = 0;  // 0 means "zero of any field"
};

std::string scalar_str(const Fp& x);

/// Field traits used by the templated exact algebra: construction of small
/// integers in the right field and exact inversion.
template <class F>
struct FieldOps;

template <>
struct FieldOps<Rational> {
    static Rational from_long(long long k, const Rational& /*model*/) { return Rational(static_cast<long>(k)); }
    static Rational inverse(const Rational& x) { return rational_inverse(x); }
    static bool is_zero(const Rational& x) { return x == 0; }
};

template <>
struct FieldOps<Fp> {
    static Fp from_long(long long k, const Fp& model) {
        if (model.modulus() == 0) {
            if (k == 0) return Fp();
            throw std::logic_error("cannot build scalar without modulus");
        }
        return Fp(k, model.modulus());
    }
    static Fp inverse(const Fp& x) { return x.inverse(); }
    static bool is_zero(const Fp& x) { return x.is_zero(); }
};

}  // namespace specht
