#include "specht/scalar.hpp"

namespace specht {

std::string scalar_str(const Rational& x) {
    Rational c = x;
    c.canonicalize();
    return c.get_str();
}

std::string scalar_str(const Fp& x) { return x.str(); }

Fp Fp::inverse() const {
    if (p_ == 0 || v_ == 0) throw std::domain_error("division by zero in F_p");
    // Extended Euclid.
    long long a = v_, b = p_, x0 = 1, x1 = 0;
    while (b != 0) {
        long long q = a / b;
        long long t = a - q * b;
        a = b;
        b = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
    }
    if (a != 1) throw std::domain_error("value not invertible; modulus not prime?");
    return Fp(x0, p_);
}

}  // namespace specht
