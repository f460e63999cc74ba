#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace specht {

/// Sparse integer Laurent polynomial in one variable q.
///
/// Canonical form: terms sorted by strictly increasing exponent, no zero
/// coefficients stored, so structural equality coincides with mathematical
/// equality.
class LaurentPoly {
public:
    using Term = std::pair<long, long long>;  // (exponent, coefficient)

    LaurentPoly() = default;
    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return monomial(0, 1); }
    static LaurentPoly monomial(long exponent, long long coefficient);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    long long coefficient(long exponent) const;
    long min_exponent() const;  // requires nonzero
    long max_exponent() const;  // requires nonzero

    LaurentPoly& operator+=(const LaurentPoly& other);
    LaurentPoly& operator-=(const LaurentPoly& other);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    /// Multiply by q^d (grading shift <d>).
    LaurentPoly shifted(long d) const;

    /// Substitute q -> q^{-1} (graded dual dimension).
    LaurentPoly bar() const;

    /// Evaluate at q = 1 (total ungraded dimension).
    long long evaluate_at_one() const;

    bool operator==(const LaurentPoly&) const = default;

    /// Human-readable form like "q^-1 + 2 + q^3".
    std::string str() const;

private:
    void normalize();
    std::vector<Term> terms_;
};

}  // namespace specht
