#pragma once

#include <string>
#include <vector>

#include "lapdiam/rational.hpp"

namespace lapdiam {

/// Dense polynomial with arbitrary-precision integer coefficients, c[k] is the x^k
/// coefficient. Trailing zero coefficients are trimmed; the zero polynomial is empty.
class IntegerPolynomial {
public:
    IntegerPolynomial() = default;
    explicit IntegerPolynomial(std::vector<BigInt> coefficients);
    IntegerPolynomial(std::initializer_list<long> coefficients);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<BigInt>& coefficients() const { return coeffs_; }
    const BigInt& coefficient(std::size_t k) const;
    const BigInt& leading() const { return coeffs_.back(); }

    IntegerPolynomial derivative() const;
    /// Non-negative gcd of the coefficients (0 for the zero polynomial).
    BigInt content() const;
    /// Divides by the content and makes the leading coefficient positive.
    IntegerPolynomial primitive_part() const;
    /// Number of lowest-order zero coefficients, i.e. the multiplicity of the root 0.
    std::size_t trailing_zeros() const;

    Rational evaluate(const Rational& x) const;
    /// Sign of p(x) computed without leaving the integers.
    int sign_at(const Rational& x) const;
    /// Sign of p(x) as x -> +inf (positive) or -inf (negative).
    int sign_at_infinity(bool positive) const;

    friend IntegerPolynomial operator+(const IntegerPolynomial& a, const IntegerPolynomial& b);
    friend IntegerPolynomial operator-(const IntegerPolynomial& a, const IntegerPolynomial& b);
    friend IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b);
    IntegerPolynomial operator-() const;
    IntegerPolynomial scaled(const BigInt& factor) const;

    friend bool operator==(const IntegerPolynomial&, const IntegerPolynomial&) = default;

    std::string to_string() const;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

/// prem(a, b) scaled by a positive constant: |lc(b)|^(deg a - deg b + 1) * a mod b.
/// The positive scaling preserves signs, which Sturm chains rely on.
IntegerPolynomial sign_preserving_remainder(const IntegerPolynomial& a, const IntegerPolynomial& b);

/// Primitive gcd with positive leading coefficient (primitive pseudo-remainder sequence).
IntegerPolynomial gcd(const IntegerPolynomial& a, const IntegerPolynomial& b);

/// a / b when b divides a over the integers; throws std::domain_error otherwise.
IntegerPolynomial exact_divide(const IntegerPolynomial& a, const IntegerPolynomial& b);

struct SquareFreeFactor {
    IntegerPolynomial factor;  // primitive, square-free, positive leading coefficient
    std::size_t multiplicity;
};

/// Yun's algorithm: p = content * prod factor_k^k over the listed factors.
/// Constant factors are omitted.
std::vector<SquareFreeFactor> square_free_decomposition(const IntegerPolynomial& p);

/// Sturm chain of a square-free polynomial, with primitive reductions at every step.
class SturmChain {
public:
    explicit SturmChain(const IntegerPolynomial& square_free);

    /// Sign variations at x, zeros skipped.
    std::size_t variations_at(const Rational& x) const;
    std::size_t variations_at_infinity(bool positive) const;

    /// Distinct roots in the half-open interval (lo, hi].
    std::size_t roots_in(const Rational& lo, const Rational& hi) const;
    /// Distinct roots strictly greater than x.
    std::size_t roots_above(const Rational& x) const;

    const std::vector<IntegerPolynomial>& chain() const { return chain_; }

private:
    std::vector<IntegerPolynomial> chain_;
};

}  // namespace lapdiam
