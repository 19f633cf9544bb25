/*
 * poly.hpp
 * --------
 * Exact integer Laurent polynomials and dense integer polynomials.
 *
 * LaurentPolynomial is the working representation for Alexander polynomials:
 * a map from (possibly negative) exponents to arbitrary-precision integer
 * coefficients, with no zero coefficient ever stored.  DensePolynomial is the
 * nonnegative-exponent form used by the root-counting machinery: a coefficient
 * vector indexed by exponent with a nonzero leading coefficient.
 *
 * All coefficients are GMP integers (mpz_class) and all interval endpoints
 * are GMP rationals (mpq_class); no decision anywhere is made in floating
 * point.
 */
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace knotorder {

using Int = mpz_class;
using Rat = mpq_class;

// Base class for everything this library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ZeroPolynomialError : public Error {
public:
    ZeroPolynomialError() : Error("operation undefined for the zero polynomial") {}
};

class DivisionByZeroError : public Error {
public:
    DivisionByZeroError() : Error("evaluation at t=0 with negative exponents present") {}
};

// x^e for integer e (e < 0 requires x != 0).
Rat rat_pow(const Rat& x, long e);

// Round x to `decimals` digits after the point, half away from zero,
// and format as a plain decimal string ("0.38197", "-1.17628").
std::string format_decimal(const Rat& x, int decimals);

class DensePolynomial;

class LaurentPolynomial {
public:
    LaurentPolynomial() = default;  // zero polynomial

    static LaurentPolynomial constant(Int c);
    static LaurentPolynomial monomial(long exponent, Int coefficient);
    static LaurentPolynomial from_terms(std::map<long, Int> terms);

    bool is_zero() const { return terms_.empty(); }
    const std::map<long, Int>& terms() const { return terms_; }
    Int coefficient(long exponent) const;
    long min_exponent() const;  // throws ZeroPolynomialError on zero
    long max_exponent() const;

    LaurentPolynomial operator+(const LaurentPolynomial& other) const;
    LaurentPolynomial operator-(const LaurentPolynomial& other) const;
    LaurentPolynomial operator*(const LaurentPolynomial& other) const;
    LaurentPolynomial operator-() const;
    bool operator==(const LaurentPolynomial& other) const { return terms_ == other.terms_; }

    // Exact value at a rational point.  Throws DivisionByZeroError when
    // x = 0 and negative exponents are present.
    Rat evaluate(const Rat& x) const;

    // Canonical text: terms in ascending exponent order, e.g. "t^-1 - 1 + t".
    std::string to_string() const;

private:
    std::map<long, Int> terms_;
    void prune();
};

class DensePolynomial {
public:
    DensePolynomial() = default;  // zero polynomial
    explicit DensePolynomial(std::vector<Int> coefficients);

    // Convenience for literals: coefficients in ascending exponent order.
    static DensePolynomial from_coefficients(std::initializer_list<long> coefficients);

    bool is_zero() const { return coeffs_.empty(); }
    // degree of the zero polynomial is -1
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Int>& coefficients() const { return coeffs_; }
    const Int& leading_coefficient() const;
    Int coefficient(size_t exponent) const;

    DensePolynomial operator+(const DensePolynomial& other) const;
    DensePolynomial operator-(const DensePolynomial& other) const;
    DensePolynomial operator*(const DensePolynomial& other) const;
    DensePolynomial operator-() const;
    DensePolynomial operator*(const Int& scalar) const;
    bool operator==(const DensePolynomial& other) const { return coeffs_ == other.coeffs_; }

    DensePolynomial derivative() const;
    // Multiply by t^k.
    DensePolynomial shifted_up(size_t k) const;

    Rat evaluate(const Rat& x) const;
    Int evaluate_int(const Int& x) const;
    // Exact sign of the value at x, computed in integers only.
    int sign_at(const Rat& x) const;
    // Reciprocal polynomial t^deg * p(1/t).
    DensePolynomial reciprocal() const;

    LaurentPolynomial to_laurent(long shift = 0) const;
    std::string to_string(const std::string& variable = "t") const;

private:
    std::vector<Int> coeffs_;
    void trim();
};

// --- integer-polynomial helpers -------------------------------------------

// gcd of all coefficients, nonnegative; 0 for the zero polynomial.
Int content(const DensePolynomial& p);
// p divided by its content; keeps the sign of the leading coefficient.
DensePolynomial primitive_part(const DensePolynomial& p);
// Primitive gcd with positive leading coefficient (gcd(p, 0) = normalized p).
DensePolynomial poly_gcd(const DensePolynomial& a, const DensePolynomial& b);

// Quotient and remainder of the division in Q[t].
struct RationalDivision {
    std::vector<Rat> quotient;
    std::vector<Rat> remainder;
    bool remainder_is_zero() const;
    bool quotient_is_integral() const;
};
RationalDivision divide_in_rationals(const DensePolynomial& p, const DensePolynomial& q);

// Exact quotient in Z[t]; throws Error when the division is not exact.
// Intended for divisions known to be exact (Yun steps, factor removal).
DensePolynomial exact_quotient(const DensePolynomial& p, const DensePolynomial& q);

// --- normalization ----------------------------------------------------------

// q = sign * t^(-shift) * p with nonzero constant term and positive leading
// coefficient.  Roots in (0, oo) are exactly those of p.
struct NormalizedPoly {
    DensePolynomial poly;
    long shift = 0;
    int sign = 1;
};
NormalizedPoly normalize(const LaurentPolynomial& p);

// --- Alexander-specific checks ---------------------------------------------

// True iff p(1/t) = ± t^m p(t), i.e. the normalized coefficient sequence is a
// palindrome up to one global sign.
bool is_symmetric(const LaurentPolynomial& p);

enum class AlexanderViolation {
    Delta1NotUnit,   // |p(1)| != 1
    NotSymmetric,    // coefficient sequence not palindromic up to sign
    NotMonicFibred,  // fibred but |leading| != 1 or |constant| != 1
};
std::string to_string(AlexanderViolation v);

// Empty result means p is a plausible Alexander polynomial (of a fibred knot
// when `fibred` is set).
std::vector<AlexanderViolation> validate_alexander(const LaurentPolynomial& p, bool fibred);

// --- Laurent division -------------------------------------------------------

class InexactDivisionError : public Error {
public:
    explicit InexactDivisionError(std::string remainder_text)
        : Error("inexact division, remainder " + remainder_text),
          remainder(std::move(remainder_text)) {}
    std::string remainder;
};

// Exact quotient in Z[t, 1/t]; throws InexactDivisionError (carrying the
// remainder) when q does not divide p, ZeroPolynomialError when q = 0.
LaurentPolynomial exact_divide(const LaurentPolynomial& p, const LaurentPolynomial& q);

}  // namespace knotorder
