#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cspsieve/errors.hpp"

namespace cspsieve {

using Int = boost::multiprecision::cpp_int;

/// Integer-coefficient Laurent polynomial in one variable q, stored densely:
/// coeffs()[i] is the coefficient of q^(lowest_exp() + i). Normalized so the
/// first and last stored coefficients are nonzero; the zero polynomial has an
/// empty coefficient vector and lowest exponent 0. Values are immutable after
/// construction and safe to share across threads.
class IntLaurentPoly {
  public:
    IntLaurentPoly() = default; // zero

    static IntLaurentPoly zero() { return {}; }
    static IntLaurentPoly one() { return term(1, 0); }
    static IntLaurentPoly term(Int c, int exp);
    static IntLaurentPoly from_coeffs(int lowest_exp, std::vector<Int> coeffs);
    // terms: (exponent, coefficient) pairs, repeats allowed and summed
    static IntLaurentPoly from_terms(const std::vector<std::pair<int, Int>>& terms);

    bool is_zero() const { return coeffs_.empty(); }
    int lowest_exp() const { return offset_; }
    int degree() const; // throws on the zero polynomial
    const std::vector<Int>& coeffs() const { return coeffs_; }
    Int coeff(int exp) const;
    Int at_one() const; // coefficient sum = value at q = 1

    // sparse form sorted by exponent, zero coefficients omitted
    std::vector<std::pair<int, Int>> terms() const;

    IntLaurentPoly operator-() const;
    friend IntLaurentPoly operator+(const IntLaurentPoly& f, const IntLaurentPoly& g);
    friend IntLaurentPoly operator-(const IntLaurentPoly& f, const IntLaurentPoly& g);
    friend IntLaurentPoly operator*(const IntLaurentPoly& f, const IntLaurentPoly& g);
    friend bool operator==(const IntLaurentPoly& f, const IntLaurentPoly& g);
    friend bool operator!=(const IntLaurentPoly& f, const IntLaurentPoly& g);

  private:
    int offset_ = 0;
    std::vector<Int> coeffs_;

    void normalize();
};

inline IntLaurentPoly add(const IntLaurentPoly& f, const IntLaurentPoly& g) { return f + g; }
inline IntLaurentPoly sub(const IntLaurentPoly& f, const IntLaurentPoly& g) { return f - g; }
inline IntLaurentPoly mul(const IntLaurentPoly& f, const IntLaurentPoly& g) { return f * g; }

// c * q^m * f
IntLaurentPoly scale_shift(const IntLaurentPoly& f, const Int& c, int m);

// Quotient h with f = g*h; throws NotDivisible when the division over the
// integers leaves a remainder.
IntLaurentPoly exact_div(const IntLaurentPoly& f, const IntLaurentPoly& g);

// q-integer [n] = 1 + q + ... + q^(n-1); [0] = 0.
IntLaurentPoly q_int(long long n);

// Gaussian binomial, by exact division of prod [n-i+1] by prod [i].
// Zero polynomial for k < 0 or k > n; one for k = 0.
IntLaurentPoly gauss(long long n, long long k);

// Cyclotomic polynomial Phi_d via (q^d - 1) / prod_{e|d, e<d} Phi_e.
// Memoized per process; safe for concurrent callers.
const IntLaurentPoly& cyclotomic(int d);

/// Order d of a primitive root of unity omega.
struct RootOfUnitySpec {
    int d = 1;
};

/// Result of evaluating at a primitive d-th root: either an integer (the same
/// for every primitive root of that order) or, when the reduction modulo
/// Phi_d is not constant, the residue witnessing non-rationality.
struct RootValue {
    std::optional<Int> value;
    IntLaurentPoly residue;

    bool rational() const { return value.has_value(); }
};

// Shifts exponents mod d, reduces modulo Phi_d over the integers; a constant
// remainder is f(omega) for every primitive d-th root omega simultaneously.
RootValue eval_at_primitive_root(const IntLaurentPoly& f, RootOfUnitySpec spec);

/// Reduced fraction, denominator positive.
struct Rational {
    Int num;
    Int den;
};

bool operator==(const Rational& a, const Rational& b);

// lim_{q->omega} [a]/[b] for a = b mod n, d | n: (a/d)/(b/d) if d | a, else 1.
Rational limit_ratio_at_root(long long a, long long b, int d);

// Gaussian binomial at a primitive d-th root, d | n: C(n/d, k/d) when d | k,
// else 0.
Int gauss_at_root(long long n, long long k, int d);

Int binomial(long long n, long long k);

// Human-readable form, ascending exponents, e.g. "2 + q + q^2".
std::string to_string(const IntLaurentPoly& f);

} // namespace cspsieve
