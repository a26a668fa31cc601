#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cspsieve/actions.hpp"
#include "cspsieve/indep.hpp"
#include "cspsieve/qpoly.hpp"

namespace cspsieve {

/// A candidate sieving triple: a family of independent sets, the cyclic
/// action on them, and the polynomial claimed to count fixed sets at roots of
/// unity.
struct CspInstance {
    IndepFamily family;
    CyclicAction action;
    IntLaurentPoly candidate;
    std::string label;
    std::vector<std::string> notes; // carried verbatim into the report
};

/// One divisor's comparison. poly_value is empty when the reduction modulo
/// Phi_d is not constant (the value would depend on the choice of primitive
/// root); quotient_count is filled only for free actions.
struct CspRow {
    long long d = 1;
    long long element = 0; // exponent t of the generator that was checked
    std::optional<Int> poly_value;
    Int fixed_count = 0;
    std::optional<Int> quotient_count;
    bool pass = false;
};

struct CspReport {
    std::string label;
    long long group_order = 1;
    std::vector<CspRow> rows; // ordered by d ascending
    std::vector<std::string> notes;
    bool pass = false;
};

// [n]/[n-rk] * gauss(n-rk, k); requires (r+1)k <= n. k = 0 gives 1.
IntLaurentPoly cycle_power_poly(long long n, long long r, long long k);

// gauss(n-rk+r, k); requires (r+1)k <= n. k = 0 gives 1.
IntLaurentPoly path_power_poly(long long n, long long r, long long k);

// sum_{j=0..k} f_j * gauss(n-j, k-j); base holds f_0..f_k.
IntLaurentPoly whisker_poly(const std::vector<IntLaurentPoly>& base, long long n, long long k);

// a + b, for a certified on I_k(G \ x) and b on I_{k-1}(G \ N[x]).
IntLaurentPoly recursion_combine(const IntLaurentPoly& a, const IntLaurentPoly& b);

// Candidate polynomials for the derived families. Terms whose parameters
// leave the q-analog range contribute zero, matching the empty families.
IntLaurentPoly gear_poly(long long n, long long k);
IntLaurentPoly helm_poly(long long n, long long k);
IntLaurentPoly book_poly(long long n, long long k);

// For every divisor d of the group order, evaluates the candidate at a
// primitive d-th root (exact cyclotomic reduction), counts fixed sets of one
// order-d element by orbit composition, and, when the action is free, also
// counts via the quotient graph. Failures are recorded, not thrown.
CspReport verify(const CspInstance& instance);

// n/(n-rk) * C(n-rk, k), exactly; requires (r+1)k <= n.
Int count_closed_form(long long n, long long r, long long k);

} // namespace cspsieve
