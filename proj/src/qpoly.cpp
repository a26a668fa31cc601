#include "cspsieve/qpoly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace cspsieve {

void IntLaurentPoly::normalize() {
    size_t lo = 0;
    while (lo < coeffs_.size() && coeffs_[lo] == 0) ++lo;
    size_t hi = coeffs_.size();
    while (hi > lo && coeffs_[hi - 1] == 0) --hi;
    if (lo == hi) {
        coeffs_.clear();
        offset_ = 0;
        return;
    }
    if (lo > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lo));
        offset_ += static_cast<int>(lo);
    }
    coeffs_.resize(hi - lo);
}

IntLaurentPoly IntLaurentPoly::term(Int c, int exp) {
    IntLaurentPoly p;
    if (c != 0) {
        p.offset_ = exp;
        p.coeffs_.push_back(std::move(c));
    }
    return p;
}

IntLaurentPoly IntLaurentPoly::from_coeffs(int lowest_exp, std::vector<Int> coeffs) {
    IntLaurentPoly p;
    p.offset_ = lowest_exp;
    p.coeffs_ = std::move(coeffs);
    p.normalize();
    return p;
}

IntLaurentPoly IntLaurentPoly::from_terms(const std::vector<std::pair<int, Int>>& terms) {
    if (terms.empty()) return {};
    int lo = terms[0].first;
    int hi = terms[0].first;
    for (const auto& [e, c] : terms) {
        lo = std::min(lo, e);
        hi = std::max(hi, e);
    }
    std::vector<Int> coeffs(static_cast<size_t>(hi - lo + 1));
    for (const auto& [e, c] : terms) coeffs[static_cast<size_t>(e - lo)] += c;
    return from_coeffs(lo, std::move(coeffs));
}

int IntLaurentPoly::degree() const {
    if (is_zero()) throw Error("degree of the zero polynomial is undefined");
    return offset_ + static_cast<int>(coeffs_.size()) - 1;
}

Int IntLaurentPoly::coeff(int exp) const {
    if (exp < offset_ || exp >= offset_ + static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<size_t>(exp - offset_)];
}

Int IntLaurentPoly::at_one() const {
    Int s = 0;
    for (const Int& c : coeffs_) s += c;
    return s;
}

std::vector<std::pair<int, Int>> IntLaurentPoly::terms() const {
    std::vector<std::pair<int, Int>> out;
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) out.emplace_back(offset_ + static_cast<int>(i), coeffs_[i]);
    return out;
}

IntLaurentPoly IntLaurentPoly::operator-() const {
    IntLaurentPoly p = *this;
    for (Int& c : p.coeffs_) c = -c;
    return p;
}

IntLaurentPoly operator+(const IntLaurentPoly& f, const IntLaurentPoly& g) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    int lo = std::min(f.offset_, g.offset_);
    int hi = std::max(f.offset_ + static_cast<int>(f.coeffs_.size()),
                      g.offset_ + static_cast<int>(g.coeffs_.size()));
    std::vector<Int> coeffs(static_cast<size_t>(hi - lo));
    for (size_t i = 0; i < f.coeffs_.size(); ++i)
        coeffs[static_cast<size_t>(f.offset_ - lo) + i] += f.coeffs_[i];
    for (size_t i = 0; i < g.coeffs_.size(); ++i)
        coeffs[static_cast<size_t>(g.offset_ - lo) + i] += g.coeffs_[i];
    return IntLaurentPoly::from_coeffs(lo, std::move(coeffs));
}

IntLaurentPoly operator-(const IntLaurentPoly& f, const IntLaurentPoly& g) {
    return f + (-g);
}

IntLaurentPoly operator*(const IntLaurentPoly& f, const IntLaurentPoly& g) {
    if (f.is_zero() || g.is_zero()) return {};
    std::vector<Int> coeffs(f.coeffs_.size() + g.coeffs_.size() - 1);
    for (size_t i = 0; i < f.coeffs_.size(); ++i) {
        if (f.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < g.coeffs_.size(); ++j)
            coeffs[i + j] += f.coeffs_[i] * g.coeffs_[j];
    }
    return IntLaurentPoly::from_coeffs(f.offset_ + g.offset_, std::move(coeffs));
}

bool operator==(const IntLaurentPoly& f, const IntLaurentPoly& g) {
    return f.offset_ == g.offset_ && f.coeffs_ == g.coeffs_;
}

bool operator!=(const IntLaurentPoly& f, const IntLaurentPoly& g) { return !(f == g); }

IntLaurentPoly scale_shift(const IntLaurentPoly& f, const Int& c, int m) {
    if (c == 0 || f.is_zero()) return {};
    std::vector<Int> coeffs = f.coeffs();
    for (Int& x : coeffs) x *= c;
    return IntLaurentPoly::from_coeffs(f.lowest_exp() + m, std::move(coeffs));
}

IntLaurentPoly exact_div(const IntLaurentPoly& f, const IntLaurentPoly& g) {
    if (g.is_zero()) throw InvalidParams("exact_div: division by the zero polynomial");
    if (f.is_zero()) return {};

    // Both operands are normalized, so their coefficient vectors start and
    // end nonzero; the Laurent shift is carried separately in the offsets.
    std::vector<Int> rem = f.coeffs();
    const std::vector<Int>& den = g.coeffs();
    if (rem.size() < den.size())
        throw NotDivisible("exact_div: divisor degree exceeds dividend degree");

    std::vector<Int> quot(rem.size() - den.size() + 1);
    const Int& lead = den.back();
    for (size_t i = quot.size(); i-- > 0;) {
        Int top = rem[i + den.size() - 1];
        if (top == 0) continue;
        if (top % lead != 0)
            throw NotDivisible("exact_div: leading coefficient does not divide");
        Int q = top / lead;
        quot[i] = q;
        for (size_t j = 0; j < den.size(); ++j) rem[i + j] -= q * den[j];
    }
    for (const Int& c : rem)
        if (c != 0) throw NotDivisible("exact_div: nonzero remainder");

    return IntLaurentPoly::from_coeffs(f.lowest_exp() - g.lowest_exp(), std::move(quot));
}

IntLaurentPoly q_int(long long n) {
    if (n < 0) throw InvalidParams("q_int: n must be nonnegative");
    std::vector<Int> coeffs(static_cast<size_t>(n), Int(1));
    return IntLaurentPoly::from_coeffs(0, std::move(coeffs));
}

IntLaurentPoly gauss(long long n, long long k) {
    if (k == 0) return IntLaurentPoly::one();
    if (k < 0 || n < k) return {};
    IntLaurentPoly num = IntLaurentPoly::one();
    IntLaurentPoly den = IntLaurentPoly::one();
    for (long long i = 1; i <= k; ++i) {
        num = num * q_int(n - i + 1);
        den = den * q_int(i);
    }
    return exact_div(num, den);
}

const IntLaurentPoly& cyclotomic(int d) {
    if (d < 1) throw InvalidParams("cyclotomic: d must be positive");
    static std::mutex memo_mutex;
    static std::map<int, IntLaurentPoly> memo;
    std::lock_guard<std::mutex> lock(memo_mutex);

    // Iterative fill so a deep first query does not recurse under the lock.
    for (int m = 1; m <= d; ++m) {
        if (memo.count(m)) continue;
        IntLaurentPoly p = q_int(m) * IntLaurentPoly::from_coeffs(0, {-1, 1}); // q^m - 1
        for (int e = 1; e < m; ++e)
            if (m % e == 0) p = exact_div(p, memo.at(e));
        memo.emplace(m, std::move(p));
    }
    return memo.at(d);
}

RootValue eval_at_primitive_root(const IntLaurentPoly& f, RootOfUnitySpec spec) {
    const int d = spec.d;
    if (d < 1) throw InvalidParams("eval_at_primitive_root: d must be positive");

    // omega^d = 1, so exponents fold to their residues mod d.
    std::vector<Int> folded(static_cast<size_t>(d));
    for (const auto& [e, c] : f.terms()) {
        int r = e % d;
        if (r < 0) r += d;
        folded[static_cast<size_t>(r)] += c;
    }

    // Remainder modulo Phi_d (monic, so division stays in the integers).
    const IntLaurentPoly& phi = cyclotomic(d);
    const std::vector<Int>& den = phi.coeffs();
    const size_t deg_phi = den.size() - 1;
    std::vector<Int> rem = std::move(folded);
    for (size_t i = rem.size(); i-- > deg_phi;) {
        Int q = rem[i];
        if (q == 0) continue;
        size_t base = i - deg_phi;
        for (size_t j = 0; j < den.size(); ++j) rem[base + j] -= q * den[j];
    }

    IntLaurentPoly residue = IntLaurentPoly::from_coeffs(0, std::move(rem));
    RootValue out;
    if (residue.is_zero()) {
        out.value = 0;
    } else if (residue.degree() == 0 && residue.lowest_exp() == 0) {
        out.value = residue.coeff(0);
    } else {
        out.residue = std::move(residue);
    }
    return out;
}

bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
}

Rational limit_ratio_at_root(long long a, long long b, int d) {
    if (a < 1 || b < 1 || d < 1)
        throw InvalidParams("limit_ratio_at_root: arguments must be positive");
    if (a % d != 0) return {1, 1};
    if (b % d != 0)
        throw InvalidParams("limit_ratio_at_root: d divides a but not b; a != b mod n?");
    Int num = a / d;
    Int den = b / d;
    Int g = boost::multiprecision::gcd(num, den);
    return {num / g, den / g};
}

Int binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Int out = 1;
    for (long long i = 1; i <= k; ++i) {
        out *= n - k + i;
        out /= i;
    }
    return out;
}

Int gauss_at_root(long long n, long long k, int d) {
    if (d < 1 || n < 0 || n % d != 0)
        throw InvalidParams("gauss_at_root: requires d >= 1 and d | n");
    if (k == 0) return 1;
    if (k < 0 || k > n) return 0;
    if (k % d != 0) return 0;
    return binomial(n / d, k / d);
}

std::string to_string(const IntLaurentPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        Int a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (e == 0) {
            os << a;
        } else {
            if (a != 1) os << a << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

} // namespace cspsieve
