#include "cspsieve/csp.hpp"

#include <algorithm>

namespace cspsieve {

namespace {

void check_triple(long long n, long long r, long long k, const char* who) {
    if (n < 1 || r < 0 || k < 0)
        throw InvalidParams(std::string(who) + ": requires n >= 1, r >= 0, k >= 0");
    if ((r + 1) * k > n)
        throw InvalidParams(std::string(who) + ": requires (r+1)k <= n");
}

} // namespace

IntLaurentPoly cycle_power_poly(long long n, long long r, long long k) {
    check_triple(n, r, k, "cycle_power_poly");
    if (k == 0) return IntLaurentPoly::one();
    return exact_div(q_int(n) * gauss(n - r * k, k), q_int(n - r * k));
}

IntLaurentPoly path_power_poly(long long n, long long r, long long k) {
    check_triple(n, r, k, "path_power_poly");
    return gauss(n - r * k + r, k);
}

IntLaurentPoly whisker_poly(const std::vector<IntLaurentPoly>& base, long long n, long long k) {
    if (k < 0 || static_cast<long long>(base.size()) != k + 1)
        throw InvalidParams("whisker_poly: needs base polynomials f_0..f_k");
    IntLaurentPoly acc;
    for (long long j = 0; j <= k; ++j)
        acc = acc + base[static_cast<size_t>(j)] * gauss(n - j, k - j);
    return acc;
}

IntLaurentPoly recursion_combine(const IntLaurentPoly& a, const IntLaurentPoly& b) {
    return a + b;
}

IntLaurentPoly gear_poly(long long n, long long k) {
    if (n < 2 || k < 0) throw InvalidParams("gear_poly: requires n >= 2, k >= 0");
    IntLaurentPoly cycle_part = k <= n ? cycle_power_poly(2 * n, 1, k) : IntLaurentPoly::zero();
    return recursion_combine(cycle_part, gauss(n, k - 1));
}

IntLaurentPoly helm_poly(long long n, long long k) {
    if (n < 3 || k < 0) throw InvalidParams("helm_poly: requires n >= 3, k >= 0");
    IntLaurentPoly acc = gauss(n, k - 1);
    for (long long j = 0; j <= k; ++j) {
        if (2 * j > n) break; // I_j(C_n) is empty from here on
        acc = acc + cycle_power_poly(n, 1, j) * gauss(n - j, k - j);
    }
    return acc;
}

IntLaurentPoly book_poly(long long n, long long k) {
    if (n < 1 || k < 0) throw InvalidParams("book_poly: requires n >= 1, k >= 0");
    IntLaurentPoly acc = scale_shift(gauss(n, k - 1), 2, 0);
    for (long long j = 0; j <= k; ++j) acc = acc + gauss(n, j) * gauss(n - j, k - j);
    return acc;
}

CspReport verify(const CspInstance& instance) {
    if (!(instance.action.graph() == instance.family.graph))
        throw InvalidParams("verify: action and family disagree on the graph");

    const long long order = instance.action.order();
    const bool free_action = instance.action.is_free();

    CspReport report;
    report.label = instance.label;
    report.group_order = order;
    report.notes = instance.notes;
    report.pass = true;

    for (long long d = 1; d <= order; ++d) {
        if (order % d != 0) continue;
        CspRow row;
        row.d = d;
        row.element = (order / d) % order; // generator^(order/d) has order d

        RootValue value = eval_at_primitive_root(instance.candidate, {static_cast<int>(d)});
        if (value.rational()) row.poly_value = *value.value;

        const Permutation perm = instance.action.element(row.element);
        row.fixed_count =
            static_cast<long long>(fixed_independent_sets(instance.family.graph, perm,
                                                          instance.family.k)
                                       .size());
        if (free_action)
            row.quotient_count = fixed_count_via_quotient(instance.family.graph,
                                                          instance.action, row.element,
                                                          instance.family.k);

        row.pass = row.poly_value.has_value() && *row.poly_value == row.fixed_count &&
                   (!row.quotient_count.has_value() || *row.quotient_count == row.fixed_count);
        report.pass = report.pass && row.pass;
        report.rows.push_back(std::move(row));
    }
    return report;
}

Int count_closed_form(long long n, long long r, long long k) {
    check_triple(n, r, k, "count_closed_form");
    if (k == 0) return 1;
    const long long m = n - r * k;
    Int c = binomial(m, k) * n;
    if (c % m != 0) throw Error("count_closed_form: formula did not yield an integer");
    return c / m;
}

} // namespace cspsieve
