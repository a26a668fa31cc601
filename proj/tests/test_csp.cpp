#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cspsieve/csp.hpp"
#include "cspsieve/io.hpp"
#include "oracles.hpp"

using namespace cspsieve;

namespace {

IntLaurentPoly fold_mod(const IntLaurentPoly& f, int m) {
    std::vector<std::pair<int, Int>> terms;
    for (const auto& [e, c] : f.terms()) terms.emplace_back(((e % m) + m) % m, c);
    return IntLaurentPoly::from_terms(terms);
}

Int value_at(const IntLaurentPoly& f, int d) {
    auto rv = eval_at_primitive_root(f, {d});
    REQUIRE(rv.rational());
    return *rv.value;
}

CspInstance cycle_instance(int n, int r, int k) {
    auto g = cycle_power(n, r);
    return {enumerate_independent(g, k), rotation_action(n, g), cycle_power_poly(n, r, k),
            "cycle", {}};
}

} // namespace

TEST_CASE("cycle_power_poly") {
    auto f = cycle_power_poly(12, 2, 3);
    CHECK(f.at_one() == 40);

    // residue modulo q^12 - 1: coefficient 4 on exponents 0,3,6,9 and 3
    // elsewhere, i.e. 3*[12] + 1 + q^3 + q^6 + q^9
    auto residue = fold_mod(f, 12);
    auto expected = scale_shift(q_int(12), 3, 0) +
                    IntLaurentPoly::from_terms({{0, 1}, {3, 1}, {6, 1}, {9, 1}});
    CHECK(residue == expected);

    CHECK(cycle_power_poly(9, 0, 4) == gauss(9, 4));
    CHECK(cycle_power_poly(7, 3, 0) == IntLaurentPoly::one());
    CHECK_THROWS_AS(cycle_power_poly(12, 2, 5), InvalidParams);
    CHECK_THROWS_AS(cycle_power_poly(0, 0, 0), InvalidParams);
}

TEST_CASE("path_power_poly") {
    CHECK(path_power_poly(5, 2, 2) == gauss(3, 2));
    CHECK(path_power_poly(5, 2, 2) == IntLaurentPoly::from_terms({{0, 1}, {1, 1}, {2, 1}}));
    CHECK(path_power_poly(9, 4, 0) == IntLaurentPoly::one());
    CHECK(path_power_poly(8, 1, 3).at_one() == 20);
    CHECK(path_power_poly(8, 1, 3).at_one() ==
          Int(enumerate_independent(path_power(8, 1), 3).sets.size()));
    CHECK_THROWS_AS(path_power_poly(5, 2, 3), InvalidParams);
}

TEST_CASE("whisker_poly reproduces the order-6 cycle composite") {
    std::vector<IntLaurentPoly> base;
    for (int j = 0; j <= 3; ++j) base.push_back(cycle_power_poly(6, 1, j));
    auto f = whisker_poly(base, 6, 3);

    auto expected = gauss(6, 3) + exact_div(q_int(6) * gauss(5, 1), q_int(5)) * gauss(5, 2) +
                    exact_div(q_int(6) * gauss(4, 2), q_int(4)) * gauss(4, 1) +
                    exact_div(q_int(6) * gauss(3, 3), q_int(3));
    CHECK(f == expected);

    CHECK(value_at(f, 2) == 0);
    CHECK(value_at(f, 6) == 0);
    CHECK(value_at(f, 3) == 4);

    CHECK(whisker_poly({IntLaurentPoly::one()}, 6, 0) == IntLaurentPoly::one());
    CHECK_THROWS_AS(whisker_poly(base, 6, 5), InvalidParams);
}

TEST_CASE("recursion_combine") {
    auto a = gauss(5, 2);
    CHECK(recursion_combine(a, IntLaurentPoly::zero()) == a);
    CHECK(recursion_combine(a, gauss(5, 1)) == a + gauss(5, 1));
}

TEST_CASE("gear_poly") {
    auto f = gear_poly(3, 3);
    CHECK(f == IntLaurentPoly::from_terms({{0, 2}, {1, 1}, {2, 1}, {3, 1}}));
    CHECK(f.at_one() == 5);
    CHECK(value_at(f, 3) == 2);
    CHECK(gear_poly(3, 4).at_one() ==
          Int(enumerate_independent(gear(3), 4).sets.size())); // k > n branch
    CHECK_THROWS_AS(gear_poly(1, 2), InvalidParams);
}

TEST_CASE("helm_poly") {
    auto f = helm_poly(6, 3);
    auto expected = gauss(6, 2) + gauss(6, 3) +
                    exact_div(q_int(6) * gauss(5, 1), q_int(5)) * gauss(5, 2) +
                    exact_div(q_int(6) * gauss(4, 2), q_int(4)) * gauss(4, 1) +
                    exact_div(q_int(6) * gauss(3, 3), q_int(3));
    CHECK(f == expected);
    CHECK(value_at(f, 2) == 6);
    CHECK(value_at(f, 3) == 4);
    CHECK(value_at(f, 6) == 0);
    CHECK_THROWS_AS(helm_poly(2, 1), InvalidParams);
}

TEST_CASE("book_poly") {
    auto f = book_poly(4, 3);
    auto expected = scale_shift(gauss(4, 2), 2, 0) + gauss(4, 0) * gauss(4, 3) +
                    gauss(4, 1) * gauss(3, 2) + gauss(4, 2) * gauss(2, 1) + gauss(4, 3);
    CHECK(f == expected);
    CHECK(value_at(f, 2) == 4);
    CHECK(value_at(f, 4) == 0);
    CHECK(value_at(f, 1) == Int(enumerate_independent(book(4), 3).sets.size()));
    CHECK_THROWS_AS(book_poly(0, 1), InvalidParams);
}

TEST_CASE("verify passes on the dense 12-cycle instance") {
    auto report = verify(cycle_instance(12, 2, 3));
    CHECK(report.pass);
    CHECK(report.group_order == 12);
    REQUIRE(report.rows.size() == 6); // divisors 1,2,3,4,6,12

    for (const auto& row : report.rows) {
        CHECK(row.pass);
        REQUIRE(row.poly_value.has_value());
        REQUIRE(row.quotient_count.has_value()); // rotation acts freely
        CHECK(*row.quotient_count == row.fixed_count);
    }
    CHECK(report.rows[0].d == 1);
    CHECK(*report.rows[0].poly_value == 40);
    CHECK(report.rows[2].d == 3);
    CHECK(*report.rows[2].poly_value == 4);
    CHECK(report.rows[2].element == 4);
}

TEST_CASE("verify rejects a wrong candidate") {
    auto g = cycle_power(12, 2);
    CspInstance bad{enumerate_independent(g, 3), rotation_action(12, g), gauss(12, 3),
                    "wrong", {}};
    auto report = verify(bad);
    CHECK(!report.pass);
    bool some_row_failed = false;
    for (const auto& row : report.rows) some_row_failed |= !row.pass;
    CHECK(some_row_failed);
}

TEST_CASE("verify the whiskered cycle") {
    auto base = cycle_power(6, 1);
    auto w = whisker(base);
    std::vector<IntLaurentPoly> fj;
    for (int j = 0; j <= 3; ++j) fj.push_back(cycle_power_poly(6, 1, j));
    CspInstance instance{enumerate_independent(w, 3),
                         whisker_extend(rotation_action(6, base), w), whisker_poly(fj, 6, 3),
                         "whisker", {}};
    auto report = verify(instance);
    CHECK(report.pass);
    for (const auto& row : report.rows) {
        if (row.d == 2 || row.d == 6) CHECK(*row.poly_value == 0);
        if (row.d == 3) CHECK(*row.poly_value == 4);
        CHECK(row.quotient_count.has_value());
    }
}

TEST_CASE("verify the gear, helm, and book composites") {
    {
        auto g = gear(3);
        CspInstance instance{enumerate_independent(g, 3), gear_action(3, g), gear_poly(3, 3),
                             "gear", {}};
        auto report = verify(instance);
        CHECK(report.pass);
        for (const auto& row : report.rows)
            CHECK(!row.quotient_count.has_value()); // hub is a fixed point
    }
    {
        auto g = helm(6);
        CspInstance instance{enumerate_independent(g, 3), helm_action(6, g), helm_poly(6, 3),
                             "helm", {}};
        CHECK(verify(instance).pass);
    }
    {
        auto g = book(4);
        CspInstance instance{enumerate_independent(g, 3), book_action(4, g), book_poly(4, 3),
                             "book", {}};
        CHECK(verify(instance).pass);
    }
}

TEST_CASE("verify flags graph mismatch") {
    auto g = cycle_power(6, 1);
    CspInstance instance{enumerate_independent(g, 2), rotation_action(8, cycle_power(8, 1)),
                         cycle_power_poly(6, 1, 2), "mismatch", {}};
    CHECK_THROWS_AS(verify(instance), InvalidParams);
}

TEST_CASE("count_closed_form") {
    CHECK(count_closed_form(12, 2, 3) == 40);
    CHECK(count_closed_form(9, 0, 4) == binomial(9, 4));
    CHECK(count_closed_form(6, 1, 2) == 9);
    CHECK(count_closed_form(5, 2, 0) == 1);
    CHECK_THROWS_AS(count_closed_form(12, 2, 5), InvalidParams);
}

TEST_CASE("report serialization") {
    auto report = verify(cycle_instance(6, 1, 2));
    auto j = report_to_json(report);
    CHECK(j["pass"] == true);
    CHECK(j["group_order"] == 6);
    REQUIRE(j["rows"].is_array());
    CHECK(j["rows"].size() == 4);
    CHECK(j["rows"][0]["d"] == 1);
    CHECK(j["rows"][0]["poly_value"] == 9);
    CHECK(j["rows"][0]["fixed_count"] == 9);
    CHECK(j["rows"][0]["quotient_count"] == 9);
    CHECK(j["rows"][0]["pass"] == true);

    auto text = report_to_text(report);
    CHECK(text.find("PASS") != std::string::npos);
}
