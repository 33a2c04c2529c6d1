#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include <arraycode/cycle_equations.hpp>

using namespace arraycode;

namespace {

// Fixture lines are `<cycle length> <equation>`; '#' starts a comment.
std::map<int, std::vector<std::vector<int>>> load_fixture(const std::string& name) {
    std::ifstream in(std::string(ARRAYCODE_FIXTURE_DIR) + "/" + name);
    REQUIRE(in.good());
    std::map<int, std::vector<std::vector<int>>> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        int len = 0;
        std::string text;
        row >> len >> text;
        out[len].push_back(canonicalize_coefficients(parse_equation_text(text)));
    }
    for (auto& [len, v] : out) std::sort(v.begin(), v.end());
    return out;
}

std::map<int, std::vector<std::vector<int>>> coeff_sets(const std::vector<int>& rows, int max_len) {
    std::map<int, std::vector<std::vector<int>>> out;
    for (const auto& [len, eqs] : governing_equations(rows, max_len)) {
        for (const auto& e : eqs) out[len].push_back(e.coeffs);
        std::sort(out[len].begin(), out[len].end());
    }
    return out;
}

}  // namespace

TEST_CASE("canonicalization basics") {
    CHECK(canonicalize_coefficients({-2, 1, 1}) == std::vector<int>{2, -1, -1});
    CHECK(canonicalize_coefficients({1, 1, -1, -1}) == std::vector<int>{1, 1, -1, -1});
    CHECK(canonicalize_coefficients({4, -2, -2}) == std::vector<int>{2, -1, -1});  // gcd reduced
    CHECK(canonicalize_coefficients({0, 3, 0, -3}) == std::vector<int>{1, -1});    // zeros dropped
    CHECK(canonicalize_coefficients({5, 0, 0}).empty());
    CHECK(canonicalize_coefficients({}).empty());
}

TEST_CASE("canonicalization is idempotent and permutation/sign invariant") {
    std::mt19937 gen(7);
    std::uniform_int_distribution<int> coeff(-7, 7);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> raw(4);
        for (int& c : raw) c = coeff(gen);
        auto canon = canonicalize_coefficients(raw);
        CHECK(canonicalize_coefficients(canon) == canon);
        std::shuffle(raw.begin(), raw.end(), gen);
        CHECK(canonicalize_coefficients(raw) == canon);
        for (int& c : raw) c = -c;
        CHECK(canonicalize_coefficients(raw) == canon);
    }
}

TEST_CASE("six-cycle derivation for proper labels") {
    // Row sequence (0,1,2) visiting three columns yields 2i - j - k = 0.
    ClosedPathTemplate t{{0, 1, 2}, {0, 1, 2}, 3};
    const auto d = derive_equation(t, {0, 1, 2});
    REQUIRE(d.kind == DeriveKind::Equation);
    CHECK(d.equation.coeffs == std::vector<int>{2, -1, -1});
    CHECK(d.equation.cycle_len == 6);
}

TEST_CASE("template validation") {
    CHECK_THROWS_AS(derive_equation(ClosedPathTemplate{{0, 0, 1}, {0, 1, 2}, 3}, {0, 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(derive_equation(ClosedPathTemplate{{0, 1, 2}, {0, 1, 2}, 3}, {0, 1}),
                    std::invalid_argument);
}

TEST_CASE("governing equation censuses for the four standard row-label sets") {
    CHECK(coeff_sets({0, 1, 2}, 8) == load_fixture("equations_pac_r3.txt"));
    CHECK(coeff_sets({0, 1, 2, 3}, 8) == load_fixture("equations_pac_r4.txt"));
    auto iac3 = load_fixture("equations_iac_r3.txt");
    auto got3 = coeff_sets({0, 1, 3}, 10);
    CHECK(got3[6] == iac3[6]);
    CHECK(got3[8] == iac3[8]);
    CHECK(got3[10] == iac3[10]);
    CHECK(coeff_sets({0, 1, 3, 7}, 8) == load_fixture("equations_iac_r4.txt"));
}

TEST_CASE("census sizes") {
    auto pac3 = governing_equations({0, 1, 2}, 8);
    CHECK(pac3[6].size() == 1);
    CHECK(pac3[8].size() == 4);
    auto pac4 = governing_equations({0, 1, 2, 3}, 8);
    CHECK(pac4[6].size() == 2);
    CHECK(pac4[8].size() == 10);
    auto iac3 = governing_equations({0, 1, 3}, 10);
    CHECK(iac3[6].size() == 1);
    CHECK(iac3[8].size() == 7);
    CHECK(iac3[10].size() == 20);
    auto iac4 = governing_equations({0, 1, 3, 7}, 8);
    CHECK(iac4[6].size() == 3);
    CHECK(iac4[8].size() == 25);
    // Ten-cycle families proliferate quickly for improper r = 4 labels.
    CHECK(governing_equations({0, 1, 3, 7}, 10)[10].size() > 50);
}

TEST_CASE("unavoidable cycles") {
    CHECK(has_unavoidable_cycles({0, 1, 2}, 8));       // any proper A.P., r >= 3
    CHECK(has_unavoidable_cycles({5, 8, 11}, 8));
    CHECK_FALSE(has_unavoidable_cycles({0, 1}, 8));
    CHECK_FALSE(has_unavoidable_cycles({0, 1, 3}, 8));
    CHECK_FALSE(has_unavoidable_cycles({0, 1, 3}, 10));
    CHECK_FALSE(has_unavoidable_cycles({0, 1, 3, 7}, 8));
    CHECK_FALSE(has_unavoidable_cycles({0, 1, 3, 7}, 10));
    CHECK_THROWS_AS(has_unavoidable_cycles({0, 1, 2}, 6), std::invalid_argument);
}

TEST_CASE("proper solutions") {
    const auto sols = find_proper_solutions({2, -1, -1}, Modulus(5), {0, 1, 2});
    CHECK(sols == std::vector<std::vector<int>>{{1, 0, 2}, {1, 2, 0}});
    CHECK(find_proper_solutions({2, -1, -1}, Modulus(13), {0, 1, 3, 9}).empty());
    // values must be pairwise distinct: {0, x, x} is improper
    CHECK(find_proper_solutions({2, -1, -1}, Modulus(7), {0, 3}).empty());
    CHECK(count_solution_orbits({2, -1, -1}, Modulus(5), {0, 1, 2}) == 1);
}

TEST_CASE("solution search respects the modulus (wraparound solutions count)") {
    // 2*4 - 0 - 1 = 7 != 0 over the integers but vanishes mod 7.
    const auto sols = find_proper_solutions({2, -1, -1}, Modulus(7), {0, 1, 4});
    CHECK(sols == std::vector<std::vector<int>>{{4, 0, 1}, {4, 1, 0}});
}

TEST_CASE("predicted girth on known specs") {
    CHECK(predict_girth(ArrayCodeSpec(Modulus(5), {0, 1, 2}, {0, 1, 2, 3, 4})) == 6);
    CHECK(predict_girth(ArrayCodeSpec(Modulus(13), {0, 1, 2}, {0, 1, 3})) == 8);
    CHECK_THROWS_AS(predict_girth(ArrayCodeSpec(Modulus(5), {0, 1}, {0, 1, 2})),
                    std::invalid_argument);
    Mask mask{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}};
    CHECK_THROWS_AS(predict_girth(ArrayCodeSpec(Modulus(5), {0, 1, 2}, {0, 1, 2}, mask)),
                    std::invalid_argument);
}

TEST_CASE("format and parse round-trip") {
    CycleEquation eq{{3, -2, -1}, 6};
    CHECK(format_equation(eq) == "3i -2j -1k = 0 (len=6)");
    CHECK(parse_equation_text("3i-2j-k=0") == std::vector<int>{3, -2, -1});
    CHECK(parse_equation_text("i+j-k-l") == std::vector<int>{1, 1, -1, -1});
    CHECK(parse_equation_text("13i-7j-6k = 0") == std::vector<int>{13, -7, -6});
    CHECK_THROWS_AS(parse_equation_text("3i-2j-k=1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_equation_text("3x+2y"), std::invalid_argument);
    CHECK_THROWS_AS(parse_equation_text("5i"), std::invalid_argument);
}
