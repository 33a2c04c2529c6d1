#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include <arraycode/alist.hpp>
#include <arraycode/code_model.hpp>
#include <arraycode/spec_json.hpp>

using namespace arraycode;

TEST_CASE("alist bytes for the 2x2 identity") {
    SparseBinaryMatrix id;
    id.n_rows = 2;
    id.n_cols = 2;
    id.rows = {{0}, {1}};
    CHECK(write_alist(id) == "2 2\n1 1\n1 1\n1 1\n1\n2\n1\n2\n");
}

TEST_CASE("alist round-trips an expanded array code") {
    ArrayCodeSpec spec(Modulus(3), {0, 1}, {0, 1, 2});
    const auto h = build_parity_check(spec);
    const auto text = write_alist(h);
    CHECK(read_alist(text) == h);
    CHECK(write_alist(read_alist(text)) == text);  // byte identity
}

TEST_CASE("alist rejects zero-weight columns and malformed input") {
    SparseBinaryMatrix empty_col;
    empty_col.n_rows = 2;
    empty_col.n_cols = 2;
    empty_col.rows = {{0}, {0}};
    CHECK_THROWS_AS(write_alist(empty_col), std::invalid_argument);

    CHECK_THROWS(read_alist(std::string("garbage")));
    // weight line disagrees with the index lists
    CHECK_THROWS(read_alist(std::string("2 2\n1 1\n2 1\n1 1\n1\n2\n1\n2\n")));
    // column index out of range
    CHECK_THROWS(read_alist(std::string("2 2\n1 1\n1 1\n1 1\n1\n3\n1\n2\n")));
}

TEST_CASE("spec json round-trip, including masks") {
    ArrayCodeSpec spec(Modulus(11), {0, 1, 3}, {0, 2, 5, 7});
    const auto text = spec_to_json(spec);
    const auto back = spec_from_json(text);
    CHECK(back.q == spec.q);
    CHECK(back.row_labels == spec.row_labels);
    CHECK(back.col_labels == spec.col_labels);
    CHECK_FALSE(back.mask.has_value());
    CHECK(spec_to_json(back) == text);

    Mask mask{{1, 0, 1, 1}, {1, 1, 0, 1}, {0, 1, 1, 1}};
    ArrayCodeSpec masked(Modulus(11), {0, 1, 3}, {0, 2, 5, 7}, mask);
    const auto mtext = spec_to_json(masked);
    const auto mback = spec_from_json(mtext);
    REQUIRE(mback.mask.has_value());
    CHECK(*mback.mask == mask);
    CHECK(spec_to_json(mback) == mtext);
}

TEST_CASE("spec json validation") {
    CHECK_THROWS(spec_from_json("{}"));
    CHECK_THROWS(spec_from_json(R"({"q": 4, "row_labels": [0], "col_labels": [0]})"));
    CHECK_THROWS(spec_from_json(R"({"q": 5, "row_labels": [0, 0], "col_labels": [0]})"));
    CHECK_THROWS(
        spec_from_json(R"({"q": 5, "row_labels": [0], "col_labels": [0], "mask": [[2]]})"));
}

TEST_CASE("randomized round-trips") {
    std::mt19937 gen(2026);
    const std::vector<std::uint32_t> primes{5, 7, 11, 13, 17, 19, 23};
    for (int trial = 0; trial < 20; ++trial) {
        const std::uint32_t q = primes[gen() % primes.size()];
        const int r = 2 + static_cast<int>(gen() % 3);
        const int s = r + static_cast<int>(gen() % 3);
        std::vector<int> all(q);
        std::iota(all.begin(), all.end(), 0);
        std::shuffle(all.begin(), all.end(), gen);
        std::vector<int> rows(all.begin(), all.begin() + r);
        std::shuffle(all.begin(), all.end(), gen);
        std::vector<int> cols(all.begin(), all.begin() + s);
        ArrayCodeSpec spec(Modulus(q), rows, cols);

        const auto text = spec_to_json(spec);
        const auto back = spec_from_json(text);
        CHECK(spec_to_json(back) == text);

        const auto h = build_parity_check(spec);
        const auto alist = write_alist(h);
        CHECK(read_alist(alist) == h);
        CHECK(write_alist(read_alist(alist)) == alist);
    }
}
