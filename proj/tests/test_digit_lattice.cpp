#include <doctest.h>

#include "bsgeo/digit_vector.hpp"
#include "bsgeo/geodesic.hpp"
#include "helpers.hpp"

#include <random>

using namespace bsgeo;
using bsgeo::testing::random_vector;

namespace {
DigitVector vec(std::vector<int> ds, int n) { return DigitVector(std::move(ds), n); }
} // namespace

TEST_CASE("sigma") {
    CHECK(sigma(vec({7}, 3)) == 7);
    CHECK(sigma(vec({1, -1, 1}, 3)) == 7);
    CHECK(sigma(vec({}, 2)) == 0);
}

TEST_CASE("basis vectors span sigma-zero moves") {
    CHECK(basis_vector(0, 3) == vec({-3, 1}, 3));
    CHECK(basis_vector(2, 2) == vec({0, 0, -2, 1}, 2));
    for (int n = 2; n <= 10; ++n)
        for (long long i = 0; i <= 20; ++i) CHECK(sigma(basis_vector(i, n)) == 0);
}

TEST_CASE("add_multiple reproduces the lattice walk of the base-3 example") {
    DigitVector x = vec({7}, 3);
    DigitVector y = add_multiple(x, 0, 2);
    CHECK(y == vec({1, 2}, 3));
    DigitVector z = add_multiple(y, 1, 1);
    CHECK(z == vec({1, -1, 1}, 3));
    CHECK(add_multiple(z, 4, 0) == z);

    std::mt19937_64 rng(23);
    for (int i = 0; i < 2000; ++i) {
        int n = 2 + static_cast<int>(rng() % 5);
        DigitVector v = random_vector(rng, n, 12, n);
        long long idx = static_cast<long long>(rng() % 30);
        long long alpha = static_cast<long long>(rng() % 7) - 3;
        CHECK(sigma(add_multiple(v, idx, alpha)) == sigma(v));
    }
}

TEST_CASE("initial_digits is a least-absolute-remainder expansion") {
    CHECK(initial_digits(7, 3) == vec({1, -1, 1}, 3));
    CHECK(initial_digits(0, 5).is_zero());
    CHECK(initial_digits(-7, 3) == vec({-1, 1, -1}, 3));

    std::mt19937_64 rng(29);
    for (int i = 0; i < 2000; ++i) {
        int n = 2 + static_cast<int>(rng() % 7);
        Int v = static_cast<long long>(rng() % 2000001) - 1000000;
        DigitVector x = initial_digits(v, n);
        CHECK(sigma(x) == v);
        for (int d : x.digits) CHECK(2 * std::abs(d) <= n);
        DigitVector neg = initial_digits(-v, n);
        REQUIRE(neg.digits.size() == x.digits.size());
        for (size_t j = 0; j < x.digits.size(); ++j)
            CHECK(neg.digits[j] == -x.digits[j]);
    }
}

TEST_CASE("in_box digit bounds") {
    CHECK(in_box(vec({1, 3}, 2), BoxParams{0, 0, 2}));
    CHECK(in_box(vec({2, 2, 1}, 4), BoxParams{3, 3, 4}));
    CHECK(in_box(vec({1, 2}, 3), BoxParams{0, 0, 3}));
    CHECK_FALSE(in_box(vec({1, 2}, 3), BoxParams{5, 5, 3}));
    CHECK(in_box(vec({}, 2), BoxParams{0, 0, 2}));
}

TEST_CASE("reduce_to_box worked cases") {
    CHECK(reduce_to_box(vec({7}, 3), BoxParams{0, 0, 3}) == vec({1, 2}, 3));
    CHECK(reduce_to_box(vec({7}, 2), BoxParams{0, 0, 2}) == vec({1, 3}, 2));
    DigitVector already = vec({1, -1, 1}, 3);
    CHECK(reduce_to_box(already, BoxParams{2, 2, 3}) == already);
}

TEST_CASE("reduce_to_box lands in the box, preserves sigma, never lengthens the path") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 10000; ++i) {
        int n = 2 + static_cast<int>(rng() % 4);
        DigitVector x = random_vector(rng, n, 10, 2 * n + 3);
        long long u = static_cast<long long>(rng() % 7);
        long long w = static_cast<long long>(rng() % 7);
        BoxParams p{u, w, n};
        DigitVector y = reduce_to_box(x, p);
        CHECK(in_box(y, p));
        CHECK(sigma(y) == sigma(x));
        CHECK(path_length(y, u, w) <= path_length(x, u, w));
    }
}

TEST_CASE("a large lattice coefficient forces a large digit") {
    std::mt19937_64 rng(37);
    for (int i = 0; i < 3000; ++i) {
        int n = 2 + static_cast<int>(rng() % 5);
        DigitVector z = vec({}, n);
        int terms = 1 + static_cast<int>(rng() % 6);
        std::vector<long long> alpha(12, 0);
        for (int t = 0; t < terms; ++t) {
            long long j = static_cast<long long>(rng() % 10);
            long long a = static_cast<long long>(rng() % 7) - 3;
            alpha[j] += a;
            z = add_multiple(z, j, a);
        }
        for (long long j = 0; j < 12; ++j) {
            long long m = std::llabs(alpha[j]);
            if (m == 0) continue;
            bool found = false;
            for (long long idx = 0; idx <= j; ++idx)
                if (std::llabs(z.digit(idx)) > m * (n - 1)) found = true;
            CHECK(found);
        }
    }
}

TEST_CASE("nonzero sigma-zero vectors have two nonzero digits, one of size >= n") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 3000; ++i) {
        int n = 2 + static_cast<int>(rng() % 5);
        DigitVector z = vec({}, n);
        for (int t = 0; t < 1 + static_cast<int>(rng() % 6); ++t)
            z = add_multiple(z, static_cast<long long>(rng() % 10),
                             static_cast<long long>(rng() % 7) - 3);
        if (z.is_zero()) continue;
        int nonzero = 0;
        bool big = false;
        for (int d : z.digits) {
            if (d != 0) ++nonzero;
            if (std::abs(d) >= n) big = true;
        }
        CHECK(nonzero >= 2);
        CHECK(big);
    }
}

TEST_CASE("digit vector textual form") {
    CHECK(to_string(vec({1, -1, 1}, 3)) == "1,-1,1");
    CHECK(parse_digits("1,-1,1", 3) == vec({1, -1, 1}, 3));
    CHECK(parse_digits("", 2).is_zero());
    std::mt19937_64 rng(43);
    for (int i = 0; i < 300; ++i) {
        DigitVector x = random_vector(rng, 4, 9, 5);
        CHECK(parse_digits(to_string(x), 4) == x);
    }
}
