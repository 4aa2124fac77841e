#include <doctest.h>

#include "bsgeo/cayley.hpp"
#include "bsgeo/normal_form.hpp"
#include "helpers.hpp"

#include <random>

using namespace bsgeo;
using bsgeo::testing::random_element;
using bsgeo::testing::random_word;

TEST_CASE("normalize applies the relator until the side condition holds") {
    CHECK(normalize(1, 2, 1, 2) == NormalForm{2, 0, 1, 0});
    CHECK(normalize(0, 7, 0, 2) == NormalForm{2, 0, 7, 0});
    CHECK(normalize(2, 4, 3, 2) == NormalForm{2, 0, 1, 1});
    CHECK_THROWS_AS(normalize(-1, 1, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(normalize(0, 1, -3, 2), std::invalid_argument);
    CHECK_THROWS_AS(normalize(0, 1, 0, 1), std::invalid_argument);
}

TEST_CASE("normalize is idempotent and preserves the x-coordinate") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        int n = 2 + static_cast<int>(rng() % 4);
        std::uniform_int_distribution<long long> uw(0, 5);
        long long u = uw(rng), w = uw(rng);
        Int v = static_cast<long long>(rng() % 4001) - 2000;
        NormalForm g = normalize(u, v, w, n);
        NormalForm h = normalize(g.u, g.v, g.w, g.n);
        CHECK(g == h);
        CHECK(x_coordinate(g) == Rat(v, pow_int(n, u)));
    }
}

TEST_CASE("evaluate_word folds letters through the relator") {
    CHECK(evaluate_word(parse_word("t a^2 T"), 3) == NormalForm{3, 0, 6, 0});
    CHECK(evaluate_word(parse_word("a t a^2 T"), 3) == NormalForm{3, 0, 7, 0});
    CHECK(evaluate_word(parse_word(""), 2) == identity(2));
    // (2,4,3) and (0,1,1) spell the same element of BS(1,2)
    CHECK(evaluate_word(parse_word("T^2 a^4 t^3"), 2) ==
          evaluate_word(parse_word("a t"), 2));
}

TEST_CASE("word x-coordinate matches the height-weighted letter sum") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 2000; ++i) {
        int n = 2 + static_cast<int>(rng() % 4);
        GeneratorWord w = random_word(rng, 14);
        Rat x = 0;
        long long h = 0;
        for (Gen g : w.letters) {
            switch (g) {
            case Gen::T: ++h; break;
            case Gen::Tinv: --h; break;
            case Gen::A:
            case Gen::Ainv: {
                Rat step = h >= 0 ? Rat(pow_int(n, h)) : Rat(1, pow_int(n, -h));
                x += g == Gen::A ? step : -step;
                break;
            }
            }
        }
        CHECK(x == x_coordinate(evaluate_word(w, n)));
    }
}

TEST_CASE("multiply merges normal forms") {
    NormalForm a{2, 0, 1, 0};
    CHECK(multiply(a, a) == NormalForm{2, 0, 2, 0});
    CHECK(multiply(NormalForm{2, 0, 0, 1}, a) == NormalForm{2, 0, 2, 1});
    CHECK_THROWS_AS(multiply(a, NormalForm{3, 0, 1, 0}), std::invalid_argument);

    std::mt19937_64 rng(3);
    for (int i = 0; i < 1000; ++i) {
        int n = 2 + static_cast<int>(rng() % 4);
        NormalForm g = random_element(rng, n);
        CHECK(multiply(g, invert(g)) == identity(n));
        CHECK(multiply(identity(n), g) == g);
        CHECK(multiply(g, identity(n)) == g);
    }
    for (int i = 0; i < 500; ++i) {
        int n = 2 + static_cast<int>(rng() % 3);
        NormalForm g = random_element(rng, n, 10);
        NormalForm h = random_element(rng, n, 10);
        NormalForm k = random_element(rng, n, 10);
        CHECK(multiply(multiply(g, h), k) == multiply(g, multiply(h, k)));
    }
}

TEST_CASE("evaluate is a homomorphism") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 1000; ++i) {
        int n = 2 + static_cast<int>(rng() % 4);
        GeneratorWord u = random_word(rng, 10);
        GeneratorWord v = random_word(rng, 10);
        CHECK(evaluate_word(u.concat(v), n) ==
              multiply(evaluate_word(u, n), evaluate_word(v, n)));
    }
}

TEST_CASE("invert") {
    CHECK(invert(NormalForm{2, 0, 5, 0}) == NormalForm{2, 0, -5, 0});
    CHECK(invert(NormalForm{2, 1, 1, 0}) == NormalForm{2, 0, -1, 1});
    CHECK(invert(identity(3)) == identity(3));
}

TEST_CASE("conjugate_by_generator closed forms") {
    CHECK(conjugate_by_generator(NormalForm{2, 1, 1, 1}, Gen::T) == NormalForm{2, 0, 1, 0});
    CHECK(conjugate_by_generator(NormalForm{2, 0, 2, 0}, Gen::Tinv) == NormalForm{2, 0, 1, 0});
    CHECK(conjugate_by_generator(NormalForm{2, 1, 1, 2}, Gen::A) == NormalForm{2, 1, -1, 2});
}

TEST_CASE("conjugate_by_generator agrees with s g s^-1 on the radius-10 ball") {
    Ball ball = bfs_ball(2, 10);
    for (const auto& [g, d] : ball.distances) {
        for (Gen s : {Gen::A, Gen::Ainv, Gen::T, Gen::Tinv}) {
            GeneratorWord sw;
            sw.letters.push_back(s);
            NormalForm direct = multiply(multiply(evaluate_word(sw, 2), g),
                                         invert(evaluate_word(sw, 2)));
            CHECK(conjugate_by_generator(g, s) == direct);
        }
    }
}

TEST_CASE("conjugate by a word") {
    NormalForm g{2, 0, 1, 0};
    CHECK(conjugate(g, GeneratorWord{}) == g);
    CHECK(conjugate(g, parse_word("t t")) == NormalForm{2, 0, 4, 0});

    std::mt19937_64 rng(13);
    for (int i = 0; i < 1000; ++i) {
        int n = 2 + static_cast<int>(rng() % 4);
        NormalForm h = random_element(rng, n, 10);
        GeneratorWord q = random_word(rng, 8);
        NormalForm qe = evaluate_word(q, n);
        CHECK(conjugate(h, q) == multiply(multiply(qe, h), invert(qe)));
    }
}

TEST_CASE("word grammar") {
    CHECK(parse_word("a^-3") == parse_word("AAA"));
    CHECK(parse_word(" t  a^2T ") == parse_word("ta^2T"));
    CHECK(parse_word("T^-2") == parse_word("tt"));
    CHECK_THROWS_AS(parse_word("b"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("a^"), std::invalid_argument);
    CHECK(format_word(parse_word("ataaaT")) == "a t a^3 T");
    std::mt19937_64 rng(17);
    for (int i = 0; i < 200; ++i) {
        GeneratorWord w = random_word(rng, 12);
        CHECK(parse_word(format_word(w)) == w);
    }
}

TEST_CASE("canonical element strings round-trip through the word grammar") {
    std::mt19937_64 rng(19);
    for (int i = 0; i < 200; ++i) {
        int n = 2 + static_cast<int>(rng() % 4);
        NormalForm g = random_element(rng, n, 12);
        CHECK(evaluate_word(parse_word(to_string(g)), n) == g);
    }
}
