#pragma once

#include "bsgeo/digit_vector.hpp"
#include "bsgeo/geodesic.hpp"
#include "bsgeo/normal_form.hpp"

#include <random>
#include <vector>

namespace bsgeo::testing {

inline GeneratorWord random_word(std::mt19937_64& rng, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> letter(0, 3);
    GeneratorWord w;
    int L = len(rng);
    for (int i = 0; i < L; ++i) w.letters.push_back(static_cast<Gen>(letter(rng)));
    return w;
}

inline NormalForm random_element(std::mt19937_64& rng, int n, int max_word_len = 16) {
    return evaluate_word(random_word(rng, max_word_len), n);
}

/// Random element with a given digit budget: v from random signed digits.
inline NormalForm random_element_digits(std::mt19937_64& rng, int n, int max_uw,
                                        int max_digits) {
    std::uniform_int_distribution<long long> uw(0, max_uw);
    std::uniform_int_distribution<int> len(0, max_digits);
    std::uniform_int_distribution<int> digit(-n, n);
    Int v = 0;
    int L = len(rng);
    for (int i = L - 1; i >= 0; --i) v = v * n + digit(rng);
    return normalize(uw(rng), v, uw(rng), n);
}

inline DigitVector random_vector(std::mt19937_64& rng, int n, int max_len,
                                 int max_abs_digit) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> digit(-max_abs_digit, max_abs_digit);
    std::vector<int> ds(len(rng));
    for (auto& d : ds) d = digit(rng);
    return DigitVector(std::move(ds), n);
}

/// Coefficients alpha_i with y = x + sum alpha_i w^(i); empty if y - x is
/// not in L_0 (it always is when sigma(y) == sigma(x)).
inline std::vector<long long> lattice_coefficients(const DigitVector& x,
                                                   const DigitVector& y) {
    long long top = std::max(x.last_index(), y.last_index());
    std::vector<long long> alpha;
    long long carry = 0; // alpha_{i-1}
    for (long long i = 0; i <= top + 1; ++i) {
        long long z = static_cast<long long>(y.digit(i)) - x.digit(i);
        // z_i = alpha_{i-1} - n * alpha_i
        long long num = carry - z;
        if (num % x.n != 0) return {};
        carry = num / x.n;
        alpha.push_back(carry);
    }
    if (carry != 0) return {};
    alpha.pop_back();
    return alpha;
}

} // namespace bsgeo::testing
