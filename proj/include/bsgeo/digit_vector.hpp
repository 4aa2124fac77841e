#pragma once

#include "bsgeo/ints.hpp"

#include <string>
#include <vector>

namespace bsgeo {

/// A finite signed digit sequence (x_0, ..., x_k) over base n, representing
/// the integer sigma(x) = sum x_i n^i.  Either empty (the zero vector) or
/// with a nonzero final digit; last_index() is -1 for the empty vector.
struct DigitVector {
    std::vector<int> digits;
    int n = 2;

    DigitVector() = default;
    DigitVector(std::vector<int> ds, int base) : digits(std::move(ds)), n(base) {
        trim();
    }

    long long last_index() const { return static_cast<long long>(digits.size()) - 1; }
    int digit(long long i) const {
        return (i >= 0 && i < static_cast<long long>(digits.size())) ? digits[i] : 0;
    }
    bool is_zero() const { return digits.empty(); }

    long long l1_norm() const {
        long long s = 0;
        for (int d : digits) s += d < 0 ? -d : d;
        return s;
    }

    void set_digit(long long i, int value) {
        if (i >= static_cast<long long>(digits.size())) digits.resize(i + 1, 0);
        digits[i] = value;
        trim();
    }

    void trim() {
        while (!digits.empty() && digits.back() == 0) digits.pop_back();
    }

    bool operator==(const DigitVector& o) const { return n == o.n && digits == o.digits; }
    bool operator!=(const DigitVector& o) const { return !(*this == o); }
};

/// Box context: digit bounds depend on u, w only through max(u, w).
struct BoxParams {
    long long u = 0;
    long long w = 0;
    int n = 2;

    long long max_uw() const { return u > w ? u : w; }
};

Int sigma(const DigitVector& x);

/// Lattice basis vector w^(i): -n at index i, 1 at index i+1; sigma = 0.
DigitVector basis_vector(long long i, int n);

/// x + alpha * w^(i), trailing zeros trimmed; sigma unchanged.
DigitVector add_multiple(const DigitVector& x, long long i, long long alpha);

/// Least-absolute-remainder base-n expansion of v (ties at n/2 take the sign
/// of v, so the map is odd: initial_digits(-v) = -initial_digits(v)).
DigitVector initial_digits(const Int& v, int n);

/// Digit bound for position i of a vector with final index k:
/// floor(n/2) everywhere, except the final digit when k >= max(u,w), which
/// may reach floor(n/2)+1 (n >= 3) or floor(n/2)+2 (n = 2).
bool in_box(const DigitVector& x, const BoxParams& p);

/// Moves x into the box without increasing the induced path length;
/// sigma is preserved.  Processes the lowest violating index first.
DigitVector reduce_to_box(const DigitVector& x, const BoxParams& p);

/// Textual form: comma-separated digits in index order, e.g. "1,-1,1".
std::string to_string(const DigitVector& x);
DigitVector parse_digits(const std::string& text, int n);

} // namespace bsgeo
