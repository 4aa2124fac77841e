#include "bsgeo/digit_vector.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace bsgeo {

Int sigma(const DigitVector& x) {
    Int s = 0;
    for (auto it = x.digits.rbegin(); it != x.digits.rend(); ++it) s = s * x.n + *it;
    return s;
}

DigitVector basis_vector(long long i, int n) {
    if (i < 0) throw std::invalid_argument("basis index must be >= 0");
    std::vector<int> ds(i + 2, 0);
    ds[i] = -n;
    ds[i + 1] = 1;
    return DigitVector(std::move(ds), n);
}

DigitVector add_multiple(const DigitVector& x, long long i, long long alpha) {
    DigitVector y = x;
    if (alpha == 0) return y;
    y.set_digit(i, y.digit(i) - static_cast<int>(alpha) * y.n);
    y.set_digit(i + 1, y.digit(i + 1) + static_cast<int>(alpha));
    return y;
}

DigitVector initial_digits(const Int& v, int n) {
    DigitVector x;
    x.n = n;
    Int rest = v;
    const bool positive = v > 0;
    while (rest != 0) {
        Int rem = rest % n;
        if (rem < 0) rem += n;
        int r = static_cast<int>(rem);
        int d;
        if (2 * r > n) d = r - n;
        else if (2 * r < n) d = r;
        else d = positive ? r : -r; // n even, remainder exactly n/2
        x.digits.push_back(d);
        rest = (rest - d) / n;
    }
    x.trim();
    return x;
}

namespace {

int tail_bound(int n) { return n == 2 ? n / 2 + 2 : n / 2 + 1; }

int digit_limit(long long i, long long k, long long max_uw, int n) {
    if (i < k) return n / 2;
    return k < max_uw ? n / 2 : tail_bound(n);
}

} // namespace

bool in_box(const DigitVector& x, const BoxParams& p) {
    const long long k = x.last_index();
    for (long long i = 0; i <= k; ++i) {
        int limit = digit_limit(i, k, p.max_uw(), x.n);
        if (std::abs(x.digit(i)) > limit) return false;
    }
    return true;
}

DigitVector reduce_to_box(const DigitVector& x, const BoxParams& p) {
    DigitVector y = x;
    const int n = y.n;
    const long long M = p.max_uw();
    long long i = 0;
    while (true) {
        long long k = y.last_index();
        if (i > k) break;
        int limit = digit_limit(i, k, M, n);
        int d = y.digit(i);
        if (std::abs(d) <= limit) {
            ++i;
            continue;
        }
        int s = d > 0 ? 1 : -1;
        // Tail overflow with n = 2 absorbs two basis vectors at once, so the
        // new final digit lands inside the box immediately.
        long long coeff = (n == 2 && i == k && k >= M) ? 2 * s : s;
        y = add_multiple(y, i, coeff);
    }
    return y;
}

std::string to_string(const DigitVector& x) {
    std::ostringstream os;
    for (size_t i = 0; i < x.digits.size(); ++i) {
        if (i) os << ',';
        os << x.digits[i];
    }
    return os.str();
}

DigitVector parse_digits(const std::string& text, int n) {
    DigitVector x;
    x.n = n;
    std::string token;
    std::istringstream is(text);
    while (std::getline(is, token, ',')) {
        size_t b = token.find_first_not_of(" \t");
        if (b == std::string::npos) {
            if (x.digits.empty() && is.eof()) break;
            throw std::invalid_argument("empty digit in vector");
        }
        x.digits.push_back(std::stoi(token.substr(b)));
    }
    x.trim();
    return x;
}

} // namespace bsgeo
