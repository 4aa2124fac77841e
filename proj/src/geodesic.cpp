#include "bsgeo/geodesic.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace bsgeo {

namespace {

int sign_of(int d) { return d > 0 ? 1 : (d < 0 ? -1 : 0); }

void check_side_condition(const DigitVector& x, long long u, long long w) {
    // x_0 == 0 mod n means n | sigma(x), which the normal form only allows
    // with u*w = 0.
    int x0 = x.is_zero() ? 0 : x.digit(0);
    if (x0 % x.n == 0 && u > 0 && w > 0)
        throw std::invalid_argument("n | v requires u*w = 0 in the normal form");
}

} // namespace

Shape shape_of(const DigitVector& x, long long u, long long w) {
    const long long k = x.last_index();
    Shape s;
    s.strict1 = k < std::max(u, w);
    if (k <= w) s.tag = ShapeTag::Shape1;
    else if (k <= u) s.tag = ShapeTag::Shape2;
    else if (u <= w) s.tag = ShapeTag::Shape3;
    else s.tag = ShapeTag::Shape4;
    return s;
}

GeneratorWord path_from_vector(const DigitVector& x, long long u, long long w) {
    if (u < 0 || w < 0) throw std::invalid_argument("u and w must be non-negative");
    check_side_condition(x, u, w);
    const long long k = x.last_index();
    GeneratorWord word;
    Shape s = shape_of(x, u, w);
    if (s.tag == ShapeTag::Shape1 || s.tag == ShapeTag::Shape3) {
        word.append(Gen::Tinv, u);
        for (long long i = 0; i <= k; ++i) {
            word.append_power(Gen::A, x.digit(i));
            if (i < k) word.append(Gen::T);
        }
        word.append_power(Gen::T, x.is_zero() ? w : w - k);
    } else {
        word.append_power(Gen::T, k - u);
        for (long long i = k; i >= 0; --i) {
            word.append_power(Gen::A, x.digit(i));
            if (i > 0) word.append(Gen::Tinv);
        }
        word.append(Gen::T, w);
    }
    return word;
}

long long path_length(const DigitVector& x, long long u, long long w) {
    if (u < 0 || w < 0) throw std::invalid_argument("u and w must be non-negative");
    const long long k = x.last_index();
    if (k <= std::max(u, w)) return x.l1_norm() + u + w;
    return x.l1_norm() + 2 * k - std::llabs(u - w);
}

int compare_unchecked(const DigitVector& x, const DigitVector& y, long long u,
                      long long w) {
    long long lx = path_length(x, u, w);
    long long ly = path_length(y, u, w);
    if (lx != ly) return lx < ly ? -1 : 1;
    long long top = std::max(x.last_index(), y.last_index());
    for (long long i = 0; i <= top; ++i) {
        int ax = std::abs(x.digit(i));
        int ay = std::abs(y.digit(i));
        if (ax != ay) return ax < ay ? -1 : 1;
    }
    // Equal absolute values can occur off the box; break ties by sign so the
    // relation stays total.
    for (long long i = 0; i <= top; ++i) {
        if (x.digit(i) != y.digit(i)) return x.digit(i) < y.digit(i) ? -1 : 1;
    }
    return 0;
}

int compare(const DigitVector& x, const DigitVector& y, long long u, long long w) {
    if (x.n != y.n) throw std::invalid_argument("digit vectors over different bases");
    if (sigma(x) != sigma(y))
        throw std::invalid_argument("compare requires equal sigma");
    return compare_unchecked(x, y, u, w);
}

std::vector<Run> find_runs(const DigitVector& x, long long /*u*/, long long /*w*/) {
    std::vector<Run> runs;
    const int n = x.n;
    const long long k = x.last_index();
    if (n % 2 != 0) return runs; // runs drive the search for even n only
    const int h = n / 2;
    for (long long j = 0; j <= k; ++j) {
        if (std::abs(x.digit(j)) != h) continue;
        int eps = sign_of(x.digit(j));
        for (long long l = j; l <= k; ++l) {
            if (l > j) {
                int d = x.digit(l);
                int ad = std::abs(d);
                bool ok;
                if (n == 2)
                    ok = d == 0 || (sign_of(d) == eps && (ad == 1 || (l == k && ad <= 3)));
                else
                    ok = sign_of(d) == eps &&
                         (ad == h - 1 || ad == h || (ad == h + 1 && l == k));
                if (!ok) break;
            }
            runs.push_back(Run{j, l, eps});
            if (std::abs(x.digit(l)) > h) break; // oversized digit ends the run
        }
    }
    return runs;
}

long long run_weight(const DigitVector& x, const Run& r) {
    const int n = x.n;
    if (n == 2) {
        long long ones = 0, zeros = 0;
        for (long long i = r.start; i <= r.end; ++i) {
            int d = x.digit(i);
            if (d == r.sign) ++ones;
            else if (d == 0) ++zeros;
        }
        return (ones - 1) - zeros;
    }
    const int h = n / 2;
    long long big = 0, mid = 0, low = 0;
    for (long long i = r.start; i <= r.end; ++i) {
        int ad = std::abs(x.digit(i));
        if (ad == h + 1) ++big;
        else if (ad == h) ++mid;
        else if (ad == h - 1) ++low;
    }
    return 3 * big + (mid - 1) - low;
}

namespace {

bool is_run_of(const DigitVector& x, const Run& r) {
    if (r.start < 0 || r.end < r.start || r.end > x.last_index()) return false;
    auto runs = find_runs(x, 0, 0);
    return std::find(runs.begin(), runs.end(), r) != runs.end();
}

DigitVector reduce_at_run_unchecked(const DigitVector& x, const Run& r, int alpha_last) {
    DigitVector y = x;
    for (long long i = r.start; i < r.end; ++i) y = add_multiple(y, i, r.sign);
    return add_multiple(y, r.end, static_cast<long long>(r.sign) * alpha_last);
}

} // namespace

DigitVector reduce_at_run(const DigitVector& x, const Run& r, int alpha_last) {
    if (alpha_last != 1 && !(x.n == 2 && alpha_last == 2))
        throw std::invalid_argument("final coefficient must be 1, or 2 when n = 2");
    if (!is_run_of(x, r)) throw std::invalid_argument("not a run of the vector");
    return reduce_at_run_unchecked(x, r, alpha_last);
}

bool end_reduction_applies(const DigitVector& x, long long u, long long w) {
    const long long k = x.last_index();
    if (k <= std::max(u, w) || k < 1) return false;
    const int n = x.n;
    const int last = x.digit(k);
    const int prev = x.digit(k - 1);
    if (std::abs(last) != 1) return false;
    if (n == 2) return prev == 0;
    const int delta = -last;
    if (n % 2 != 0) return prev == delta * (n / 2);
    return prev == delta * (n / 2) || prev == delta * (n / 2 - 1);
}

namespace {

/// n = 2 only: a final (d, d) absorbs into the single digit 3d one index
/// lower, shortening the path by 1; legal only once k exceeds max(u, w).
bool tail_absorb_applies(const DigitVector& x, long long u, long long w) {
    if (x.n != 2) return false;
    const long long k = x.last_index();
    if (k <= std::max(u, w) || k < 1) return false;
    return std::abs(x.digit(k)) == 1 && x.digit(k - 1) == x.digit(k);
}

DigitVector apply_end_move(const DigitVector& x) {
    // Unified move for all the final-digit patterns: cancel the last digit
    // into the previous position.
    return add_multiple(x, x.last_index() - 1, -x.digit(x.last_index()));
}

bool improving_candidate(const DigitVector& x, long long u, long long w,
                         DigitVector* best_out) {
    const int n = x.n;
    bool improved = false;
    DigitVector best = x;
    for (const Run& r : find_runs(x, u, w)) {
        for (int alpha : {1, 2}) {
            if (alpha == 2 && n != 2) break;
            DigitVector y = reduce_at_run_unchecked(x, r, alpha);
            if (compare_unchecked(y, best, u, w) < 0) {
                best = std::move(y);
                improved = true;
            }
        }
    }
    if (improved && best_out) *best_out = std::move(best);
    return improved;
}

} // namespace

bool is_minimal(const DigitVector& x, long long u, long long w) {
    BoxParams p{u, w, x.n};
    if (!in_box(x, p)) throw std::invalid_argument("is_minimal requires a box vector");
    if (x.n % 2 != 0) return !end_reduction_applies(x, u, w);
    if (end_reduction_applies(x, u, w) || tail_absorb_applies(x, u, w)) return false;
    return !improving_candidate(x, u, w, nullptr);
}

DigitVector minimal_vector(long long u, const Int& v, long long w, int n) {
    if (n < 2) throw std::invalid_argument("base n must be >= 2");
    if (u < 0 || w < 0) throw std::invalid_argument("u and w must be non-negative");
    if (v % n == 0 && u > 0 && w > 0)
        throw std::invalid_argument("n | v requires u*w = 0 in the normal form");
    BoxParams p{u, w, n};
    DigitVector x = reduce_to_box(initial_digits(v, n), p);
    if (n % 2 != 0) {
        if (end_reduction_applies(x, u, w)) {
            // an odd box holds at most two vectors whose lengths differ by
            // exactly 2, so ties cannot occur
            DigitVector y = apply_end_move(x);
            if (path_length(y, u, w) != path_length(x, u, w) - 2)
                throw std::logic_error("odd-box members must differ by length 2");
            x = std::move(y);
        }
        return x;
    }
    while (true) {
        x = reduce_to_box(x, p);
        for (int d : x.digits) {
            if (std::abs(d) > 2 * n)
                throw std::logic_error("digit escaped the sanity rail");
        }
        if (end_reduction_applies(x, u, w) || tail_absorb_applies(x, u, w)) {
            x = apply_end_move(x);
            continue;
        }
        DigitVector best;
        if (!improving_candidate(x, u, w, &best)) break;
        x = std::move(best);
    }
    return x;
}

long long word_length(const NormalForm& g) {
    return path_length(minimal_vector(g.u, g.v, g.w, g.n), g.u, g.w);
}

GeodesicResult geodesic(const NormalForm& g) {
    GeodesicResult r;
    r.element = g;
    r.vector = minimal_vector(g.u, g.v, g.w, g.n);
    r.shape = shape_of(r.vector, g.u, g.w);
    r.word = path_from_vector(r.vector, g.u, g.w);
    r.length = path_length(r.vector, g.u, g.w);
    return r;
}

} // namespace bsgeo
