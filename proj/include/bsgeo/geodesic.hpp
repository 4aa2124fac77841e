#pragma once

#include "bsgeo/digit_vector.hpp"
#include "bsgeo/gen_word.hpp"
#include "bsgeo/normal_form.hpp"

#include <vector>

namespace bsgeo {

/// Which of the four path shapes eta_{u,v,w} selects for a vector.
enum class ShapeTag { Shape1 = 1, Shape2 = 2, Shape3 = 3, Shape4 = 4 };

struct Shape {
    ShapeTag tag = ShapeTag::Shape1;
    bool strict1 = false; // last_index < max(u, w)
};

/// An index interval [start, end] within a digit vector together with the
/// common sign of its digits; the unit of reduction for even n.
struct Run {
    long long start = 0;
    long long end = 0;
    int sign = 1;

    bool operator==(const Run& o) const {
        return start == o.start && end == o.end && sign == o.sign;
    }
};

struct GeodesicResult {
    NormalForm element;
    DigitVector vector;
    Shape shape;
    GeneratorWord word;
    long long length = 0;
};

/// Shape selected by the ordinal relations among last_index(x), u, w;
/// boundary ties resolve to the lowest-numbered shape.
Shape shape_of(const DigitVector& x, long long u, long long w);

/// The word eta_{u,v,w}(x) of the selected shape.  Requires the normal-form
/// side condition: if x_0 = 0 (n | v) then u*w = 0.
GeneratorWord path_from_vector(const DigitVector& x, long long u, long long w);

/// Letter count of path_from_vector: ||x||_1 + u + w when
/// last_index <= max(u,w), else ||x||_1 + 2*last_index - |u - w|.
long long path_length(const DigitVector& x, long long u, long long w);

/// Total order on vectors of equal sigma: shorter induced path first, ties
/// by absolute-value lexicographic order with low indices most significant.
/// Returns <0, 0, >0.  Throws if sigma(x) != sigma(y).
int compare(const DigitVector& x, const DigitVector& y, long long u, long long w);

/// Comparison without the sigma precondition check (engine internal order).
int compare_unchecked(const DigitVector& x, const DigitVector& y, long long u,
                      long long w);

/// All admissible runs (every start j and every end l), including, for
/// even n, sub-runs of maximal ones; the minimality search tries them all.
std::vector<Run> find_runs(const DigitVector& x, long long u, long long w);

/// Weight of a run: for n >= 4, 3#{n/2+1} + (#{n/2} - 1) - #{n/2-1} over the
/// run's digit magnitudes; for n = 2, (#{1} - 1) - #{0}, ignoring digits of
/// absolute value > 1.
long long run_weight(const DigitVector& x, const Run& r);

/// x + eps_r (w^(start) + ... + w^(end-1) + alpha_last * w^(end)).
/// alpha_last must be 1 except when n = 2, where it may be 1 or 2.
DigitVector reduce_at_run(const DigitVector& x, const Run& r, int alpha_last = 1);

/// Final-digit patterns that certify non-minimality when
/// last_index > max(u,w): (d*floor(n/2), -d) for odd n; (d*(n/2 - 1), -d) or
/// (d*n/2, -d) for even n >= 4; (0, d) for n = 2.
bool end_reduction_applies(const DigitVector& x, long long u, long long w);

/// True iff x is the <=_{u,w}-least vector of its box.  Requires in_box(x).
bool is_minimal(const DigitVector& x, long long u, long long w);

/// The canonical minimal vector for t^-u a^v t^w: unique lexicographic
/// minimum for even n; for odd n the box member of least length.
DigitVector minimal_vector(long long u, const Int& v, long long w, int n);

long long word_length(const NormalForm& g);
GeodesicResult geodesic(const NormalForm& g);

} // namespace bsgeo
