#pragma once

#include "bsgeo/cayley.hpp"
#include "bsgeo/geodesic.hpp"

#include <map>
#include <utility>
#include <vector>

namespace bsgeo {

/// Exact conjugation curvature of one element at one radius, with the
/// per-conjugator length breakdown.
struct CurvatureReport {
    NormalForm g;
    int r = 1;
    long long l_g = 0;
    std::vector<std::pair<NormalForm, long long>> conj_lengths;
    Rat kappa;

    /// Histogram of l(g^q) - l(g) over the sphere.
    std::map<long long, long long> delta_histogram() const;
};

/// Spheres S_n(r) materialized once per (n, r) and shared between calls.
class SphereCache {
public:
    const std::vector<NormalForm>& get(int n, int r);

private:
    std::map<std::pair<int, int>, std::vector<NormalForm>> spheres_;
};

/// kappa_r(g) = (l(g) - mean over S_n(r) of l(g^q)) / l(g), with every
/// length from the geodesic engine and the sphere from BFS.  Exact.
CurvatureReport kappa(const NormalForm& g, int r, SphereCache& cache);

/// Digit shift realizing conjugation by a^{\pm 1} at the vector level:
/// direction +1 adds 1 at index u and subtracts 1 at index w (sigma grows
/// by n^u - n^w); direction -1 does the opposite.  May leave the box.
DigitVector rho_shift(const DigitVector& x, long long u, long long w, int direction);

/// A minimal vector is strongly minimal when both rho images land inside
/// their boxes and are minimal there.
bool is_strongly_minimal(const DigitVector& x, long long u, long long w);

enum class KappaSign { Zero, Negative };

/// Sign of kappa_1 predicted for g whose minimal vector is strongly minimal
/// with last_index > max(u, w): zero iff the digits at u and w are nonzero
/// (or u = w) and uw > 0 or n | v; negative otherwise.  Throws when the
/// preconditions fail.
KappaSign classify_kappa1_shape34(const NormalForm& g);

/// Companion predicate for last_index <= max(u, w): zero iff u = w > last
/// index; negative otherwise.  Checked empirically, never assumed.
KappaSign classify_kappa1_shape12(const NormalForm& g);

enum class FamilyKind { P, Z, N };

struct FamilySpec {
    FamilyKind kind = FamilyKind::P;
    int n = 2;
    int r = 1;
    GeneratorWord xi; // middle word, drawn from Q_n
};

struct FamilyElement {
    NormalForm g;
    DigitVector vector;
};

/// Largest r for which the family's sign claim is made.
int family_r_bound(FamilyKind kind, int n);

/// Element p * xi * s with the family's prefix/suffix digit blocks around
/// xi's digit vector.  Verifies that the concatenated vector is minimal
/// (throwing on an internal inconsistency) and that xi lies in Q_n.
FamilyElement build_family(const FamilySpec& spec);

struct FamilyReport {
    FamilySpec spec;
    NormalForm g;
    long long l_g = 0;
    Rat kappa_r;
    bool sign_ok = false;
    std::map<long long, long long> delta_histogram;
};

/// Builds the family element and checks the advertised sign of kappa_r
/// (P: > 0, Z: = 0, N: < 0), reporting the conjugate-length breakdown.
FamilyReport verify_family_sign(const FamilySpec& spec, SphereCache& cache);

} // namespace bsgeo
