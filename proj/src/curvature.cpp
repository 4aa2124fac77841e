#include "bsgeo/curvature.hpp"

#include "bsgeo/automata.hpp"

#include <algorithm>
#include <stdexcept>

namespace bsgeo {

std::map<long long, long long> CurvatureReport::delta_histogram() const {
    std::map<long long, long long> h;
    for (const auto& [q, l] : conj_lengths) ++h[l - l_g];
    return h;
}

const std::vector<NormalForm>& SphereCache::get(int n, int r) {
    auto key = std::make_pair(n, r);
    auto it = spheres_.find(key);
    if (it == spheres_.end()) {
        Ball ball = bfs_ball(n, r);
        it = spheres_.emplace(key, ball.layers[r]).first;
    }
    return it->second;
}

CurvatureReport kappa(const NormalForm& g, int r, SphereCache& cache) {
    if (g.is_identity())
        throw std::invalid_argument("kappa is undefined at the identity");
    if (r < 1) throw std::invalid_argument("conjugation radius must be >= 1");
    CurvatureReport rep;
    rep.g = g;
    rep.r = r;
    rep.l_g = word_length(g);
    const auto& sph = cache.get(g.n, r);
    Int total = 0;
    rep.conj_lengths.reserve(sph.size());
    for (const NormalForm& q : sph) {
        NormalForm h = multiply(multiply(q, g), invert(q));
        long long lh = word_length(h);
        rep.conj_lengths.emplace_back(q, lh);
        total += lh;
    }
    Int count = static_cast<long long>(sph.size());
    rep.kappa = Rat(Int(rep.l_g) * count - total, Int(rep.l_g) * count);
    return rep;
}

DigitVector rho_shift(const DigitVector& x, long long u, long long w, int direction) {
    if (direction != 1 && direction != -1)
        throw std::invalid_argument("direction must be +1 or -1");
    if (u == w) return x;
    DigitVector y = x;
    y.set_digit(u, y.digit(u) + direction);
    y.set_digit(w, y.digit(w) - direction);
    return y;
}

bool is_strongly_minimal(const DigitVector& x, long long u, long long w) {
    BoxParams p{u, w, x.n};
    for (int dir : {1, -1}) {
        DigitVector y = rho_shift(x, u, w, dir);
        if (!in_box(y, p) || !is_minimal(y, u, w)) return false;
    }
    return true;
}

KappaSign classify_kappa1_shape34(const NormalForm& g) {
    DigitVector x = minimal_vector(g.u, g.v, g.w, g.n);
    if (x.last_index() <= std::max(g.u, g.w))
        throw std::domain_error("classification needs last_index > max(u, w)");
    if (!is_strongly_minimal(x, g.u, g.w))
        throw std::domain_error("classification needs a strongly minimal vector");
    bool digits_ok = g.u == g.w || (x.digit(g.u) != 0 && x.digit(g.w) != 0);
    bool t_ok = (g.u > 0 && g.w > 0) || g.v % g.n == 0;
    return (digits_ok && t_ok) ? KappaSign::Zero : KappaSign::Negative;
}

KappaSign classify_kappa1_shape12(const NormalForm& g) {
    DigitVector x = minimal_vector(g.u, g.v, g.w, g.n);
    if (x.last_index() > std::max(g.u, g.w))
        throw std::domain_error("classification needs last_index <= max(u, w)");
    if (!is_strongly_minimal(x, g.u, g.w))
        throw std::domain_error("classification needs a strongly minimal vector");
    bool zero = g.u == g.w && g.u > x.last_index();
    return zero ? KappaSign::Zero : KappaSign::Negative;
}

int family_r_bound(FamilyKind kind, int n) {
    switch (kind) {
    case FamilyKind::P: return 1;
    case FamilyKind::Z: return n == 2 ? 1 : std::max(1, n / 4 - 1);
    case FamilyKind::N: return n == 2 ? 1 : std::max(1, n / 2 - 2);
    }
    throw std::logic_error("bad family kind");
}

namespace {

/// Digit vector of a word a^{x_0} t a^{x_1} t ... a^{x_k} t (no t^-1).
std::vector<int> shape1_digits(const GeneratorWord& w) {
    std::vector<int> digits;
    int acc = 0;
    for (Gen g : w.letters) {
        switch (g) {
        case Gen::A: ++acc; break;
        case Gen::Ainv: --acc; break;
        case Gen::T:
            digits.push_back(acc);
            acc = 0;
            break;
        case Gen::Tinv:
            throw std::invalid_argument("xi must not contain t^-1");
        }
    }
    if (acc != 0) throw std::invalid_argument("xi must end with t");
    return digits;
}

struct FamilyBlocks {
    std::vector<int> prefix;
    std::vector<int> suffix;
    long long u = 0;
    long long w_offset = 0; // w = last_index - w_offset
};

FamilyBlocks family_blocks(const FamilySpec& spec) {
    const int n = spec.n;
    const int r = spec.r;
    FamilyBlocks b;
    if (n == 2) {
        if (r != 1) throw std::invalid_argument("n = 2 families require r = 1");
        b.u = 2;
        b.suffix = {0, 0, -1, 0, 0, 1, 2};
        switch (spec.kind) {
        case FamilyKind::P:
            b.prefix = {1, 0, 1, 0, 0, -1, 0};
            b.w_offset = 1;
            break;
        case FamilyKind::Z:
            b.prefix = {1, 0, 1, 0, 0, -1, 0};
            b.w_offset = 2;
            break;
        case FamilyKind::N:
            b.prefix = {1, 0, 0, 0, -1, 0, 1, 0};
            b.w_offset = 2;
            break;
        }
        return b;
    }
    if (r < 1 || r > family_r_bound(spec.kind, n))
        throw std::invalid_argument("r outside the family's validity range");
    switch (spec.kind) {
    case FamilyKind::P: {
        b.prefix = {1, n / 2, n % 2 == 0 ? 1 : -1, 0};
        b.suffix = {0, 1, 0, 1};
        b.u = 1;
        b.w_offset = 2;
        break;
    }
    case FamilyKind::Z: {
        int base = std::max(1, n / 4);
        b.prefix.assign(2 * r + 2, base);
        b.prefix.push_back(0);
        b.suffix.assign(2 * r + 6, base);
        b.suffix[0] = 0;
        b.u = r + 1;
        b.w_offset = r + 4;
        break;
    }
    case FamilyKind::N: {
        b.prefix.assign(2 * r + 3, 0);
        b.prefix[0] = 1;
        b.suffix.assign(2 * r + 6, 0);
        b.suffix.back() = 1;
        b.u = r + 1;
        b.w_offset = r + 4;
        break;
    }
    }
    return b;
}

} // namespace

FamilyElement build_family(const FamilySpec& spec) {
    Automaton qn = restrict_to_Qn(build_strict1_acceptor(spec.n));
    if (!qn.accepts(spec.xi))
        throw std::invalid_argument("xi is not a Q_n word");
    FamilyBlocks b = family_blocks(spec);
    std::vector<int> middle = shape1_digits(spec.xi);

    std::vector<int> digits = b.prefix;
    digits.insert(digits.end(), middle.begin(), middle.end());
    digits.insert(digits.end(), b.suffix.begin(), b.suffix.end());
    DigitVector x(std::move(digits), spec.n);

    long long w = x.last_index() - b.w_offset;
    NormalForm g = normalize(b.u, sigma(x), w, spec.n);
    if (g.u != b.u || g.w != w)
        throw std::logic_error("family element unexpectedly collapsed");
    if (!in_box(x, BoxParams{b.u, w, spec.n}) || !is_minimal(x, b.u, w))
        throw std::logic_error("family vector is not minimal; construction mismatch");
    return FamilyElement{std::move(g), std::move(x)};
}

FamilyReport verify_family_sign(const FamilySpec& spec, SphereCache& cache) {
    FamilyElement fam = build_family(spec);
    CurvatureReport rep = kappa(fam.g, spec.r, cache);
    FamilyReport out;
    out.spec = spec;
    out.g = fam.g;
    out.l_g = rep.l_g;
    out.kappa_r = rep.kappa;
    switch (spec.kind) {
    case FamilyKind::P: out.sign_ok = rep.kappa > 0; break;
    case FamilyKind::Z: out.sign_ok = rep.kappa == 0; break;
    case FamilyKind::N: out.sign_ok = rep.kappa < 0; break;
    }
    out.delta_histogram = rep.delta_histogram();
    return out;
}

} // namespace bsgeo
