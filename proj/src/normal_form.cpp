#include "bsgeo/normal_form.hpp"

#include <sstream>

namespace bsgeo {

NormalForm normalize(long long u, Int v, long long w, int n) {
    if (n < 2) throw std::invalid_argument("base n must be >= 2");
    if (u < 0 || w < 0) throw std::invalid_argument("u and w must be non-negative");
    while (u > 0 && w > 0 && v % n == 0) {
        v /= n;
        --u;
        --w;
    }
    return NormalForm{n, u, std::move(v), w};
}

NormalForm identity(int n) { return NormalForm{n, 0, 0, 0}; }

NormalForm multiply(const NormalForm& g, const NormalForm& h) {
    if (g.n != h.n) throw std::invalid_argument("operands live in different groups");
    const int n = g.n;
    // t^-u1 a^v1 t^w1 * t^-u2 a^v2 t^w2: cancel the middle t-powers, pushing
    // a-powers through with t^d a^v t^-d = a^(v n^d).
    if (g.w >= h.u) {
        Int v = g.v + h.v * pow_int(n, g.w - h.u);
        return normalize(g.u, std::move(v), g.w - h.u + h.w, n);
    }
    Int v = g.v * pow_int(n, h.u - g.w) + h.v;
    return normalize(g.u + h.u - g.w, std::move(v), h.w, n);
}

NormalForm invert(const NormalForm& g) {
    return normalize(g.w, -g.v, g.u, g.n);
}

NormalForm right_multiply(const NormalForm& g, Gen s) {
    const int n = g.n;
    switch (s) {
    case Gen::A:
        return NormalForm{n, g.u, g.v + pow_int(n, g.w), g.w};
    case Gen::Ainv:
        return NormalForm{n, g.u, g.v - pow_int(n, g.w), g.w};
    case Gen::T:
        return normalize(g.u, g.v, g.w + 1, n);
    case Gen::Tinv:
        if (g.w > 0) return NormalForm{n, g.u, g.v, g.w - 1};
        return NormalForm{n, g.u + 1, g.v * n, 0};
    }
    throw std::logic_error("bad generator");
}

NormalForm evaluate_word(const GeneratorWord& word, int n) {
    NormalForm g = identity(n);
    for (Gen s : word.letters) g = right_multiply(g, s);
    return g;
}

NormalForm conjugate_by_generator(const NormalForm& g, Gen s) {
    const int n = g.n;
    switch (s) {
    case Gen::T:
        if (g.u > 0 && g.w > 0) return normalize(g.u - 1, g.v, g.w - 1, n);
        return normalize(g.u, g.v * n, g.w, n);
    case Gen::Tinv:
        if (g.v % n != 0) return normalize(g.u + 1, g.v, g.w + 1, n);
        return normalize(g.u, g.v / n, g.w, n);
    case Gen::A:
        return normalize(g.u, pow_int(n, g.u) + g.v - pow_int(n, g.w), g.w, n);
    case Gen::Ainv:
        return normalize(g.u, -pow_int(n, g.u) + g.v + pow_int(n, g.w), g.w, n);
    }
    throw std::invalid_argument("bad generator");
}

NormalForm conjugate(const NormalForm& g, const GeneratorWord& q) {
    // g^(q1 q2 ... qk) = (g^qk)^(q1 ... q(k-1)) applied innermost-first.
    NormalForm r = g;
    for (auto it = q.letters.rbegin(); it != q.letters.rend(); ++it)
        r = conjugate_by_generator(r, *it);
    return r;
}

Rat x_coordinate(const NormalForm& g) {
    return Rat(g.v, pow_int(g.n, g.u));
}

std::string to_string(const NormalForm& g) {
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
        if (!first) os << ' ';
        first = false;
    };
    if (g.u != 0) {
        sep();
        os << "t^-" << g.u;
    }
    if (g.v != 0) {
        sep();
        os << "a^" << g.v.str();
    }
    if (g.w != 0) {
        sep();
        os << "t^" << g.w;
    }
    return os.str();
}

} // namespace bsgeo
