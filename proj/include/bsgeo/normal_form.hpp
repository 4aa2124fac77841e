#pragma once

#include "bsgeo/gen_word.hpp"
#include "bsgeo/ints.hpp"

#include <functional>
#include <stdexcept>

namespace bsgeo {

/// A group element of BS(1,n) = <a, t | t a t^-1 = a^n> in the standard
/// normal form t^-u a^v t^w, with u, w >= 0 and the side condition that
/// n | v forces u*w = 0.  Immutable value type.
struct NormalForm {
    int n = 2;
    long long u = 0;
    Int v = 0;
    long long w = 0;

    bool is_identity() const { return u == 0 && v == 0 && w == 0; }

    bool operator==(const NormalForm& o) const {
        return n == o.n && u == o.u && w == o.w && v == o.v;
    }
    bool operator!=(const NormalForm& o) const { return !(*this == o); }
};

/// Applies the relator until the side condition holds:
/// while n | v and u > 0 and w > 0, (u, v, w) <- (u-1, v/n, w-1).
NormalForm normalize(long long u, Int v, long long w, int n);

NormalForm identity(int n);

NormalForm multiply(const NormalForm& g, const NormalForm& h);
NormalForm invert(const NormalForm& g);

/// Right-multiplication by a single generator; the workhorse of the BFS.
NormalForm right_multiply(const NormalForm& g, Gen s);

NormalForm evaluate_word(const GeneratorWord& word, int n);

/// Closed-form conjugate g^s = s g s^-1 for a single generator s.
NormalForm conjugate_by_generator(const NormalForm& g, Gen s);

/// g^q = q g q^-1, folding conjugate_by_generator over q right-to-left.
NormalForm conjugate(const NormalForm& g, const GeneratorWord& q);

/// Exact x-coordinate n^-u * v of the element's endpoint.
Rat x_coordinate(const NormalForm& g);

/// Canonical textual form "t^-u a^v t^w" with zero-exponent factors omitted;
/// the identity renders as the empty word.
std::string to_string(const NormalForm& g);

struct NormalFormHash {
    size_t operator()(const NormalForm& g) const {
        size_t seed = 0;
        boost::hash_combine(seed, g.u);
        boost::hash_combine(seed, g.w);
        boost::hash_combine(seed, boost::multiprecision::hash_value(g.v));
        return seed;
    }
};

} // namespace bsgeo
