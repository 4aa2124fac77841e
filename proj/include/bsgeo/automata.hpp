#pragma once

#include "bsgeo/gen_word.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace bsgeo {

/// Deterministic automaton over the generator alphabet {a, A, t, T}.
/// delta[state][letter] is the target state or -1.
struct Automaton {
    std::vector<std::string> states;
    int start = 0;
    std::vector<bool> accept;
    std::vector<std::array<int, 4>> delta;

    int add_state(const std::string& name, bool accepting = false);
    void add_edge(int from, Gen letter, int to);
    int step(int state, Gen letter) const { return delta[state][static_cast<int>(letter)]; }
    bool accepts(const GeneratorWord& w) const;
    int find_state(const std::string& name) const;

    std::string to_json() const;
};

/// The explicit machine for the strict-shape-1 geodesic language of BS(1,2):
/// states start, s_t-1, s_0,0, s_0,1, s_0,-1, s_1,0, s_2,0, with accept set
/// {s_0,0, s_1,0, s_2,0}; the a/A edges out of s_1,0 and s_2,0 enter digit
/// states that admit no accepting continuation when n = 2.
Automaton build_O2();

/// Acceptor for words t^-u a^(x_0) t a^(x_1) t ... a^(x_k) t^(w-k) whose
/// digit vector is the minimal one of its box and k < w: digit bound
/// floor(n/2) everywhere, and for even n no adjacent pair (d*n/2, d*n/2) or
/// (d*n/2, opposite sign).  Language-equivalent to build_O2 when n = 2.
Automaton build_strict1_acceptor(int n);

/// Drops the initial t^-1 component and un-accepts the t-run state, leaving
/// the words that do not begin with t^-1 and end with a single t.
Automaton restrict_to_Qn(const Automaton& a);

/// counts[m] = number of accepted words of length m, for m = 0..N.
std::vector<uint64_t> count_by_length(const Automaton& a, int N);

/// Accepted-word counts per length with the dominant growth estimate.
struct GrowthSeries {
    std::vector<uint64_t> counts;
    double rate = 0.0;
};

GrowthSeries growth_series(const Automaton& a, int N);

/// Dominant growth rate of the accepted-word counts, via power iteration on
/// the useful subgraph (relative tolerance 1e-10).  Throws if the language
/// is empty or finite-state-trivial (no accepting cycle structure).
double growth_rate(const Automaton& a);

/// All accepted words of length exactly len (lexicographic in a,A,t,T order).
std::vector<GeneratorWord> enumerate_words(const Automaton& a, int len);

/// All accepted words of length <= maxlen.
std::vector<GeneratorWord> enumerate_words_up_to(const Automaton& a, int maxlen);

/// Uniform sample among accepted words of length len, or nullopt if none.
std::optional<GeneratorWord> sample_word(const Automaton& a, int len,
                                         std::mt19937_64& rng);

} // namespace bsgeo
