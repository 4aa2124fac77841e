#include "bsgeo/automata.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <tuple>

namespace bsgeo {

int Automaton::add_state(const std::string& name, bool accepting) {
    states.push_back(name);
    accept.push_back(accepting);
    delta.push_back({-1, -1, -1, -1});
    return static_cast<int>(states.size()) - 1;
}

void Automaton::add_edge(int from, Gen letter, int to) {
    delta[from][static_cast<int>(letter)] = to;
}

bool Automaton::accepts(const GeneratorWord& w) const {
    int s = start;
    for (Gen g : w.letters) {
        s = step(s, g);
        if (s < 0) return false;
    }
    return accept[s];
}

int Automaton::find_state(const std::string& name) const {
    for (size_t i = 0; i < states.size(); ++i)
        if (states[i] == name) return static_cast<int>(i);
    return -1;
}

std::string Automaton::to_json() const {
    nlohmann::json j;
    j["states"] = states;
    j["start"] = states[start];
    nlohmann::json acc = nlohmann::json::array();
    for (size_t i = 0; i < states.size(); ++i)
        if (accept[i]) acc.push_back(states[i]);
    j["accept"] = std::move(acc);
    nlohmann::json edges = nlohmann::json::array();
    for (size_t s = 0; s < states.size(); ++s)
        for (int l = 0; l < 4; ++l)
            if (delta[s][l] >= 0)
                edges.push_back({states[s], std::string(1, gen_char(static_cast<Gen>(l))),
                                 states[delta[s][l]]});
    j["edges"] = std::move(edges);
    return j.dump(2);
}

Automaton build_O2() {
    Automaton a;
    int start = a.add_state("start");
    int t_pref = a.add_state("s_t-1");
    int s00 = a.add_state("s_0,0", true);
    int s01 = a.add_state("s_0,1");
    int s0m1 = a.add_state("s_0,-1");
    int s10 = a.add_state("s_1,0", true);
    int s20 = a.add_state("s_2,0", true);
    // Digit states entered from s_1,0 / s_2,0; for n = 2 an adjacent nonzero
    // digit can never complete to a minimal vector, so these accept nothing.
    int s11 = a.add_state("s_1,1");
    int s1m1 = a.add_state("s_1,-1");
    int s21 = a.add_state("s_2,1");
    int s2m1 = a.add_state("s_2,-1");
    int dead = a.add_state("s_dead");

    a.start = start;
    a.add_edge(start, Gen::Tinv, t_pref);
    a.add_edge(start, Gen::T, s00);
    a.add_edge(start, Gen::A, s01);
    a.add_edge(start, Gen::Ainv, s0m1);

    a.add_edge(t_pref, Gen::Tinv, t_pref);
    a.add_edge(t_pref, Gen::A, s01);
    a.add_edge(t_pref, Gen::Ainv, s0m1);

    a.add_edge(s00, Gen::T, s00);
    a.add_edge(s00, Gen::A, s01);
    a.add_edge(s00, Gen::Ainv, s0m1);

    a.add_edge(s01, Gen::T, s10);
    a.add_edge(s0m1, Gen::T, s20);

    a.add_edge(s10, Gen::T, s00);
    a.add_edge(s10, Gen::A, s11);
    a.add_edge(s10, Gen::Ainv, s1m1);

    a.add_edge(s20, Gen::T, s00);
    a.add_edge(s20, Gen::A, s21);
    a.add_edge(s20, Gen::Ainv, s2m1);

    a.add_edge(s11, Gen::T, dead);
    a.add_edge(s1m1, Gen::T, dead);
    a.add_edge(s21, Gen::T, dead);
    a.add_edge(s2m1, Gen::T, dead);
    return a;
}

namespace {

// Constraint class of the previous digit, for the even-n adjacency rules.
enum class PrevClass { Free, PlusHalf, MinusHalf };

struct Strict1Builder {
    int n;
    Automaton a;
    std::map<std::tuple<int, int, int>, int> digit_states; // (sign, count, class)

    int fl() const { return n / 2; }
    bool even() const { return n % 2 == 0; }

    // Largest magnitude a digit may take given the previous digit's class.
    int cap(PrevClass c, int sign) const {
        if (!even() || c == PrevClass::Free) return fl();
        if (c == PrevClass::PlusHalf) return sign > 0 ? fl() - 1 : 0;
        return sign < 0 ? fl() - 1 : 0;
    }

    PrevClass class_of(int sign, int count) const {
        if (even() && count == fl()) return sign > 0 ? PrevClass::PlusHalf : PrevClass::MinusHalf;
        return PrevClass::Free;
    }

    int after1_state(PrevClass c) {
        const char* name = c == PrevClass::PlusHalf  ? "s_1,0"
                           : c == PrevClass::MinusHalf ? "s_2,0"
                                                       : "s_after1";
        int s = a.find_state(name);
        return s >= 0 ? s : a.add_state(name, true);
    }

    int digit_state(int sign, int count, PrevClass c) {
        auto key = std::make_tuple(sign, count, static_cast<int>(c));
        auto it = digit_states.find(key);
        if (it != digit_states.end()) return it->second;
        std::string name = "d_" + std::string(sign > 0 ? "+" : "-") +
                           std::to_string(count) + "|" + std::to_string(static_cast<int>(c));
        int s = a.add_state(name);
        digit_states.emplace(key, s);
        // extend the a-run
        if (count + 1 <= cap(c, sign))
            a.add_edge(s, sign > 0 ? Gen::A : Gen::Ainv, digit_state(sign, count + 1, c));
        a.add_edge(s, Gen::T, after1_state(class_of(sign, count)));
        return s;
    }

    void attach_digit_edges(int from, PrevClass c) {
        if (cap(c, +1) >= 1) a.add_edge(from, Gen::A, digit_state(+1, 1, c));
        if (cap(c, -1) >= 1) a.add_edge(from, Gen::Ainv, digit_state(-1, 1, c));
    }

    Automaton build() {
        int start = a.add_state("start");
        a.start = start;
        int t_pref = a.add_state("s_t-1");
        int t_free = a.add_state("s_0,0", true);

        a.add_edge(start, Gen::Tinv, t_pref);
        a.add_edge(start, Gen::T, t_free);
        attach_digit_edges(start, PrevClass::Free);

        a.add_edge(t_pref, Gen::Tinv, t_pref);
        attach_digit_edges(t_pref, PrevClass::Free);

        a.add_edge(t_free, Gen::T, t_free);
        attach_digit_edges(t_free, PrevClass::Free);

        for (PrevClass c : {PrevClass::Free, PrevClass::PlusHalf, PrevClass::MinusHalf}) {
            if (!even() && c != PrevClass::Free) continue;
            int s = after1_state(c);
            a.add_edge(s, Gen::T, t_free);
            attach_digit_edges(s, c);
        }
        return std::move(a);
    }
};

} // namespace

Automaton build_strict1_acceptor(int n) {
    if (n < 2) throw std::invalid_argument("base n must be >= 2");
    Strict1Builder b{n, {}, {}};
    return b.build();
}

Automaton restrict_to_Qn(const Automaton& a) {
    Automaton q = a;
    int t_pref = q.find_state("s_t-1");
    if (t_pref >= 0) {
        for (auto& row : q.delta)
            for (int l = 0; l < 4; ++l)
                if (row[l] == t_pref) row[l] = -1;
        q.delta[t_pref] = {-1, -1, -1, -1};
        q.accept[t_pref] = false;
    }
    int t_run = q.find_state("s_0,0");
    if (t_run >= 0) q.accept[t_run] = false;
    return q;
}

namespace {

// table[m][s] = number of accepted words of length m starting from state s
std::vector<std::vector<uint64_t>> suffix_counts(const Automaton& a, int N) {
    const size_t S = a.states.size();
    std::vector<std::vector<uint64_t>> b(N + 1, std::vector<uint64_t>(S, 0));
    for (size_t s = 0; s < S; ++s) b[0][s] = a.accept[s] ? 1 : 0;
    for (int m = 1; m <= N; ++m)
        for (size_t s = 0; s < S; ++s) {
            uint64_t total = 0;
            for (int l = 0; l < 4; ++l) {
                int t = a.delta[s][l];
                if (t >= 0 && __builtin_add_overflow(total, b[m - 1][t], &total))
                    throw std::overflow_error("word count exceeds 64 bits");
            }
            b[m][s] = total;
        }
    return b;
}

} // namespace

std::vector<uint64_t> count_by_length(const Automaton& a, int N) {
    if (N < 0) throw std::invalid_argument("length bound must be >= 0");
    auto b = suffix_counts(a, N);
    std::vector<uint64_t> counts(N + 1);
    for (int m = 0; m <= N; ++m) counts[m] = b[m][a.start];
    return counts;
}

GrowthSeries growth_series(const Automaton& a, int N) {
    return GrowthSeries{count_by_length(a, N), growth_rate(a)};
}

double growth_rate(const Automaton& a) {
    const size_t S = a.states.size();
    // reachable from start
    std::vector<bool> reach(S, false);
    std::vector<int> stack{a.start};
    reach[a.start] = true;
    while (!stack.empty()) {
        int s = stack.back();
        stack.pop_back();
        for (int l = 0; l < 4; ++l) {
            int t = a.delta[s][l];
            if (t >= 0 && !reach[t]) {
                reach[t] = true;
                stack.push_back(t);
            }
        }
    }
    // co-reachable to an accept state
    std::vector<std::vector<int>> rev(S);
    for (size_t s = 0; s < S; ++s)
        for (int l = 0; l < 4; ++l)
            if (a.delta[s][l] >= 0) rev[a.delta[s][l]].push_back(static_cast<int>(s));
    std::vector<bool> coreach(S, false);
    for (size_t s = 0; s < S; ++s)
        if (a.accept[s] && reach[s] && !coreach[s]) {
            coreach[s] = true;
            stack.push_back(static_cast<int>(s));
        }
    while (!stack.empty()) {
        int s = stack.back();
        stack.pop_back();
        for (int p : rev[s])
            if (reach[p] && !coreach[p]) {
                coreach[p] = true;
                stack.push_back(p);
            }
    }
    std::vector<int> useful;
    for (size_t s = 0; s < S; ++s)
        if (reach[s] && coreach[s]) useful.push_back(static_cast<int>(s));
    if (useful.empty()) throw std::runtime_error("empty language has no growth rate");

    std::vector<int> index(S, -1);
    for (size_t i = 0; i < useful.size(); ++i) index[useful[i]] = static_cast<int>(i);
    const size_t U = useful.size();
    std::vector<std::vector<double>> m(U, std::vector<double>(U, 0.0));
    for (size_t i = 0; i < U; ++i)
        for (int l = 0; l < 4; ++l) {
            int t = a.delta[useful[i]][l];
            if (t >= 0 && index[t] >= 0) m[i][index[t]] += 1.0;
        }
    // Power iteration on M + I; the shift makes every component aperiodic.
    std::vector<double> x(U, 1.0), y(U);
    double lambda = 1.0;
    for (int iter = 0; iter < 200000; ++iter) {
        double sx = 0, sy = 0;
        for (size_t i = 0; i < U; ++i) {
            double acc = x[i];
            for (size_t j = 0; j < U; ++j) acc += m[i][j] * x[j];
            y[i] = acc;
            sy += acc;
            sx += x[i];
        }
        double next = sy / sx;
        for (size_t i = 0; i < U; ++i) x[i] = y[i] / sy;
        if (iter > 4 && std::abs(next - lambda) <= 1e-10 * next) {
            lambda = next;
            break;
        }
        lambda = next;
    }
    return lambda - 1.0;
}

std::vector<GeneratorWord> enumerate_words(const Automaton& a, int len) {
    auto b = suffix_counts(a, len);
    std::vector<GeneratorWord> out;
    GeneratorWord current;
    std::function<void(int, int)> dfs = [&](int state, int remaining) {
        if (remaining == 0) {
            if (a.accept[state]) out.push_back(current);
            return;
        }
        for (int l = 0; l < 4; ++l) {
            int t = a.delta[state][l];
            if (t < 0 || b[remaining - 1][t] == 0) continue;
            current.letters.push_back(static_cast<Gen>(l));
            dfs(t, remaining - 1);
            current.letters.pop_back();
        }
    };
    dfs(a.start, len);
    return out;
}

std::vector<GeneratorWord> enumerate_words_up_to(const Automaton& a, int maxlen) {
    std::vector<GeneratorWord> out;
    for (int len = 0; len <= maxlen; ++len) {
        auto words = enumerate_words(a, len);
        out.insert(out.end(), words.begin(), words.end());
    }
    return out;
}

std::optional<GeneratorWord> sample_word(const Automaton& a, int len,
                                         std::mt19937_64& rng) {
    auto b = suffix_counts(a, len);
    if (b[len][a.start] == 0) return std::nullopt;
    GeneratorWord w;
    int state = a.start;
    for (int remaining = len; remaining > 0; --remaining) {
        uint64_t total = b[remaining][state];
        std::uniform_int_distribution<uint64_t> pick(0, total - 1);
        uint64_t ticket = pick(rng);
        for (int l = 0; l < 4; ++l) {
            int t = a.delta[state][l];
            if (t < 0) continue;
            uint64_t c = b[remaining - 1][t];
            if (ticket < c) {
                w.letters.push_back(static_cast<Gen>(l));
                state = t;
                break;
            }
            ticket -= c;
        }
    }
    return w;
}

} // namespace bsgeo
