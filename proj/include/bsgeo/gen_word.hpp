#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bsgeo {

/// One letter of the generating set {a, a^-1, t, t^-1}.
enum class Gen : uint8_t { A, Ainv, T, Tinv };

inline Gen inverse(Gen g) {
    switch (g) {
    case Gen::A: return Gen::Ainv;
    case Gen::Ainv: return Gen::A;
    case Gen::T: return Gen::Tinv;
    case Gen::Tinv: return Gen::T;
    }
    throw std::logic_error("bad generator");
}

inline char gen_char(Gen g) {
    switch (g) {
    case Gen::A: return 'a';
    case Gen::Ainv: return 'A';
    case Gen::T: return 't';
    case Gen::Tinv: return 'T';
    }
    throw std::logic_error("bad generator");
}

/// A word over {a, a^-1, t, t^-1}; each letter counts 1 toward word length.
struct GeneratorWord {
    std::vector<Gen> letters;

    GeneratorWord() = default;
    explicit GeneratorWord(std::vector<Gen> ls) : letters(std::move(ls)) {}

    size_t length() const { return letters.size(); }
    bool empty() const { return letters.empty(); }

    void append(Gen g, long long count = 1) {
        for (long long i = 0; i < count; ++i) letters.push_back(g);
    }
    /// Appends g^count, using the inverse letter when count < 0.
    void append_power(Gen g, long long count) {
        if (count >= 0) append(g, count);
        else append(inverse(g), -count);
    }

    GeneratorWord inverse_word() const {
        GeneratorWord w;
        w.letters.reserve(letters.size());
        for (auto it = letters.rbegin(); it != letters.rend(); ++it)
            w.letters.push_back(inverse(*it));
        return w;
    }

    GeneratorWord concat(const GeneratorWord& other) const {
        GeneratorWord w = *this;
        w.letters.insert(w.letters.end(), other.letters.begin(), other.letters.end());
        return w;
    }

    bool operator==(const GeneratorWord& o) const { return letters == o.letters; }
};

/// Parses the word grammar used by the CLI and fixtures: tokens `a`, `A`,
/// `t`, `T`, each optionally followed by `^` and a signed decimal exponent;
/// whitespace ignored.  "a^-3" is the same word as "AAA".
GeneratorWord parse_word(const std::string& text);

/// Renders a word with exponent grouping, e.g. "a t a^3 T".
std::string format_word(const GeneratorWord& w);

} // namespace bsgeo
