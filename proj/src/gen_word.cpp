#include "bsgeo/gen_word.hpp"

#include <cctype>
#include <sstream>

namespace bsgeo {

GeneratorWord parse_word(const std::string& text) {
    GeneratorWord w;
    size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        Gen g;
        switch (c) {
        case 'a': g = Gen::A; break;
        case 'A': g = Gen::Ainv; break;
        case 't': g = Gen::T; break;
        case 'T': g = Gen::Tinv; break;
        default:
            throw std::invalid_argument(std::string("unexpected character '") + c +
                                        "' in word");
        }
        ++i;
        long long exp = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            size_t start = i;
            if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
                throw std::invalid_argument("malformed exponent in word");
            exp = std::stoll(text.substr(start, i - start));
        }
        w.append_power(g, exp);
    }
    return w;
}

std::string format_word(const GeneratorWord& w) {
    std::ostringstream os;
    size_t i = 0;
    bool first = true;
    while (i < w.letters.size()) {
        size_t j = i;
        while (j < w.letters.size() && w.letters[j] == w.letters[i]) ++j;
        if (!first) os << ' ';
        first = false;
        os << gen_char(w.letters[i]);
        if (j - i > 1) os << '^' << (j - i);
        i = j;
    }
    return os.str();
}

} // namespace bsgeo
