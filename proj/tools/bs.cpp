#include <CLI11.hpp>
#include <json.hpp>

#include "bsgeo/automata.hpp"
#include "bsgeo/cayley.hpp"
#include "bsgeo/curvature.hpp"
#include "bsgeo/geodesic.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>

using namespace bsgeo;
using nlohmann::json;

namespace {

size_t g_cap = 50'000'000;
unsigned g_threads = 1;

// BS_GEODESY_CAP wins over --cap so batch runs can be throttled externally.
size_t element_cap() {
    if (const char* env = std::getenv("BS_GEODESY_CAP")) return std::stoull(env);
    return g_cap;
}

NormalForm parse_element(const std::string& triple, int n) {
    auto first = triple.find(',');
    auto second = triple.rfind(',');
    if (first == std::string::npos || second == first)
        throw std::invalid_argument("element must be given as u,v,w");
    long long u = std::stoll(triple.substr(0, first));
    Int v(triple.substr(first + 1, second - first - 1));
    long long w = std::stoll(triple.substr(second + 1));
    return normalize(u, v, w, n);
}

json element_json(const NormalForm& g) {
    return json{{"u", g.u}, {"v", g.v.str()}, {"w", g.w}};
}

json kappa_json(const CurvatureReport& rep) {
    json hist = json::object();
    for (const auto& [delta, count] : rep.delta_histogram())
        hist[std::to_string(delta)] = count;
    return json{{"g", element_json(rep.g)},
                {"r", rep.r},
                {"l_g", rep.l_g},
                {"kappa",
                 {{"num", Int(boost::multiprecision::numerator(rep.kappa)).str()},
                  {"den", Int(boost::multiprecision::denominator(rep.kappa)).str()}}},
                {"histogram", std::move(hist)}};
}

int cmd_length(int n, const std::optional<std::string>& element,
               const std::optional<std::string>& word_text, const std::string& format) {
    NormalForm g;
    if (element) g = parse_element(*element, n);
    else if (word_text) g = evaluate_word(parse_word(*word_text), n);
    else throw CLI::ValidationError("length", "need --element or --word");
    GeodesicResult res = geodesic(g);
    if (format == "json") {
        json j{{"element", element_json(g)},
               {"length", res.length},
               {"word", format_word(res.word)},
               {"shape", static_cast<int>(res.shape.tag)},
               {"strict_shape_1", res.shape.strict1},
               {"vector", to_string(res.vector)}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "element: " << (g.is_identity() ? "\"\"" : to_string(g)) << "\n"
                  << "length: " << res.length << "\n"
                  << "word: " << format_word(res.word) << "\n"
                  << "shape: " << static_cast<int>(res.shape.tag)
                  << (res.shape.strict1 ? " (strict shape 1)" : "") << "\n"
                  << "vector: " << to_string(res.vector) << "\n";
    }
    return 0;
}

int cmd_curvature(int n, const std::string& element, int r, const std::string& format,
                  bool check_oracle) {
    SphereCache cache;
    CurvatureReport rep = kappa(parse_element(element, n), r, cache);
    if (check_oracle) {
        int radius = static_cast<int>(rep.l_g) + 2 * r;
        Ball ball = bfs_ball(n, radius, element_cap(), g_threads);
        Rat reference = oracle_kappa(rep.g, r, ball);
        if (reference != rep.kappa) {
            std::cerr << "BFS cross-check disagrees with the engine value\n";
            return 1;
        }
        std::cout << "BFS cross-check (radius " << radius << "): agreed\n";
    }
    if (format == "text") {
        std::cout << "l(g) = " << rep.l_g << ", kappa_" << r << " = "
                  << Int(boost::multiprecision::numerator(rep.kappa)).str() << "/"
                  << Int(boost::multiprecision::denominator(rep.kappa)).str() << "\n";
    } else {
        std::cout << kappa_json(rep).dump(2) << "\n";
    }
    return 0;
}

FamilyKind parse_kind(const std::string& k) {
    if (k == "P" || k == "p") return FamilyKind::P;
    if (k == "Z" || k == "z") return FamilyKind::Z;
    if (k == "N" || k == "n") return FamilyKind::N;
    throw CLI::ValidationError("family", "kind must be one of P, Z, N");
}

int cmd_family(int n, const std::string& kind_str, int r, int enumerate_len,
               int sample_count, uint64_t seed, int xi_len, const std::string& format) {
    FamilyKind kind = parse_kind(kind_str);
    if (enumerate_len <= 0 && sample_count <= 0)
        throw CLI::ValidationError("family", "need --enumerate-xi or --sample");
    Automaton qn = restrict_to_Qn(n == 2 ? build_O2() : build_strict1_acceptor(n));
    std::vector<GeneratorWord> xis;
    if (enumerate_len > 0) {
        for (int len = 2; len <= enumerate_len; ++len)
            for (auto& w : enumerate_words(qn, len)) xis.push_back(std::move(w));
    } else {
        std::mt19937_64 rng(seed);
        for (int i = 0; i < sample_count; ++i) {
            auto w = sample_word(qn, xi_len, rng);
            if (!w) throw std::runtime_error("no Q_n words of the requested length");
            xis.push_back(std::move(*w));
        }
    }
    SphereCache cache;
    bool all_ok = true;
    json out = json::array();
    for (const auto& xi : xis) {
        FamilyReport rep = verify_family_sign({kind, n, r, xi}, cache);
        all_ok = all_ok && rep.sign_ok;
        if (format == "json") {
            json j{{"xi", format_word(xi)},
                   {"g", element_json(rep.g)},
                   {"l_g", rep.l_g},
                   {"kappa",
                    {{"num", Int(boost::multiprecision::numerator(rep.kappa_r)).str()},
                     {"den", Int(boost::multiprecision::denominator(rep.kappa_r)).str()}}},
                   {"sign_ok", rep.sign_ok}};
            out.push_back(std::move(j));
        } else {
            std::cout << "xi: " << format_word(xi) << "  l(g) = " << rep.l_g
                      << "  kappa = "
                      << Int(boost::multiprecision::numerator(rep.kappa_r)).str() << "/"
                      << Int(boost::multiprecision::denominator(rep.kappa_r)).str()
                      << (rep.sign_ok ? "  ok" : "  SIGN MISMATCH") << "\n";
        }
    }
    if (format == "json") std::cout << out.dump(2) << "\n";
    std::cout << (all_ok ? "all signs as claimed" : "sign mismatches found") << " ("
              << xis.size() << " xi)\n";
    return all_ok ? 0 : 1;
}

int cmd_sphere(int n, int R, const std::string& format) {
    Ball ball = bfs_ball(n, R, element_cap(), g_threads);
    if (format == "csv") {
        write_ball_csv(ball, std::cout);
    } else if (format == "json") {
        json sizes = json::array();
        for (int r = 0; r <= R; ++r) sizes.push_back(sphere(ball, r).size());
        std::cout << json{{"n", n}, {"R", R}, {"sphere_sizes", sizes}}.dump(2) << "\n";
    } else {
        for (int r = 0; r <= R; ++r)
            std::cout << "|S(" << r << ")| = " << sphere(ball, r).size() << "\n";
    }
    return 0;
}

int cmd_automaton(int n, const std::string& action, int N, const std::string& format) {
    Automaton a = n == 2 ? build_O2() : build_strict1_acceptor(n);
    if (action == "count") {
        auto counts = count_by_length(a, N);
        for (int m = 0; m <= N; ++m) std::cout << m << "," << counts[m] << "\n";
    } else if (action == "growth") {
        std::cout << "growth rate: " << growth_rate(a) << "\n";
    } else if (action == "export") {
        if (format == "text") std::cout << a.to_json() << "\n";
        else std::cout << a.to_json() << "\n";
    } else {
        throw CLI::ValidationError("automaton", "action must be count, growth or export");
    }
    return 0;
}

int cmd_verify(int n, int R) {
    Ball ball = bfs_ball(n, R, element_cap(), g_threads);
    for (const auto& [g, d] : ball.distances) {
        long long l = word_length(g);
        if (l != d) {
            std::cout << "MISMATCH at u=" << g.u << " v=" << g.v.str() << " w=" << g.w
                      << ": engine " << l << ", BFS " << d << "\n";
            return 1;
        }
    }
    std::cout << "OK: " << ball.size() << " elements verified\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact geodesics, word lengths and conjugation curvature in BS(1,n)"};
    app.require_subcommand(1);

    int n = 2, R = 6, r = 1, N = 10;
    std::string format = "text";
    std::optional<std::string> element, word_text;
    std::string kind = "P", action;
    int enumerate_len = 0, sample_count = 0, xi_len = 12;
    uint64_t seed = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("-n,--base", n, "base of BS(1,n)")->check(CLI::Range(2, 64));
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "csv", "text"}));
        cmd->add_option("--cap", g_cap, "BFS element cap");
        cmd->add_option("--threads", g_threads, "BFS worker threads");
    };

    CLI::App* length = app.add_subcommand("length", "geodesic and word length");
    add_common(length);
    length->add_option("--element", element, "normal form triple u,v,w");
    length->add_option("--word", word_text, "word over a,A,t,T");

    CLI::App* curv = app.add_subcommand("curvature", "exact conjugation curvature");
    add_common(curv);
    bool check_oracle = false;
    curv->add_option("--element", element, "normal form triple u,v,w")->required();
    curv->add_option("-r,--radius", r, "conjugation radius")->check(CLI::Range(1, 4));
    curv->add_flag("--check-oracle", check_oracle,
                   "cross-check the value against a BFS ball (slow)");

    CLI::App* family = app.add_subcommand("family", "curvature-sign families");
    add_common(family);
    family->add_option("-k,--kind", kind, "family kind: P, Z or N")->required();
    family->add_option("-r,--radius", r, "conjugation radius");
    family->add_option("--enumerate-xi", enumerate_len,
                       "check every Q_n middle word up to this length");
    family->add_option("--sample", sample_count, "number of sampled middle words");
    family->add_option("--seed", seed, "sampling seed");
    family->add_option("--xi-len", xi_len, "sampled middle-word length");

    CLI::App* sph = app.add_subcommand("sphere", "BFS ball and sphere sizes");
    add_common(sph);
    sph->add_option("-R,--ball-radius", R, "ball radius")->required();

    CLI::App* aut = app.add_subcommand("automaton", "strict-shape-1 geodesic machines");
    add_common(aut);
    aut->add_option("action", action, "count | growth | export")->required();
    aut->add_option("-N,--length", N, "maximum word length for count");

    CLI::App* verify = app.add_subcommand("verify", "engine vs BFS oracle equivalence");
    add_common(verify);
    verify->add_option("-R,--ball-radius", R, "ball radius")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (length->parsed()) return cmd_length(n, element, word_text, format);
        if (curv->parsed()) return cmd_curvature(n, *element, r, format, check_oracle);
        if (family->parsed())
            return cmd_family(n, kind, r, enumerate_len, sample_count, seed, xi_len, format);
        if (sph->parsed()) return cmd_sphere(n, R, format);
        if (aut->parsed()) return cmd_automaton(n, action, N, format);
        if (verify->parsed()) return cmd_verify(n, R);
    } catch (const ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
