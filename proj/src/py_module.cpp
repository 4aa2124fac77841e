#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bsgeo/automata.hpp"
#include "bsgeo/cayley.hpp"
#include "bsgeo/curvature.hpp"
#include "bsgeo/geodesic.hpp"

#include <random>

namespace py = pybind11;
using namespace bsgeo;

namespace {

py::object py_int(const std::string& decimal) {
    return py::module_::import("builtins").attr("int")(decimal);
}

Int to_int(const py::int_& v) {
    return Int(py::cast<std::string>(v.attr("__str__")()));
}
py::object to_py(const Int& v) { return py_int(v.str()); }

py::tuple triple(const NormalForm& g) {
    return py::make_tuple(g.u, to_py(g.v), g.w);
}

NormalForm element(int n, long long u, const py::int_& v, long long w) {
    return normalize(u, to_int(v), w, n);
}

py::object fraction(const Rat& q) {
    py::object Fraction = py::module_::import("fractions").attr("Fraction");
    return Fraction(py_int(Int(boost::multiprecision::numerator(q)).str()),
                    py_int(Int(boost::multiprecision::denominator(q)).str()));
}

FamilyKind kind_from(const std::string& k) {
    if (k == "P" || k == "p") return FamilyKind::P;
    if (k == "Z" || k == "z") return FamilyKind::Z;
    if (k == "N" || k == "n") return FamilyKind::N;
    throw std::invalid_argument("family kind must be P, Z or N");
}

} // namespace

PYBIND11_MODULE(_bsgeo, m) {
    m.doc() = "exact geodesics, word lengths and conjugation curvature in BS(1,n)";

    m.def("normalize", [](int n, long long u, const py::int_& v, long long w) {
        return triple(element(n, u, v, w));
    }, py::arg("n"), py::arg("u"), py::arg("v"), py::arg("w"),
       "normal form of t^-u a^v t^w");

    m.def("evaluate_word", [](int n, const std::string& word) {
        return triple(evaluate_word(parse_word(word), n));
    }, py::arg("n"), py::arg("word"));

    m.def("multiply", [](int n, py::tuple g, py::tuple h) {
        NormalForm a = element(n, g[0].cast<long long>(), g[1], g[2].cast<long long>());
        NormalForm b = element(n, h[0].cast<long long>(), h[1], h[2].cast<long long>());
        return triple(multiply(a, b));
    }, py::arg("n"), py::arg("g"), py::arg("h"));

    m.def("invert", [](int n, py::tuple g) {
        return triple(invert(element(n, g[0].cast<long long>(), g[1], g[2].cast<long long>())));
    }, py::arg("n"), py::arg("g"));

    m.def("conjugate", [](int n, py::tuple g, const std::string& word) {
        NormalForm a = element(n, g[0].cast<long long>(), g[1], g[2].cast<long long>());
        return triple(conjugate(a, parse_word(word)));
    }, py::arg("n"), py::arg("g"), py::arg("word"));

    m.def("word_length", [](int n, long long u, const py::int_& v, long long w) {
        return word_length(element(n, u, v, w));
    }, py::arg("n"), py::arg("u"), py::arg("v"), py::arg("w"),
       "Cayley-graph distance of t^-u a^v t^w from the identity");

    m.def("geodesic", [](int n, long long u, const py::int_& v, long long w) {
        GeodesicResult res = geodesic(element(n, u, v, w));
        py::dict d;
        d["length"] = res.length;
        d["word"] = format_word(res.word);
        d["shape"] = static_cast<int>(res.shape.tag);
        d["strict_shape_1"] = res.shape.strict1;
        d["vector"] = res.vector.digits;
        return d;
    }, py::arg("n"), py::arg("u"), py::arg("v"), py::arg("w"));

    m.def("sigma", [](int n, const std::vector<int>& digits) {
        return to_py(sigma(DigitVector(std::vector<int>(digits), n)));
    }, py::arg("n"), py::arg("digits"));

    m.def("initial_digits", [](int n, const py::int_& v) {
        return initial_digits(to_int(v), n).digits;
    }, py::arg("n"), py::arg("v"));

    m.def("minimal_vector", [](int n, long long u, const py::int_& v, long long w) {
        return minimal_vector(u, to_int(v), w, n).digits;
    }, py::arg("n"), py::arg("u"), py::arg("v"), py::arg("w"));

    m.def("is_minimal", [](int n, const std::vector<int>& digits, long long u, long long w) {
        return is_minimal(DigitVector(std::vector<int>(digits), n), u, w);
    }, py::arg("n"), py::arg("digits"), py::arg("u"), py::arg("w"));

    m.def("sphere_sizes", [](int n, int R, size_t cap) {
        Ball ball = bfs_ball(n, R, cap);
        std::vector<size_t> sizes;
        for (int r = 0; r <= R; ++r) sizes.push_back(sphere(ball, r).size());
        return sizes;
    }, py::arg("n"), py::arg("R"), py::arg("cap") = size_t{50'000'000});

    m.def("kappa", [](int n, long long u, const py::int_& v, long long w, int r) {
        SphereCache cache;
        return fraction(kappa(element(n, u, v, w), r, cache).kappa);
    }, py::arg("n"), py::arg("u"), py::arg("v"), py::arg("w"), py::arg("r") = 1,
       "exact conjugation curvature kappa_r as a Fraction");

    m.def("verify_family", [](const std::string& kind, int n, int r, const std::string& xi) {
        SphereCache cache;
        FamilyReport rep = verify_family_sign({kind_from(kind), n, r, parse_word(xi)}, cache);
        py::dict d;
        d["g"] = triple(rep.g);
        d["l_g"] = rep.l_g;
        d["kappa"] = fraction(rep.kappa_r);
        d["sign_ok"] = rep.sign_ok;
        return d;
    }, py::arg("kind"), py::arg("n"), py::arg("r"), py::arg("xi"));

    m.def("family_r_bound", [](const std::string& kind, int n) {
        return family_r_bound(kind_from(kind), n);
    }, py::arg("kind"), py::arg("n"));

    m.def("geodesic_counts", [](int n, int N) {
        return count_by_length(n == 2 ? build_O2() : build_strict1_acceptor(n), N);
    }, py::arg("n"), py::arg("N"),
       "number of accepted strict-shape-1 geodesic words per length");

    m.def("growth_rate", [](int n) {
        return growth_rate(n == 2 ? build_O2() : build_strict1_acceptor(n));
    }, py::arg("n"));

    m.def("sample_qn_word", [](int n, int len, uint64_t seed) -> py::object {
        Automaton q = restrict_to_Qn(n == 2 ? build_O2() : build_strict1_acceptor(n));
        std::mt19937_64 rng(seed);
        auto w = sample_word(q, len, rng);
        if (!w) return py::none();
        return py::str(format_word(*w));
    }, py::arg("n"), py::arg("len"), py::arg("seed") = 0);
}
