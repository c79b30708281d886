#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "abelcy/experiments.hpp"
#include "abelcy/heisenberg.hpp"
#include "abelcy/hilbert.hpp"
#include "abelcy/singular.hpp"
#include "abelcy/solve.hpp"

namespace py = pybind11;
using namespace abelcy;

namespace {

RingPtr make_ring(const std::string& spec, uint64_t prime) {
    return Ring::from_spec(spec, prime ? prime : default_experiment_prime());
}

py::dict hilbert_dict(const HilbertData& h) {
    py::dict d;
    d["dimension"] = h.dimension;
    d["degree"] = h.degree.str();
    if (h.sectional_genus) d["sectional_genus"] = h.sectional_genus->str();
    py::list hp;
    for (const auto& c : h.hp) {
        hp.append(py::str(numerator(c).str() +
                          (denominator(c) == 1 ? "" : "/" + denominator(c).str())));
    }
    d["hp"] = hp;
    return d;
}

py::dict report_dict(const ExperimentReport& r) {
    py::dict d;
    d["case"] = r.case_tag;
    d["prime"] = r.prime;
    d["seed"] = r.seed;
    d["ok"] = r.ok();
    py::list claims;
    for (const auto& c : r.claims) {
        py::dict jc;
        jc["id"] = c.id;
        jc["paper_ref"] = c.paper_ref;
        jc["expected"] = c.expected;
        jc["computed"] = c.computed;
        jc["status"] = to_string(c.status);
        jc["negative_control"] = c.negative_control;
        jc["attempts"] = c.attempts;
        jc["millis"] = c.millis;
        claims.append(std::move(jc));
    }
    d["claims"] = claims;
    return d;
}

}  // namespace

PYBIND11_MODULE(_abelcy, m) {
    m.doc() = "exact computational algebra for Heisenberg-invariant Calabi-Yau threefolds";

    py::register_exception<Error>(m, "AbelcyError");

    m.def("default_prime", &default_experiment_prime,
          "smallest prime p > 10^4 with p = 1 (mod 840)");

    py::class_<Ring, RingPtr>(m, "Ring")
        .def_static("make", &make_ring, py::arg("spec"), py::arg("prime") = 0,
                    "ring from a spec string such as 'Fp[x0..x7]' or 'Q[x0,x1,x2]'")
        .def_property_readonly("nvars", &Ring::nvars)
        .def_property_readonly("names", [](const Ring& r) { return r.names(); })
        .def("__repr__", [](const Ring& r) {
            std::string s = r.field().is_prime_field()
                                ? "F" + std::to_string(r.field().modulus())
                                : "Q";
            s += "[";
            for (int i = 0; i < r.nvars(); ++i) s += (i ? "," : "") + r.name(i);
            return s + "]";
        });

    py::class_<Polynomial>(m, "Polynomial")
        .def_static("parse", &Polynomial::parse, py::arg("text"), py::arg("ring"))
        .def("__str__", &Polynomial::format)
        .def("__repr__", &Polynomial::format)
        .def("__add__", &Polynomial::operator+)
        .def("__sub__", static_cast<Polynomial (Polynomial::*)(const Polynomial&) const>(
                            &Polynomial::operator-))
        .def("__mul__", static_cast<Polynomial (Polynomial::*)(const Polynomial&) const>(
                            &Polynomial::operator*))
        .def("__eq__", &Polynomial::operator==)
        .def("__neg__", static_cast<Polynomial (Polynomial::*)() const>(&Polynomial::operator-))
        .def_property_readonly("degree", &Polynomial::degree)
        .def_property_readonly("nterms", &Polynomial::nterms)
        .def("is_zero", &Polynomial::is_zero)
        .def("partial", &Polynomial::partial, py::arg("var"))
        .def("ring", &Polynomial::ring);

    m.def(
        "groebner",
        [](const std::vector<Polynomial>& gens, size_t max_pairs) {
            if (gens.empty()) throw BadParameter("empty generator list");
            Budget b;
            b.max_pairs = max_pairs;
            auto G = buchberger(Ideal(gens[0].ring(), gens), b);
            return G.basis();
        },
        py::arg("gens"), py::arg("max_pairs") = (size_t)4000000,
        "reduced Groebner basis (grevlex) of a homogeneous ideal");

    m.def(
        "hilbert",
        [](const std::vector<Polynomial>& gens, size_t max_pairs) {
            if (gens.empty()) throw BadParameter("empty generator list");
            Budget b;
            b.max_pairs = max_pairs;
            auto G = buchberger(Ideal(gens[0].ring(), gens), b);
            return hilbert_dict(hilbert(G));
        },
        py::arg("gens"), py::arg("max_pairs") = (size_t)4000000,
        "projective dimension, degree and Hilbert polynomial data");

    m.def(
        "normal_form",
        [](const Polynomial& f, const std::vector<Polynomial>& gens) {
            if (gens.empty()) throw BadParameter("empty generator list");
            auto G = buchberger(Ideal(gens[0].ring(), gens));
            return normal_form(f, G);
        },
        py::arg("f"), py::arg("gens"));

    m.def(
        "singular_scheme",
        [](const std::vector<Polynomial>& gens, size_t codim, size_t max_minors, bool sample,
           uint64_t seed) {
            if (gens.empty()) throw BadParameter("empty generator list");
            SingularOptions so;
            so.max_minors = max_minors;
            so.allow_sampling = sample;
            so.seed = seed;
            auto S = singular_scheme(Ideal(gens[0].ring(), gens), codim, so);
            py::dict d = hilbert_dict(S.hilbert);
            d["minors_used"] = S.minors_used;
            d["minor_count_total"] = S.minor_count_total;
            d["sampled"] = S.sampled;
            return d;
        },
        py::arg("gens"), py::arg("codim"), py::arg("max_minors") = (size_t)400,
        py::arg("sample") = false, py::arg("seed") = (uint64_t)1,
        "measure the Jacobian singular scheme of a homogeneous ideal");

    m.def(
        "moore_matrix",
        [](int d, const RingPtr& ring, const std::vector<Polynomial>& ys) {
            auto xs = coordinate_vector(ring);
            auto M = moore_even(d, xs, ys);
            std::vector<std::vector<Polynomial>> rows;
            for (size_t i = 0; i < M.rows(); ++i) {
                std::vector<Polynomial> row;
                for (size_t j = 0; j < M.cols(); ++j) row.push_back(M.at(i, j));
                rows.push_back(std::move(row));
            }
            return rows;
        },
        py::arg("d"), py::arg("ring"), py::arg("ys"));

    m.def(
        "invariant_basis",
        [](const std::string& tag, const RingPtr& ring) {
            auto nb = invariant_basis(tag, ring);
            py::dict d;
            for (size_t i = 0; i < nb.names.size(); ++i)
                d[py::str(nb.names[i])] = nb.polys[i];
            return d;
        },
        py::arg("tag"), py::arg("ring"),
        "named invariant polynomials; tags 1_6, 1_8, 1_10, klein");

    m.def(
        "identity_suite",
        [](uint64_t seed) {
            Config cfg;
            cfg.seed = seed;
            return report_dict(identity_suite(cfg));
        },
        py::arg("seed") = (uint64_t)1, "the nine exact symbolic identities over Q");

    m.def(
        "run_case",
        [](const std::string& tag, uint64_t prime, uint64_t seed, int retries, bool force,
           const std::string& cache_dir) {
            Config cfg;
            cfg.prime = prime;
            cfg.seed = seed;
            cfg.retry_budget = retries;
            cfg.force = force;
            cfg.cache_dir = cache_dir;
            return report_dict(run_case(tag, cfg));
        },
        py::arg("tag"), py::arg("prime") = (uint64_t)0, py::arg("seed") = (uint64_t)1,
        py::arg("retries") = 5, py::arg("force") = false, py::arg("cache_dir") = std::string(),
        "run one verification case (1_4, 1_5, 1_6, 1_7, 1_8, 1_10)");

    m.def("case_tags", [] { return case_tags(); });
}
