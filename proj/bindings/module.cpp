#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wicksos/average.hpp"
#include "wicksos/certify.hpp"
#include "wicksos/expr.hpp"
#include "wicksos/fock.hpp"
#include "wicksos/json_io.hpp"
#include "wicksos/reduce.hpp"
#include "wicksos/wick.hpp"

namespace py = pybind11;
using namespace wicksos;

namespace {

Rat rat(const std::string& s) { return Rat::parse(s); }

Poly poly(const std::string& s, int n) { return parse_poly(s, n); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Wick star-product algebra, eigenspace reduction and "
              "sums-of-Hermitian-squares certificates. All scalars are exact "
              "rationals passed as strings like '3/2'.";

    py::register_exception<ParseError>(m, "ExprParseError", PyExc_ValueError);
    py::register_exception<SchemaError>(m, "SchemaError", PyExc_ValueError);
    py::register_exception<DesignNotFound>(m, "DesignNotFound", PyExc_RuntimeError);

    m.def("star", [](const std::string& f, const std::string& g, int n, const std::string& hbar) {
        return poly_str(wick_star(poly(f, n), poly(g, n), rat(hbar)));
    }, py::arg("f"), py::arg("g"), py::arg("n"), py::arg("hbar"));

    m.def("anti_star", [](const std::string& f, const std::string& g, int n, const std::string& hbar) {
        return poly_str(anti_wick_star(poly(f, n), poly(g, n), rat(hbar)));
    }, py::arg("f"), py::arg("g"), py::arg("n"), py::arg("hbar"));

    m.def("poisson", [](const std::string& f, const std::string& g, int n) {
        return poly_str(poisson(poly(f, n), poly(g, n)));
    }, py::arg("f"), py::arg("g"), py::arg("n"));

    m.def("theta", [](const std::string& f, int n, const std::string& hbar) {
        return poly_str(theta(poly(f, n), rat(hbar)));
    }, py::arg("f"), py::arg("n"), py::arg("hbar"));

    m.def("phi_sign", [](const std::string& f, int n, const std::string& hbar) {
        return poly_str(phi_sign(poly(f, n), rat(hbar)));
    }, py::arg("f"), py::arg("n"), py::arg("hbar"));

    m.def("conj", [](const std::string& f, int n) { return poly_str(poly(f, n).conj()); },
          py::arg("f"), py::arg("n"));

    m.def("grade", [](const std::string& f, int n, unsigned k, unsigned l) {
        return poly_str(poly(f, n).grade(k, l));
    }, py::arg("f"), py::arg("n"), py::arg("k"), py::arg("l"));

    m.def("momentum_map", [](int n) { return poly_str(momentum_map(n)); }, py::arg("n"));

    m.def("is_invariant", [](const std::string& f, int n) { return poly(f, n).is_invariant(); },
          py::arg("f"), py::arg("n"));

    m.def("evaluate", [](const std::string& f, int n, const std::vector<std::string>& w) {
        std::vector<GaussRat> pt;
        for (const auto& s : w) pt.push_back(GaussRat::parse(s));
        return poly(f, n).evaluate(pt).str();
    }, py::arg("f"), py::arg("n"), py::arg("point"));

    m.def("canonical", [](const std::string& f, int n) { return poly_str(poly(f, n)); },
          py::arg("f"), py::arg("n"));

    m.def("falling", [](const std::string& x, unsigned k) { return falling(rat(x), k).str(); },
          py::arg("x"), py::arg("k"));

    m.def("binom", [](unsigned long a, unsigned long b) { return binom(a, b).str(); },
          py::arg("a"), py::arg("b"));

    m.def("fock_inner", [](const std::string& f, const std::string& g, int n, const std::string& hbar) {
        return fock_inner(HoloPoly(poly(f, n)), HoloPoly(poly(g, n)), rat(hbar)).str();
    }, py::arg("f"), py::arg("g"), py::arg("n"), py::arg("hbar"));

    m.def("pi_apply", [](const std::string& f, const std::string& psi, int n, const std::string& hbar) {
        return poly_str(pi_apply(poly(f, n), HoloPoly(poly(psi, n)), rat(hbar)).poly());
    }, py::arg("f"), py::arg("psi"), py::arg("n"), py::arg("hbar"));

    m.def("pi_matrix", [](const std::string& f, int n, unsigned k, const std::string& hbar) {
        return fock_matrix_to_json(pi_matrix(poly(f, n), k, rat(hbar)));
    }, py::arg("f"), py::arg("n"), py::arg("k"), py::arg("hbar"));

    m.def("psd_check", [](const std::string& matrix_json) {
        return psd_result_to_json(psd_check(herm_matrix_from_json(matrix_json)));
    }, py::arg("matrix_json"));

    m.def("omega_level", [](const std::string& f, int n) { return omega_k(poly(f, n)).str(); },
          py::arg("f"), py::arg("n"));

    m.def("omega_state", [](const std::string& f, int n, const std::string& hbar, const std::string& mu) {
        return omega_hbar_mu(poly(f, n), rat(hbar), rat(mu)).str();
    }, py::arg("f"), py::arg("n"), py::arg("hbar"), py::arg("mu"));

    m.def("average", [](const std::string& f, int n) { return poly_str(average(poly(f, n))); },
          py::arg("f"), py::arg("n"));

    m.def("design_find", [](int n, unsigned strength, long norm_bound) {
        return design_to_json(design_find(n, strength, norm_bound));
    }, py::arg("n"), py::arg("m"), py::arg("norm_bound") = 10L);

    m.def("design_verify", [](const std::string& design_json) {
        return design_verify(design_from_json(design_json));
    }, py::arg("design_json"));

    m.def("ideal_member", [](const std::string& f, int n, const std::string& mu,
                             const std::string& hbar) -> py::object {
        auto h = ideal_member(poly(f, n), rat(mu), rat(hbar));
        if (!h) return py::none();
        return py::str(poly_str(*h));
    }, py::arg("f"), py::arg("n"), py::arg("mu"), py::arg("hbar"));

    m.def("normal_form", [](const std::string& f, int n, unsigned k, const std::string& hbar) {
        NormalForm nf = normal_form_at_level(poly(f, n), k, rat(hbar));
        return py::make_tuple(poly_str(nf.g), poly_str(nf.ideal_h), nf.supp.size());
    }, py::arg("f"), py::arg("n"), py::arg("k"), py::arg("hbar"));

    m.def("quad_check", [](const std::string& f, int n, const std::string& hbar, const std::string& mu) {
        QuadDecision d = quad_member(poly(f, n), rat(mu), rat(hbar));
        py::dict out;
        out["member"] = d.member;
        out["vacuous"] = d.vacuous;
        out["generic"] = d.generic;
        if (d.level) out["level"] = *d.level;
        if (d.psd && !d.psd->psd) {
            std::vector<std::string> w;
            for (const auto& e : d.psd->witness) w.push_back(e.str());
            out["witness"] = w;
            out["value"] = d.psd->witness_value.str();
        }
        return out;
    }, py::arg("f"), py::arg("n"), py::arg("hbar"), py::arg("mu"));

    m.def("psi_map", [](const std::string& f, int n, const std::string& hbar) {
        CpnPoly c = psi_map(poly(f, n), rat(hbar));
        return py::make_tuple(c.d, poly_str(c.rep));
    }, py::arg("f"), py::arg("n"), py::arg("hbar"));

    m.def("red_star", [](unsigned d1, const std::string& rep1, unsigned d2, const std::string& rep2,
                         int n, const std::string& hbar) {
        CpnPoly p{d1, poly(rep1, n)}, q{d2, poly(rep2, n)};
        CpnPoly r = red_star(p, q, n, rat(hbar));
        return py::make_tuple(r.d, poly_str(r.rep));
    }, py::arg("d1"), py::arg("rep1"), py::arg("d2"), py::arg("rep2"), py::arg("n"), py::arg("hbar"));

    m.def("classify", [](const std::string& hbar, int n) {
        HbarClass c = exceptional_hbar(rat(hbar), n);
        py::dict out;
        out["exceptional"] = c.exceptional;
        if (c.exceptional) {
            out["k"] = c.k;
            out["reduced_dim"] = c.reduced_dim.str();
        }
        return out;
    }, py::arg("hbar"), py::arg("n"));

    m.def("certify_minus_one", [](int n, const std::string& hbar, const std::string& mu, long norm_bound) {
        return certificate_to_json(certify_minus_one(n, rat(hbar), rat(mu), norm_bound));
    }, py::arg("n"), py::arg("hbar"), py::arg("mu"), py::arg("norm_bound") = 10L);

    m.def("certify_positive", [](const std::string& f, int n, const std::string& hbar,
                                 const std::string& mu, long norm_bound) {
        CertifyOutcome out = certify_positive(poly(f, n), rat(hbar), rat(mu), norm_bound);
        py::dict d;
        if (std::holds_alternative<Certificate>(out)) {
            d["status"] = "certificate";
            d["certificate"] = certificate_to_json(std::get<Certificate>(out));
        } else {
            const Refusal& r = std::get<Refusal>(out);
            d["status"] = "refusal";
            d["level"] = r.level;
            std::vector<std::string> w;
            for (const auto& e : r.witness) w.push_back(e.str());
            d["witness"] = w;
            d["value"] = r.value.str();
        }
        return d;
    }, py::arg("f"), py::arg("n"), py::arg("hbar"), py::arg("mu"), py::arg("norm_bound") = 10L);

    m.def("verify_certificate", [](const std::string& cert_json) {
        VerifyResult r = verify(certificate_from_json(cert_json));
        return py::make_tuple(r.ok, r.message);
    }, py::arg("cert_json"));
}
