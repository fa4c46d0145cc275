// Python bindings for the main engine operations.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "skein/json_io.hpp"

namespace py = pybind11;
using namespace skein;

namespace {

const LaurentRing Z;
const FracRing F;

py::dict cert_to_dict(const HH0Certificate& cert) {
  py::dict d;
  d["verdict"] = to_string(cert.verdict);
  if (cert.verdict == HH0Verdict::Zero) {
    py::list comb;
    for (const auto& term : cert.combination) {
      py::dict t;
      t["coeff"] = term.coeff.str();
      t["m1"] = term.m1.word();
      t["m2"] = term.m2.word();
      comb.append(t);
    }
    d["combination"] = comb;
  }
  if (cert.verdict == HH0Verdict::Nonzero) {
    py::dict img;
    for (const auto& [m, v] : cert.commutative_image)
      img[py::str(m.word().empty() ? "1" : m.word())] = v.str();
    d["q1_image"] = img;
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact Kauffman-bracket / stated-skein calculus";

  m.def("nf", [](const std::string& word) { return nf(Z, word).str(); },
        py::arg("word"), "PBW normal form of a word in a,b,c,d");

  m.def("nf_terms", [](const std::string& word) {
    py::list out;
    for (const auto& [mono, c] : nf(Z, word).terms) {
      py::dict t;
      t["family"] = mono.family == PBWFamily::A ? "A" : "D";
      t["i"] = mono.i;
      t["j"] = mono.j;
      t["k"] = mono.k;
      t["coeff"] = c.str();
      out.append(t);
    }
    return out;
  });

  m.def("quantum_int", [](long n) { return HalfLaurent::quantum_int(n).str(); });

  m.def("catalan_dim", [](int n) {
    return enumerate_matchings(n).size();
  }, py::arg("n"), "number of planar matchings of TL_n");

  m.def("jones_wenzl_terms", [](int n) {
    return jones_wenzl(F, n).terms.size();
  }, py::arg("n"));

  m.def("jones_wenzl_idempotent", [](int n) {
    auto f = jones_wenzl(F, n);
    return tl_mul(F, f, f) == f;
  }, py::arg("n"));

  m.def("closure_is_chebyshev", [](int n) {
    auto closed = annulus_closure(F, jones_wenzl(F, n));
    auto expect = cheb_S(n).map_coeffs<LaurentFrac>(
        [](const Integer& c) { return LaurentFrac(HalfLaurent(c)); });
    return closed == expect;
  }, py::arg("n"));

  m.def("check_uvkm", &verify::check_uvkm, py::arg("k"), py::arg("m"));
  m.def("check_uvkm_stated", &verify::check_uvkm_stated, py::arg("k"), py::arg("m"));

  m.def("coproduct", [](const std::string& word) {
    auto d = coproduct(Z, nf(Z, word));
    py::list out;
    for (const auto& [mm, c] : d.terms) {
      py::dict t;
      t["left"] = mm.first.word().empty() ? "1" : mm.first.word();
      t["right"] = mm.second.word().empty() ? "1" : mm.second.word();
      t["coeff"] = c.str();
      out.append(t);
    }
    return out;
  }, py::arg("word"));

  m.def("counit", [](const std::string& word) { return counit(Z, nf(Z, word)).str(); });
  m.def("antipode", [](const std::string& word) { return antipode(Z, nf(Z, word)).str(); });

  m.def("evaluate_tangle", [](const std::string& tangle_json) {
    auto t = stated_tangle_from_json(json::parse(tangle_json));
    return evaluate(Z, t).str();
  }, py::arg("tangle_json"), "evaluate a stated tangle given as JSON");

  m.def("tau", [](const std::string& word, long degree) {
    return cert_to_dict(tau(nf(Z, word), degree));
  }, py::arg("word"), py::arg("degree") = 2);

  m.def("tau_torsion_pair", [](long degree) {
    auto ab = nf(Z, "ab");
    auto x = ab.scaled(HalfLaurent::q_power(4) - HalfLaurent(1));
    py::dict d;
    d["q2_minus_1_ab"] = cert_to_dict(tau(x, degree));
    d["ab"] = cert_to_dict(tau(ab, degree));
    return d;
  }, py::arg("degree") = 2);

  m.def("core_loop", []() {
    auto r = core_loop_value();
    py::dict d;
    d["bigon_value"] = r.bigon_value.str();
    d["certificate"] = cert_to_dict(r.certificate);
    return d;
  });

  m.def("disk_annihilator", []() {
    py::list out;
    for (const auto& g : disk_annihilator(Z)) out.append(g.str());
    return out;
  });

  m.def("threading", [](int k, long N) {
    py::list out;
    auto p = verify::threading(k, N);
    for (long i = 0; i <= p.degree(); ++i)
      out.append(p.coeff(static_cast<size_t>(i)).str());
    return out;
  }, py::arg("k"), py::arg("N"));

  m.def("sphere_slide", [](long m_order, int kmax) {
    auto rep = verify::sphere_slide_chain(m_order, kmax);
    py::dict d;
    d["N"] = rep.N;
    d["left_vanishes"] = rep.left_vanishes;
    d["right_nonzero"] = rep.right_nonzero;
    d["derivation_ok"] = rep.derivation_ok;
    d["certificate"] = rep.certificate;
    return d;
  }, py::arg("m_order"), py::arg("kmax") = 10);

  m.def("verify", [](const std::vector<std::string>& names,
                     const std::vector<long>& cyclo, int kmax, long degree) {
    verify::Options opt;
    if (!cyclo.empty()) opt.cyclo_orders = cyclo;
    opt.kmax = kmax;
    opt.degree = degree;
    auto res = names.empty() ? verify::run_all(opt)
                             : verify::run_selected(opt, names);
    py::list out;
    for (const auto& r : res) {
      py::dict d;
      d["name"] = r.name;
      d["passed"] = r.passed;
      d["details"] = r.details;
      d["wall_ms"] = r.ms;
      out.append(d);
    }
    return out;
  }, py::arg("names") = std::vector<std::string>{},
     py::arg("cyclo") = std::vector<long>{16, 24, 40},
     py::arg("kmax") = 10, py::arg("degree") = 2);

  m.def("check_names", &verify::check_names);
}
