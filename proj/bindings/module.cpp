#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "lynsys/counting.hpp"
#include "lynsys/interval.hpp"
#include "lynsys/lyndon.hpp"
#include "lynsys/numeric.hpp"
#include "lynsys/order.hpp"
#include "lynsys/selfcheck.hpp"
#include "lynsys/word.hpp"

namespace py = pybind11;
using namespace lynsys;

namespace {

py::int_ big_int(const mpz_class& v) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

py::dict enclosure_dict(const PrecisionReal& x, unsigned digits = 24) {
    py::dict d;
    d["lo"] = decimal_string(x.lo, digits, true);
    d["hi"] = decimal_string(x.hi, digits, false);
    d["lo_exact"] = x.lo.get_str();
    d["hi_exact"] = x.hi.get_str();
    d["exact"] = x.is_point();
    return d;
}

mpq_class rational_from(const std::string& text) {
    mpq_class q;
    if (text.empty() || q.set_str(text, 10) != 0)
        throw std::domain_error("malformed rational '" + text + "'");
    q.canonicalize();
    return q;
}

BetaCertificate certificate_from(const std::string& base, unsigned bits) {
    if (base.find_first_not_of("0123456789/-") == std::string::npos && !base.empty())
        return BetaCertificate::from_rational(rational_from(base));
    return compute_beta(Word::parse(base), bits);
}

py::dict certificate_dict(const BetaCertificate& cert) {
    py::dict d = enclosure_dict(cert.enclosure());
    py::list coeffs;
    for (const mpz_class& a : cert.polynomial()) coeffs.append(big_int(a));
    d["polynomial"] = coeffs;
    d["polynomial_text"] = poly_string(cert.polynomial());
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "alternate-order Lyndon systems and (-beta)-expansions";

    m.def("normalize", [](const std::string& w) { return Word::parse(w).render(); },
          py::arg("word"), "normal form of a word literal");
    m.def("letter_at", [](const std::string& w, std::uint64_t i) {
              return Word::parse(w).letter_at(i);
          },
          py::arg("word"), py::arg("i"), "1-based letter of the zero-padded stream");
    m.def("shift", [](const std::string& w, std::uint64_t k) {
              return Word::parse(w).shifted(k).render();
          },
          py::arg("word"), py::arg("k"));
    m.def("compare", [](const std::string& x, const std::string& y) {
              OrderOutcome o = alt_compare(Word::parse(x), Word::parse(y));
              const char* rel = o.relation == Rel::Less      ? "LESS"
                                : o.relation == Rel::Greater ? "GREATER"
                                                             : "EQUAL";
              return py::make_tuple(rel, o.witness_index ? py::cast(*o.witness_index)
                                                         : py::none());
          },
          py::arg("x"), py::arg("y"), "alternate-order comparison with witness index");
    m.def("compare_with_fixed_point", [](const std::string& x) {
              OrderOutcome o = alt_compare_vs_phi_limit(Word::parse(x));
              const char* rel = o.relation == Rel::Less ? "LESS" : "GREATER";
              return py::make_tuple(rel, *o.witness_index);
          },
          py::arg("x"));

    m.def("phi_power", [](unsigned n) { return phi_power(n).render(); }, py::arg("n"));
    m.def("phi_prefix", [](std::uint64_t L) { return phi_limit_prefix(L); }, py::arg("length"));
    m.def("thue_morse_runlengths",
          [](std::uint64_t L) { return thue_morse_runlengths(L); }, py::arg("length"));

    m.def("classify", [](const std::string& w) {
              LyndonClass c = classify_lyndon(Word::parse(w));
              py::dict d;
              d["kind"] = c.kind == LyndonClass::Kind::Strong ? "strong"
                          : c.kind == LyndonClass::Kind::Weak ? "weak"
                                                              : "not-lyndon";
              d["index"] = c.index;
              return d;
          },
          py::arg("word"));
    m.def("dstar", [](const std::string& w) { return dstar(Word::parse(w)).render(); },
          py::arg("word"));
    m.def("rstar", [](const std::string& w) { return rstar(Word::parse(w)).render(); },
          py::arg("word"));
    m.def("lyn_witness", [](const std::string& w) -> py::object {
              LynSearch s = in_lyn(Word::parse(w));
              if (s.status == LynSearch::Status::Unknown)
                  throw std::domain_error("companion search exhausted its bound undecided");
              if (s.status == LynSearch::Status::None) return py::none();
              return py::cast(s.witness->render());
          },
          py::arg("word"), "weak companion word, or None");
    m.def("entropy_positive", [](const std::string& w) {
              return entropy_sign(Word::parse(w)).positive;
          },
          py::arg("word"));
    m.def("admissible", [](const std::string& w, unsigned bits) {
              AdmissibilityReport r = admissible(Word::parse(w), bits);
              py::dict d;
              d["admissible"] = r.admissible();
              d["cond_a"] = r.cond_a;
              d["cond_b"] = r.cond_b;
              d["cond_c"] = r.cond_c;
              d["lyn_witness"] =
                  r.lyn_witness ? py::cast(r.lyn_witness->render()) : py::object(py::none());
              d["beta"] = r.beta ? py::object(certificate_dict(*r.beta)) : py::object(py::none());
              return d;
          },
          py::arg("word"), py::arg("bits") = kDefaultPrecisionBits);

    m.def("hn", [](const std::string& w, std::uint64_t n) {
              CountTable t = count_recurrence(Word::parse(w), n);
              py::list out;
              for (const mpz_class& v : t.values) out.append(big_int(v));
              return out;
          },
          py::arg("word"), py::arg("n"), "exact language counts H_0..H_n");
    m.def("count_interval", [](const std::string& a, const std::string& b, const std::string& d) {
              return big_int(count_interval(Word::parse(a), Word::parse(b), Word::parse(d)));
          },
          py::arg("A"), py::arg("B"), py::arg("system"));
    m.def("enumerate_words", [](const std::string& d, std::uint64_t n, std::uint64_t cap) {
              py::list out;
              for (const Word& w : enumerate_language(Word::parse(d), n, cap))
                  out.append(w.render());
              return out;
          },
          py::arg("word"), py::arg("n"), py::arg("cap") = kEnumerationCap);

    m.def("beta", [](const std::string& w, unsigned bits) {
              return certificate_dict(compute_beta(Word::parse(w), bits));
          },
          py::arg("word"), py::arg("bits") = kDefaultPrecisionBits,
          "base attached to a positive-entropy Lyndon word");
    m.def("f_eval", [](const std::string& w, const std::string& beta, unsigned bits) {
              BetaCertificate cert = certificate_from(beta, bits);
              return enclosure_dict(f_beta(Word::parse(w), cert));
          },
          py::arg("word"), py::arg("beta"), py::arg("bits") = kDefaultPrecisionBits);
    m.def("expand", [](const std::string& x, const std::string& beta, std::uint64_t n,
                       unsigned bits) {
              BetaCertificate cert = certificate_from(beta, bits);
              ExpansionStart start;
              if (x == "l")
                  start = EndpointKeyword::Left;
              else if (x == "r")
                  start = EndpointKeyword::Right;
              else
                  start = rational_from(x);
              Expansion e = expand(start, cert, n);
              py::dict d;
              d["digits"] = e.digits;
              d["integer_digits"] = e.integer_digits;
              d["word"] = e.word ? py::cast(e.word->render()) : py::object(py::none());
              d["period_certified"] = e.period_certified;
              return d;
          },
          py::arg("x"), py::arg("beta"), py::arg("n") = 64,
          py::arg("bits") = kDefaultPrecisionBits,
          "digits of the (-beta)-expansion; x is a rational or 'l' / 'r'");
    m.def("gf_residual", [](const std::string& w, const std::string& z, std::uint64_t N) {
              return enclosure_dict(
                  check_generating_identity(Word::parse(w), rational_from(z), N));
          },
          py::arg("word"), py::arg("z"), py::arg("N") = 40);
    m.def("omega_check", [](unsigned n) { return check_omega_polynomial(n); }, py::arg("n"));

    m.def("run_acceptance", [](std::uint64_t seed) {
              std::ostringstream out;
              bool ok = run_acceptance({kDefaultPrecisionBits, seed}, out);
              return py::make_tuple(ok, out.str());
          },
          py::arg("seed") = 20260808, "full verification suite; returns (passed, report)");
}
