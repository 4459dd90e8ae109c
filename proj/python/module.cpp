#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "blockwitness/report.hpp"
#include "blockwitness/selftest.hpp"

#include <sstream>

namespace py = pybind11;
using namespace bw;

namespace {

py::object big_int(const Int& v) {
  // round-trip through decimal to keep arbitrary precision
  return py::module_::import("builtins").attr("int")(v.get_str());
}

py::dict report_dict(const WitnessReport& rep) {
  py::dict d;
  d["family"] = family_name(rep.family);
  d["n"] = rep.n;
  d["p"] = rep.p;
  d["q"] = rep.second_prime;
  d["ell_f"] = rep.q ? py::object(py::str(rep.q->to_string())) : py::none();
  d["case"] = case_name(rep.case_label);
  d["object"] = rep.object;
  d["degree"] = rep.degree;
  py::dict checks;
  for (const auto& [name, ok] : rep.checks) checks[py::str(name)] = ok;
  d["checks"] = checks;
  d["status"] = rep.status == Status::Pass   ? "PASS"
                : rep.status == Status::Fail ? "FAIL"
                                             : "UNSUPPORTED";
  return d;
}

Family parse_family(const std::string& name) {
  if (name == "sn") return Family::Symmetric;
  if (name == "gl" || name == "gu" || name == "a") return Family::TypeA;
  if (name == "bc") return Family::TypeBC;
  if (name == "d") return Family::TypeD;
  if (name == "2d") return Family::Type2D;
  throw std::invalid_argument("unknown family: " + name);
}

}  // namespace

PYBIND11_MODULE(_blockwitness, m) {
  m.doc() = "exact partition/symbol combinatorics and principal-block witnesses";

  m.def("enumerate_partitions", [](long n) {
    std::vector<std::vector<long>> out;
    for (const Partition& la : enumerate_partitions(n)) out.push_back(la.parts);
    return out;
  });
  m.def("conjugate",
        [](const std::vector<long>& la) { return conjugate(Partition(la)).parts; });
  m.def("hook_multiset",
        [](const std::vector<long>& la) { return hook_multiset(Partition(la)); });
  m.def("degree_sn",
        [](const std::vector<long>& la) { return big_int(degree_Sn(Partition(la))); });
  m.def("degree_valuation_sn", [](const std::vector<long>& la, long p) {
    return degree_valuation_Sn(Partition(la), p);
  });
  m.def("e_core",
        [](const std::vector<long>& la, long e) { return e_core(Partition(la), e).parts; });
  m.def("unipotent_degree_glu", [](const std::vector<long>& la, long q, int eps) {
    return big_int(unipotent_degree_glu(Partition(la), PrimePower::from_value(q), eps));
  });

  m.def("multiplicative_order",
        [](long mv, long mod) { return multiplicative_order(Int(mv), Int(mod)); });
  m.def("d_p", [](long mv, long p) { return d_p(Int(mv), p); });
  m.def("phi_value", [](long d, long q) { return big_int(phi_value(d, Int(q))); });

  m.def("symbol_rank_defect", [](const std::string& text) {
    auto rd = rank_and_defect(Symbol::parse(text));
    return py::make_tuple(rd.rank, rd.defect);
  });
  m.def("symbol_e_core", [](const std::string& text, long e) {
    return e_core_symbol(Symbol::parse(text), e).to_string();
  });
  m.def("symbol_e_cocore", [](const std::string& text, long e) {
    return e_cocore_symbol(Symbol::parse(text), e).to_string();
  });
  m.def("trivial_symbol", [](const std::string& family, long n) {
    return trivial_symbol(parse_family(family), n).to_string();
  });

  m.def("principal_block_sn", [](const std::vector<long>& la, long p) {
    return principal_block_Sn(Partition(la), p);
  });
  m.def("irr_pprime_principal_sn", [](long n, long p) {
    std::vector<std::vector<long>> out;
    for (const Partition& la : irr_pprime_principal_Sn(n, p)) out.push_back(la.parts);
    return out;
  });
  m.def("oracle_intersection_sn", [](long n, long p, long q) {
    std::vector<std::vector<long>> out;
    for (const Partition& la : oracle_intersection_Sn(n, p, q)) out.push_back(la.parts);
    return out;
  });

  m.def("witness_partition_sn",
        [](long n, long p) { return witness_partition_Sn(n, p).parts; });
  m.def(
      "verify_witness",
      [](const std::string& family, long n, long p, py::object q, int eps) {
        std::optional<PrimePower> qq;
        if (!q.is_none()) qq = PrimePower::from_value(q.cast<long>());
        return report_dict(verify_witness(parse_family(family), n, p, qq, eps));
      },
      py::arg("family"), py::arg("n"), py::arg("p"), py::arg("q") = py::none(),
      py::arg("eps") = 1);

  m.def("selftest", [](bool quick) {
    std::ostringstream out;
    bool ok = run_selftest(out, quick);
    return py::make_tuple(ok, out.str());
  });
}
