#include "blockwitness/report.hpp"

#include <nlohmann/json.hpp>

namespace bw {

namespace {

using json = nlohmann::ordered_json;

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Unsupported: return "UNSUPPORTED";
  }
  return "?";
}

}  // namespace

std::string to_json_line(const WitnessReport& rep) {
  json j;
  j["family"] = family_name(rep.family);
  j["n"] = rep.n;
  j["p"] = rep.p;
  j["q"] = rep.second_prime;
  if (rep.q)
    j["ell_f"] = rep.q->to_string();
  else
    j["ell_f"] = nullptr;
  j["case"] = case_name(rep.case_label);
  j["object"] = rep.object;
  j["degree"] = rep.degree;
  json checks = json::object();
  for (const auto& [name, ok] : rep.checks) checks[name] = ok;
  j["checks"] = checks;
  j["status"] = status_name(rep.status);
  return j.dump();
}

std::string to_json_line(const ScanRow& row) {
  json j;
  const char* kind = row.kind == ConjectureKind::A   ? "a"
                     : row.kind == ConjectureKind::B ? "b"
                                                     : "c";
  j["conjecture"] = kind;
  j["n"] = row.n;
  j["p"] = row.p;
  j["q"] = row.q;
  j["size_p"] = row.size_p;
  j["size_q"] = row.size_q;
  j["size_intersection"] = row.size_intersection;
  j["sample_witness"] = row.sample_witness;
  switch (row.kind) {
    case ConjectureKind::A:
      j["intersection_trivial"] = row.flag_primary;
      break;
    case ConjectureKind::B:
      j["sets_equal"] = row.flag_primary;
      break;
    case ConjectureKind::C:
      j["q_divides_some_p_side"] = row.flag_primary;
      j["p_divides_some_q_side"] = row.flag_secondary;
      break;
  }
  return j.dump();
}

}  // namespace bw
