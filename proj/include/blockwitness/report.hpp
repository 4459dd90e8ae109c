#pragma once

#include <string>

#include "blockwitness/conjectures.hpp"
#include "blockwitness/witness.hpp"

namespace bw {

/// One JSON object per line, fields in the fixed order
/// family, n, p, q, ell_f, case, object, degree, checks, status.
std::string to_json_line(const WitnessReport& rep);
std::string to_json_line(const ScanRow& row);

}  // namespace bw
