#pragma once

#include <ostream>

namespace bw {

/// Runs the built-in invariant battery, printing one line per suite.
/// Returns true when every suite passes. quick shrinks the grids.
bool run_selftest(std::ostream& out, bool quick);

}  // namespace bw
