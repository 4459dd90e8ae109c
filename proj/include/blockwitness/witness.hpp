#pragma once

#include <map>
#include <optional>
#include <string>

#include "blockwitness/arith.hpp"
#include "blockwitness/blocks.hpp"
#include "blockwitness/partition.hpp"
#include "blockwitness/symbol.hpp"

namespace bw {

enum class CaseLabel { I, IIa, IIb, IIc, SteinbergSuffices, Unsupported };

std::string case_name(CaseLabel c);

/// Case of the 2-adic frame analysis for n = m*e + r, with the second frame
/// attached when the IIc threshold applies.
struct CaseData {
  CaseLabel label;
  long n, e, p, m, r;
  TwoAdicFrame frame;
  std::optional<SecondFrame> second;
};

/// Classifies n = m*e + r into case I / IIa / IIb / IIc. For symmetric groups
/// e = p. Requires m >= 1; the symmetric-group reduction additionally requires
/// n even when r >= 1.
CaseData classify_case(Family family, long n, long e, long p);

/// Table 5 witness for S_n (p odd, n = mp + r, n even when r >= 1).
Partition witness_partition_Sn(long n, long p);

/// In-text witness partitions for GL/GU_n, r >= 2.
Partition witness_partition_typeA(long n, long e, long p);

/// Witness symbol from Tables 1-3, or a marker that the Steinberg character
/// already works, or Unsupported where the text gives no explicit symbol.
struct SymbolWitness {
  CaseLabel label;  // the case the symbol instantiates, or the marker labels
  std::optional<Symbol> symbol;
  bool template_degenerate = false;  // duplicate entries for these parameters
};

SymbolWitness witness_symbol(Family family, long n, long e, Branch branch,
                             bool m_odd, long p);

/// Exact pi-part carrier of a witness degree: an integer ratio for S_n, a
/// Psi-product for types A and B/C. D and 2D have no displayed expression.
struct PiPart {
  bool numeric = false;
  Rat ratio;     // when numeric
  PsiExpr expr;  // otherwise
};

PiPart pi_part_sn(long n, long p);
PsiExpr pi_part_typeA(long n, long e, long p, int eps);
PsiExpr pi_part_bc(long n, long e, Branch branch, bool m_odd, long p);

enum class Status { Pass, Fail, Unsupported };

struct WitnessReport {
  Family family;
  long n = 0;
  long p = 0;
  long second_prime = 2;
  std::optional<PrimePower> q;
  CaseLabel case_label = CaseLabel::Unsupported;
  std::string object;
  std::string degree;  // decimal string, or "" when out of scope
  std::map<std::string, bool> checks;
  Status status = Status::Unsupported;
};

/// Builds and verifies one witness character. For classical families q is the
/// defining prime power; eps picks GL (+1) vs GU (-1) in type A.
WitnessReport verify_witness(Family family, long n, long p,
                             const std::optional<PrimePower>& q, int eps = 1);

}  // namespace bw
