#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "blockwitness/arith.hpp"
#include "blockwitness/partition.hpp"
#include "blockwitness/symbol.hpp"

namespace bw {

/// Parameters fixing a principal block: family, rank, prime, and for the
/// classical types the prime power q with the derived e and core/cocore branch.
struct BlockContext {
  Family family;
  long n;
  long p;
  std::optional<PrimePower> q;
  long e;
  Branch branch;

  static BlockContext symmetric(long n, long p);
  static BlockContext classical(Family family, long n, long p, const PrimePower& q);
};

/// Nakayama criterion: same p-core as the trivial character (n).
bool principal_block_Sn(const Partition& la, long p);

/// All la of n in the principal p-block with p'-degree.
std::vector<Partition> irr_pprime_principal_Sn(long n, long p);

/// Type A criterion: e-core equal to (r), n = me + r.
bool principal_block_typeA(const Partition& la, long e);

/// Classical criterion via e-cores/e-cocores against the trivial symbol;
/// every unipotent character lies in the principal 2-block.
bool principal_block_classical(const Symbol& s, const BlockContext& ctx);

/// S_n-level intersection data restricted to A_n: non-self-conjugate pairs
/// {la, la'} (one A_n character each) plus self-conjugate partitions whose
/// A_n behavior is left indeterminate.
struct AnIntersection {
  std::vector<std::pair<Partition, Partition>> pairs;
  std::vector<Partition> indeterminate;
};

AnIntersection an_intersection(long n, long p, long q);

}  // namespace bw
