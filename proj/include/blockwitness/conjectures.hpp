#pragma once

#include <vector>

#include "blockwitness/blocks.hpp"
#include "blockwitness/witness.hpp"

namespace bw {

/// Exhaustive intersection Irr_{p'}(B_p(S_n)) /\ Irr_{q'}(B_q(S_n)).
std::vector<Partition> oracle_intersection_Sn(long n, long p, long q);

/// Membership test against the same predicate that defines the oracle set.
bool oracle_intersection_member(const Partition& la, long n, long p, long q);

enum class ConjectureKind { A, B, C };

/// One scan row for a (n, p, q) triple.
struct ScanRow {
  ConjectureKind kind;
  long n, p, q;
  long size_p, size_q, size_intersection;
  std::string sample_witness;  // smallest nontrivial member, "" if none
  // kind A: intersection == {(n)}; kind B: the two p'-sets are equal;
  // kind C: q divides some degree on the p side / p divides some on the q side
  bool flag_primary = false;
  bool flag_secondary = false;
};

struct ScanOptions {
  long n_min = 2, n_max = 10;
  enum class Pairs { With2, Odd, All } pairs = Pairs::With2;
  int threads = 1;
};

std::vector<ScanRow> scan_conjectures(ConjectureKind kind, const ScanOptions& opt);

/// Type A witness cross-validation: 2- and p-adic valuations of the q-analog
/// degree against the displayed pi-part expression, plus block membership.
WitnessReport cross_validate_typeA(long n, const PrimePower& q, long p, int eps = 1);

}  // namespace bw
