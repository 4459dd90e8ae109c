#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blockwitness/arith.hpp"

namespace bw {

/// Partition of a non-negative integer: weakly decreasing positive parts.
struct Partition {
  std::vector<long> parts;

  Partition() = default;
  explicit Partition(std::vector<long> p);

  long size() const;
  bool empty() const { return parts.empty(); }
  bool operator==(const Partition& o) const { return parts == o.parts; }
  bool operator<(const Partition& o) const { return parts < o.parts; }

  /// Compressed form, e.g. "(2,1^10)"; the empty partition prints "()".
  std::string to_string() const;
};

/// All partitions of n in reverse-lexicographic order: (n) first, (1^n) last.
std::vector<Partition> enumerate_partitions(long n);

Partition conjugate(const Partition& la);

/// Hook lengths of all cells, unsorted row by row.
std::vector<long> hook_multiset(const Partition& la);

/// |la|! / prod(hooks): the S_n character degree.
Int degree_Sn(const Partition& la);

/// p-adic valuation of degree_Sn(la), via Legendre's formula on n! and the
/// hook multiset; avoids forming the degree itself.
long degree_valuation_Sn(const Partition& la, long p);

/// First-column hook lengths padded to length len (beta-set).
std::vector<long> beta_set(const Partition& la, long len);
Partition partition_from_beta_set(std::vector<long> beta);

Partition e_core(const Partition& la, long e);

/// 2-adic digit frame of n relative to a remainder r: digits a_1 < ... < a_t
/// with n = sum 2^{a_i}, t0 minimal with r < 2^{a_{t0}}, T the sum of the
/// digits from t0 up, and a = n - T + 1.
struct TwoAdicFrame {
  std::vector<long> digits;
  long t0;  // 0-based index into digits
  long T;
  long a;
};

TwoAdicFrame two_adic_frame(long n, long r);

struct SecondFrame {
  long s0;  // 0-based index into the digit list of n
  long S;
  long b;
};

/// Same construction at threshold e + r < 2^{a_{s0}}.
SecondFrame second_frame(long n, long r, long e);

/// Unipotent character degree for GL_n(q) (eps = +1) or GU_n(q) (eps = -1):
/// |q^{n(la)} prod_{i=1}^{n}(q^i - eps^i) / prod_{cells}(q^h - eps^h)|.
Int unipotent_degree_glu(const Partition& la, const PrimePower& q, int eps);

/// n(la) = sum (i-1) la_i.
long partition_n_stat(const Partition& la);

}  // namespace bw
