#pragma once

#include <string>
#include <vector>

namespace bw {

enum class Family { Symmetric, TypeA, TypeBC, TypeD, Type2D };

std::string family_name(Family f);

/// Symbol: pair of strictly increasing rows of non-negative integers, kept in
/// a canonical form. Canonicalization strips common leading zeros (dropping
/// one 0 from each row and decrementing the rest) and orients the longer row
/// first, breaking length ties lexicographically.
struct Symbol {
  std::vector<long> rowX, rowY;

  Symbol() = default;

  static Symbol from_rows(std::vector<long> x, std::vector<long> y);

  /// Validated but not canonicalized; for equivalence-invariance checks.
  static Symbol from_rows_raw(std::vector<long> x, std::vector<long> y);

  bool operator==(const Symbol& o) const { return rowX == o.rowX && rowY == o.rowY; }
  bool operator<(const Symbol& o) const {
    return rowX != o.rowX ? rowX < o.rowX : rowY < o.rowY;
  }

  bool degenerate() const { return !rowX.empty() && rowX == rowY; }

  /// "(x1 x2 | y1 y2)"; an empty row renders as "-".
  std::string to_string() const;
  static Symbol parse(const std::string& text);
};

struct RankDefect {
  long rank;
  long defect;
};

RankDefect rank_and_defect(const Symbol& s);

/// e-core: within a single row, repeatedly replace y by y - e when y - e is
/// absent from that row; canonicalize.
Symbol e_core_symbol(const Symbol& s, long e);

/// e-cocore: repeatedly remove y from one row and insert y - e into the other
/// row when absent there; canonicalize.
Symbol e_cocore_symbol(const Symbol& s, long e);

/// Trivial-character symbols: (n | -) for B/C, (n | 0) for D, (0 n | -) for 2D.
Symbol trivial_symbol(Family family, long n);

/// Defect residue test: odd for B/C, 0 mod 4 for D, 2 mod 4 for 2D.
bool family_defect_ok(const Symbol& s, Family family);

}  // namespace bw
