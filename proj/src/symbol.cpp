#include "blockwitness/symbol.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bw {

std::string family_name(Family f) {
  switch (f) {
    case Family::Symmetric: return "sn";
    case Family::TypeA: return "a";
    case Family::TypeBC: return "bc";
    case Family::TypeD: return "d";
    case Family::Type2D: return "2d";
  }
  return "?";
}

namespace {

void check_row(const std::vector<long>& row) {
  for (size_t i = 0; i < row.size(); ++i) {
    if (row[i] < 0) throw std::invalid_argument("MalformedSymbol");
    if (i > 0 && row[i] <= row[i - 1])
      throw std::invalid_argument("MalformedSymbol");
  }
}

void canonicalize(std::vector<long>& x, std::vector<long>& y) {
  while (!x.empty() && !y.empty() && x.front() == 0 && y.front() == 0) {
    x.erase(x.begin());
    y.erase(y.begin());
    for (long& v : x) --v;
    for (long& v : y) --v;
  }
  if (x.size() < y.size() || (x.size() == y.size() && y < x)) std::swap(x, y);
}

}  // namespace

Symbol Symbol::from_rows(std::vector<long> x, std::vector<long> y) {
  check_row(x);
  check_row(y);
  canonicalize(x, y);
  Symbol s;
  s.rowX = std::move(x);
  s.rowY = std::move(y);
  return s;
}

Symbol Symbol::from_rows_raw(std::vector<long> x, std::vector<long> y) {
  check_row(x);
  check_row(y);
  Symbol s;
  s.rowX = std::move(x);
  s.rowY = std::move(y);
  return s;
}

std::string Symbol::to_string() const {
  std::ostringstream out;
  out << "(";
  auto emit = [&](const std::vector<long>& row) {
    if (row.empty()) {
      out << "-";
      return;
    }
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out << " ";
      out << row[i];
    }
  };
  emit(rowX);
  out << " | ";
  emit(rowY);
  out << ")";
  return out.str();
}

Symbol Symbol::parse(const std::string& text) {
  std::string body = text;
  if (!body.empty() && body.front() == '(') body.erase(body.begin());
  if (!body.empty() && body.back() == ')') body.pop_back();
  auto bar = body.find('|');
  if (bar == std::string::npos)
    throw std::invalid_argument("MalformedSymbol");
  auto parse_row = [](const std::string& part) {
    std::vector<long> row;
    std::istringstream in(part);
    std::string tok;
    while (in >> tok) {
      if (tok == "-") continue;
      row.push_back(std::stol(tok));
    }
    return row;
  };
  return from_rows(parse_row(body.substr(0, bar)), parse_row(body.substr(bar + 1)));
}

RankDefect rank_and_defect(const Symbol& s) {
  long sum = 0;
  for (long v : s.rowX) sum += v;
  for (long v : s.rowY) sum += v;
  const long a = static_cast<long>(s.rowX.size());
  const long b = static_cast<long>(s.rowY.size());
  const long h = a + b - 1;
  const long correction = h >= 0 ? (h * h) / 4 : 0;
  return {sum - correction, a >= b ? a - b : b - a};
}

namespace {

// In-row push-down: each residue class mod e ends at the lowest positions.
std::vector<long> push_down(const std::vector<long>& row, long e) {
  std::vector<long> counts(static_cast<size_t>(e), 0);
  for (long v : row) ++counts[static_cast<size_t>(v % e)];
  std::vector<long> out;
  for (long rho = 0; rho < e; ++rho)
    for (long c = 0; c < counts[static_cast<size_t>(rho)]; ++c)
      out.push_back(rho + c * e);
  std::sort(out.begin(), out.end());
  return out;
}

bool contains(const std::vector<long>& row, long v) {
  return std::binary_search(row.begin(), row.end(), v);
}

}  // namespace

Symbol e_core_symbol(const Symbol& s, long e) {
  if (e < 1) throw std::invalid_argument("e_core_symbol: e must be >= 1");
  return Symbol::from_rows(push_down(s.rowX, e), push_down(s.rowY, e));
}

Symbol e_cocore_symbol(const Symbol& s, long e) {
  if (e < 1) throw std::invalid_argument("e_cocore_symbol: e must be >= 1");
  std::vector<long> x = s.rowX, y = s.rowY;
  for (;;) {
    canonicalize(x, y);
    // Smallest removable y across both rows, scanning rowX first.
    bool moved = false;
    for (int side = 0; side < 2 && !moved; ++side) {
      std::vector<long>& from = side == 0 ? x : y;
      std::vector<long>& to = side == 0 ? y : x;
      for (size_t i = 0; i < from.size(); ++i) {
        long v = from[i];
        if (v >= e && !contains(to, v - e)) {
          from.erase(from.begin() + static_cast<long>(i));
          to.insert(std::upper_bound(to.begin(), to.end(), v - e), v - e);
          moved = true;
          break;
        }
      }
    }
    if (!moved) break;
  }
  return Symbol::from_rows(std::move(x), std::move(y));
}

Symbol trivial_symbol(Family family, long n) {
  switch (family) {
    case Family::TypeBC:
      if (n < 3) throw std::domain_error("RankTooSmall");
      return Symbol::from_rows({n}, {});
    case Family::TypeD:
      if (n < 4) throw std::domain_error("RankTooSmall");
      return Symbol::from_rows({n}, {0});
    case Family::Type2D:
      if (n < 4) throw std::domain_error("RankTooSmall");
      return Symbol::from_rows({0, n}, {});
    default:
      throw std::invalid_argument("trivial_symbol: classical family required");
  }
}

bool family_defect_ok(const Symbol& s, Family family) {
  const long d = rank_and_defect(s).defect;
  switch (family) {
    case Family::TypeBC: return d % 2 == 1;
    case Family::TypeD: return d % 4 == 0;
    case Family::Type2D: return d % 4 == 2;
    default: return false;
  }
}

}  // namespace bw
