#pragma once

#include "cbgon/schemes.hpp"
#include "oracle.hpp"

#include <vector>

inline oracle::Row residues(const cbgon::ProjectivePoint& p) {
  oracle::Row r;
  for (const auto& c : p.coords()) r.push_back(c.residue());
  return r;
}

inline std::vector<oracle::Row> residues(const std::vector<cbgon::ProjectivePoint>& pts) {
  std::vector<oracle::Row> out;
  for (const auto& p : pts) out.push_back(residues(p));
  return out;
}

inline cbgon::ProjectivePoint point(cbgon::Field f, std::vector<long long> c) {
  return cbgon::ProjectivePoint::from_integers(f, c);
}

inline std::vector<oracle::Row> matrix_rows(const cbgon::Matrix& m) {
  std::vector<oracle::Row> out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    oracle::Row row;
    for (const auto& x : m.row(r)) row.push_back(x.residue());
    out.push_back(row);
  }
  return out;
}
