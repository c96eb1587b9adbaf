#pragma once

#include <optional>

#include "covercount/connectivity.hpp"
#include "covercount/fermat.hpp"

namespace covercount::testutil {

template <class F>
std::optional<errc> thrown_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline conn::Arrangement artal_arrangement(int b, int mu, std::uint64_t seed, int j1, int j2,
                                           int j3) {
  const auto cfg = fermat::ArtalFamilyConfig::make(b, mu, seed, j1, j2, j3);
  const auto F = fermat::artal_branch_curve(cfg);
  std::vector<geom::ProjectiveLine> lines;
  for (const auto& idx : cfg.line_triple) lines.push_back(fermat::tangent_line(idx));
  return conn::Arrangement{mono::WeightedBranchDivisor(b, {{F, 1}}), lines, {}};
}

inline conn::Arrangement artal_arrangement(int b, int mu, std::uint64_t seed) {
  return artal_arrangement(b, mu, seed, 1, 1, mu);
}

} // namespace covercount::testutil
