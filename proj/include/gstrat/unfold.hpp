#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gstrat/iso.hpp"
#include "gstrat/space.hpp"

namespace gstrat {

/// One elementary unfolding: the non-minimal strata survive with their
/// links, isolated (minimal and maximal) strata are emitted twice, and every
/// other minimal stratum is blown away.
struct UnfoldStep {
  StratSpace source;
  StratSpace result;
  std::vector<std::size_t> provenance;  // result index -> source index
  std::vector<std::size_t> duplicated;  // source indices emitted twice
};

UnfoldStep elementary_unfold(const StratSpace& x);

struct UnfoldChain {
  std::vector<UnfoldStep> steps;
  std::vector<std::size_t> total_provenance;  // final index -> original index

  /// Final space; `original` when there are no steps.
  const StratSpace& result(const StratSpace& original) const {
    return steps.empty() ? original : steps.back().result;
  }
};

/// Iterates the elementary unfolding depth(x) times.
UnfoldChain unfold_all(const StratSpace& x);

/// elementary_unfold(X/K) against elementary_unfold(X)/K.
std::optional<SpaceIso> check_unfold_quotient_commutes(const StratSpace& x, const Subgroup& k);
/// unfold_all(X/K) against unfold_all(X)/K.
std::optional<SpaceIso> check_unfold_all_quotient_commutes(const StratSpace& x,
                                                          const Subgroup& k);

}  // namespace gstrat
