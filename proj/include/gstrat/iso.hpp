#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gstrat/abelian.hpp"
#include "gstrat/space.hpp"

namespace gstrat {

/// Homomorphism given by the images of the standard generators e_i of the
/// source (e_i has a 1 in coordinate i).
class GroupMap {
 public:
  GroupMap(FiniteAbelianGroup source, FiniteAbelianGroup target,
           std::vector<GroupElement> images);

  static GroupMap identity(const FiniteAbelianGroup& g);

  const FiniteAbelianGroup& source() const noexcept { return source_; }
  const FiniteAbelianGroup& target() const noexcept { return target_; }
  const std::vector<GroupElement>& images() const noexcept { return images_; }

  GroupElement apply(const GroupElement& g) const;
  std::size_t apply_index(std::size_t i) const { return table_[i]; }
  Subgroup apply(const Subgroup& h) const;
  bool is_bijective() const;

  std::string to_string() const;

 private:
  FiniteAbelianGroup source_;
  FiniteAbelianGroup target_;
  std::vector<GroupElement> images_;
  std::vector<std::size_t> table_;
};

/// Calls `visit` on every isomorphism G -> H, identity first when the
/// moduli coincide, until `visit` returns true. Returns whether it did.
bool for_each_group_iso(const FiniteAbelianGroup& g, const FiniteAbelianGroup& h,
                        const std::function<bool(const GroupMap&)>& visit);

/// Witness of an equivariant isomorphism at poset level.
struct SpaceIso {
  std::vector<std::size_t> stratum_map;  // X index -> Y index
  std::optional<GroupMap> group_map;     // set on the root witness only
  std::vector<SpaceIso> links;           // per X stratum; empty map for regular strata

  std::string summary() const;
};

/// Searches for a stratum bijection preserving order, dimension, compactness
/// and (through a group isomorphism) every isotropy label, recursing into
/// links with attach maps carried along.
std::optional<SpaceIso> is_isomorphic(const StratSpace& x, const StratSpace& y);

/// Checks a witness against both spaces.
bool verify_iso(const StratSpace& x, const StratSpace& y, const SpaceIso& iso);

}  // namespace gstrat
