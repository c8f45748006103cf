#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gstrat/abelian.hpp"

namespace gstrat {

class StratSpace;
using SpacePtr = std::shared_ptr<const StratSpace>;

/// One stratum. Strata are addressed by their position in the owning
/// space; `name` is for display only.
struct Stratum {
  std::string name;
  int dim = 0;
  /// Subgroup of the top acting group of the root space.
  Subgroup isotropy;
  /// Present iff the stratum is singular.
  SpacePtr link;
  /// link stratum index -> index of a stratum strictly above this one
  std::vector<std::size_t> attach;

  bool singular() const noexcept { return link != nullptr; }
};

/// Strict partial order on stratum indices, stored as a dense relation.
class StrictOrder {
 public:
  StrictOrder() = default;
  explicit StrictOrder(std::size_t n) : n_(n), rel_(n * n, 0) {}

  std::size_t size() const noexcept { return n_; }
  bool less(std::size_t a, std::size_t b) const { return rel_[a * n_ + b] != 0; }
  void set(std::size_t a, std::size_t b, bool v = true) { rel_[a * n_ + b] = v ? 1 : 0; }
  /// All pairs (a, b) with a < b, lexicographic.
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;
  /// Closes the relation transitively.
  void close();

  bool operator==(const StrictOrder&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<char> rel_;
};

/// A G-stratified space at poset level: strata with dimensions, isotropy
/// labels, links and attachment maps.
///
/// Every isotropy label, including those inside links, is a subgroup of
/// `group`, the top acting group. `acting` is the subgroup that acts on this
/// space: the whole group for a root space and the owning stratum's
/// isotropy for a link.
class StratSpace {
 public:
  StratSpace(FiniteAbelianGroup group, Subgroup acting, std::vector<Stratum> strata,
             StrictOrder order, bool compact);

  const FiniteAbelianGroup& group() const noexcept { return group_; }
  const Subgroup& acting() const noexcept { return acting_; }
  const std::vector<Stratum>& strata() const noexcept { return strata_; }
  const Stratum& stratum(std::size_t i) const { return strata_.at(i); }
  std::size_t size() const noexcept { return strata_.size(); }
  const StrictOrder& order() const noexcept { return order_; }
  bool less(std::size_t a, std::size_t b) const { return order_.less(a, b); }
  bool compact() const noexcept { return compact_; }

 private:
  FiniteAbelianGroup group_;
  Subgroup acting_;
  std::vector<Stratum> strata_;
  StrictOrder order_;
  bool compact_;
};

// -- validation --------------------------------------------------------------

enum class ViolationKind {
  OrderReflexive,
  OrderNotTransitive,
  OrderNotAntisymmetric,
  OrderSize,
  NegativeDimension,
  ActingNotSubgroup,
  IsotropyNotSubgroup,
  MissingLink,
  UnexpectedLink,
  AttachSize,
  AttachOutOfRange,
  AttachNotAbove,
  AttachNotSurjective,
  AttachNotMonotone,
  LinkDimension,
  LinkIsotropy,
  LinkNotCompact,
  LinkGroup,
  LinkDepth,
};

const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  /// Path of stratum indices: {s} at the top level, {s, t} for stratum t in
  /// the link of s, and so on. Empty for whole-space violations.
  std::vector<std::size_t> where;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  bool has(ViolationKind kind) const;
  std::string to_string() const;
};

ValidationReport validate(const StratSpace& x);
/// Throws InvalidSpace with the first violations when `x` is not valid.
void require_valid(const StratSpace& x);

// -- queries ------------------------------------------------------------------

/// Length of the longest chain S_0 < ... < S_m.
int depth(const StratSpace& x);
/// Longest chain starting at stratum s going up.
int depth_above(const StratSpace& x, std::size_t s);
/// Longest chain ending at stratum s (coming from below).
int height(const StratSpace& x, std::size_t s);
std::vector<std::size_t> minimal_strata(const StratSpace& x);
std::vector<std::size_t> maximal_strata(const StratSpace& x);
bool is_minimal(const StratSpace& x, std::size_t s);
bool is_maximal(const StratSpace& x, std::size_t s);

// -- constructors ---------------------------------------------------------------

/// One-stratum compact manifold of dimension `dim` carrying a free action of
/// `group` (for example a circle with a rotation, or a torus).
StratSpace free_manifold(int dim, const FiniteAbelianGroup& group, std::string name = "M");
/// Connected manifold with trivial action of the trivial group (R^k, or a point for k=0).
StratSpace euclidean(int dim);
/// Unit circle with Z_m acting by rotation.
StratSpace circle(std::int64_t m);
/// Unit 2-sphere with Z_m rotating about the polar axis; poles are fixed.
StratSpace rot_sphere(std::int64_t m);

/// Open cone: a vertex with link L below the cylinders S x (0, inf).
StratSpace cone(const StratSpace& link);
/// M x X for a connected manifold M of dimension `manifold_dim` with trivial action.
StratSpace product(int manifold_dim, const StratSpace& x);
/// Two cone points over L joined by L x (0,1); compact when L is.
StratSpace suspension(const StratSpace& link);
/// Disjoint union of two spaces acted on by the same group.
StratSpace disjoint_union(const StratSpace& a, const StratSpace& b);

/// X/K. Stratum indices are preserved, so the returned bijection is the
/// identity; it is returned for callers that compose provenance maps.
struct OrbitSpace {
  StratSpace space;
  std::vector<std::size_t> bijection;  // index in X -> index in X/K
  QuotientPresentation quotient;
};

OrbitSpace orbit_space(const StratSpace& x, const Subgroup& k);

}  // namespace gstrat
