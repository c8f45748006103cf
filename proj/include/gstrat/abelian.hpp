#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace gstrat {

struct GroupElement {
  std::vector<std::int64_t> residues;

  GroupElement() = default;
  explicit GroupElement(std::vector<std::int64_t> r) : residues(std::move(r)) {}
  GroupElement(std::initializer_list<std::int64_t> r) : residues(r) {}

  auto operator<=>(const GroupElement&) const = default;
  std::string to_string() const;
};

/// Z_{n1} x ... x Z_{nk}. Elements are residue tuples; internally they are
/// also addressed by a mixed-radix index whose order agrees with the
/// lexicographic order of residue tuples.
class FiniteAbelianGroup {
 public:
  explicit FiniteAbelianGroup(std::vector<std::int64_t> moduli);
  static FiniteAbelianGroup cyclic(std::int64_t n) { return FiniteAbelianGroup({n}); }
  static FiniteAbelianGroup trivial() { return cyclic(1); }

  const std::vector<std::int64_t>& moduli() const noexcept { return moduli_; }
  std::size_t rank() const noexcept { return moduli_.size(); }
  std::size_t order() const noexcept { return order_; }

  bool contains(const GroupElement& g) const;
  /// Throws InvalidElement unless `contains(g)`.
  void check(const GroupElement& g) const;

  GroupElement identity() const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement negate(const GroupElement& a) const;
  GroupElement scale(std::int64_t k, const GroupElement& a) const;
  std::int64_t element_order(const GroupElement& a) const;

  std::size_t index(const GroupElement& g) const;
  GroupElement element(std::size_t index) const;
  std::size_t add_index(std::size_t a, std::size_t b) const;
  std::vector<GroupElement> elements() const;

  /// Canonical cyclic decomposition d_1 | d_2 | ..., {1} for the trivial group.
  std::vector<std::int64_t> invariant_factors() const;

  /// "Z4", "Z2xZ6", ...
  std::string to_string() const;

  bool operator==(const FiniteAbelianGroup& o) const { return moduli_ == o.moduli_; }

 private:
  std::vector<std::int64_t> moduli_;
  std::vector<std::size_t> stride_;
  std::size_t order_ = 1;
};

/// A subgroup identified by its full, sorted element list.
class Subgroup {
 public:
  /// Trusted constructor: `members` must be sorted element indices forming a
  /// subgroup of `ambient`, `generators` must generate it.
  Subgroup(FiniteAbelianGroup ambient, std::vector<std::size_t> members,
           std::vector<GroupElement> generators);

  static Subgroup trivial(const FiniteAbelianGroup& g);
  static Subgroup full(const FiniteAbelianGroup& g);

  const FiniteAbelianGroup& ambient() const noexcept { return ambient_; }
  const std::vector<std::size_t>& members() const noexcept { return members_; }
  const std::vector<GroupElement>& generators() const noexcept { return generators_; }
  std::vector<GroupElement> elements() const;
  std::size_t order() const noexcept { return members_.size(); }

  bool contains(const GroupElement& g) const;
  bool contains_index(std::size_t i) const;
  bool is_subgroup_of(const Subgroup& other) const;
  bool is_trivial() const noexcept { return members_.size() == 1; }
  bool is_full() const noexcept { return members_.size() == ambient_.order(); }

  /// Invariant factors of the subgroup as an abstract group, from counts of
  /// p-power torsion elements.
  std::vector<std::int64_t> invariant_factors() const;

  /// Equality ignores generator choice.
  bool operator==(const Subgroup& o) const {
    return ambient_ == o.ambient_ && members_ == o.members_;
  }

 private:
  FiniteAbelianGroup ambient_;
  std::vector<std::size_t> members_;
  std::vector<GroupElement> generators_;
};

Subgroup subgroup_closure(const FiniteAbelianGroup& g, const std::vector<GroupElement>& gens);
Subgroup join(const Subgroup& a, const Subgroup& b);
Subgroup intersect(const Subgroup& a, const Subgroup& b);

/// G -> G/K with the target in invariant-factor form.
struct QuotientPresentation {
  FiniteAbelianGroup source;
  Subgroup kernel;
  FiniteAbelianGroup target;
  /// One integer row per target factor: image_i = <row_i, g> mod target.moduli[i].
  std::vector<std::vector<std::int64_t>> rows;
  /// source index -> target index
  std::vector<std::size_t> table;

  GroupElement project(const GroupElement& g) const;
};

QuotientPresentation quotient(const FiniteAbelianGroup& g, const Subgroup& k);

/// Image of H under the projection, i.e. KH/K.
Subgroup push_subgroup(const QuotientPresentation& q, const Subgroup& h);

std::string factors_to_string(const std::vector<std::int64_t>& factors);

}  // namespace gstrat
