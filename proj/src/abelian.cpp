#include "gstrat/abelian.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "gstrat/error.hpp"
#include "gstrat/smith.hpp"

namespace gstrat {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidElement: return "invalid-element";
    case ErrorKind::AmbientMismatch: return "ambient-mismatch";
    case ErrorKind::NotSubgroup: return "not-subgroup";
    case ErrorKind::ConeOverNoncompact: return "cone-over-noncompact";
    case ErrorKind::NegativeDimension: return "negative-dimension";
    case ErrorKind::InvalidSpace: return "invalid-space";
    case ErrorKind::NotSingular: return "not-singular";
    case ErrorKind::OutOfChart: return "out-of-chart";
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::GroupMismatch: return "group-mismatch";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::Serialization: return "serialization";
  }
  return "unknown";
}

std::string GroupElement::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < residues.size(); ++i) os << (i ? "," : "") << residues[i];
  os << ')';
  return os.str();
}

std::string factors_to_string(const std::vector<std::int64_t>& factors) {
  std::ostringstream os;
  for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "x" : "") << 'Z' << factors[i];
  return os.str();
}

// ---------------------------------------------------------------------------

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::int64_t> moduli)
    : moduli_(std::move(moduli)) {
  if (moduli_.empty()) throw Error(ErrorKind::InvalidArgument, "group needs at least one modulus");
  stride_.assign(moduli_.size(), 1);
  for (std::size_t i = moduli_.size(); i-- > 0;) {
    if (moduli_[i] < 1) throw Error(ErrorKind::InvalidArgument, "group moduli must be >= 1");
    stride_[i] = order_;
    order_ *= static_cast<std::size_t>(moduli_[i]);
  }
}

bool FiniteAbelianGroup::contains(const GroupElement& g) const {
  if (g.residues.size() != moduli_.size()) return false;
  for (std::size_t i = 0; i < moduli_.size(); ++i)
    if (g.residues[i] < 0 || g.residues[i] >= moduli_[i]) return false;
  return true;
}

void FiniteAbelianGroup::check(const GroupElement& g) const {
  if (!contains(g))
    throw Error(ErrorKind::InvalidElement,
                "element " + g.to_string() + " is not in " + to_string());
}

GroupElement FiniteAbelianGroup::identity() const {
  return GroupElement(std::vector<std::int64_t>(moduli_.size(), 0));
}

GroupElement FiniteAbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  GroupElement out = a;
  for (std::size_t i = 0; i < moduli_.size(); ++i)
    out.residues[i] = (a.residues[i] + b.residues[i]) % moduli_[i];
  return out;
}

GroupElement FiniteAbelianGroup::negate(const GroupElement& a) const {
  GroupElement out = a;
  for (std::size_t i = 0; i < moduli_.size(); ++i)
    out.residues[i] = (moduli_[i] - a.residues[i]) % moduli_[i];
  return out;
}

GroupElement FiniteAbelianGroup::scale(std::int64_t k, const GroupElement& a) const {
  GroupElement out = a;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    auto r = (k % moduli_[i]) * a.residues[i] % moduli_[i];
    out.residues[i] = r < 0 ? r + moduli_[i] : r;
  }
  return out;
}

std::int64_t FiniteAbelianGroup::element_order(const GroupElement& a) const {
  std::int64_t ord = 1;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    const auto n = moduli_[i];
    ord = std::lcm(ord, n / std::gcd(n, a.residues[i]));
  }
  return ord;
}

std::size_t FiniteAbelianGroup::index(const GroupElement& g) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i)
    idx += static_cast<std::size_t>(g.residues[i]) * stride_[i];
  return idx;
}

GroupElement FiniteAbelianGroup::element(std::size_t index) const {
  GroupElement g(std::vector<std::int64_t>(moduli_.size()));
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    g.residues[i] = static_cast<std::int64_t>(index / stride_[i]);
    index %= stride_[i];
  }
  return g;
}

std::size_t FiniteAbelianGroup::add_index(std::size_t a, std::size_t b) const {
  std::size_t out = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    const auto n = static_cast<std::size_t>(moduli_[i]);
    const auto x = a / stride_[i];
    const auto y = b / stride_[i];
    a %= stride_[i];
    b %= stride_[i];
    out += ((x + y) % n) * stride_[i];
  }
  return out;
}

std::vector<GroupElement> FiniteAbelianGroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(order_);
  for (std::size_t i = 0; i < order_; ++i) out.push_back(element(i));
  return out;
}

std::vector<std::int64_t> FiniteAbelianGroup::invariant_factors() const {
  const auto snf = smith_normal_form(IntMatrix::diagonal(moduli_));
  std::vector<std::int64_t> out;
  for (auto d : snf.invariants())
    if (d != 1) out.push_back(d);
  if (out.empty()) out.push_back(1);
  return out;
}

std::string FiniteAbelianGroup::to_string() const { return factors_to_string(moduli_); }

// ---------------------------------------------------------------------------

namespace {

/// Closure of `base` (a subgroup membership mask plus its sorted member list)
/// under an extra generator: adds cosets base + k*g until k*g lands in base.
void absorb(const FiniteAbelianGroup& grp, std::vector<char>& mask,
            std::vector<std::size_t>& members, std::size_t gen) {
  if (mask[gen]) return;
  const auto base = members;
  std::size_t shift = gen;
  while (!mask[shift]) {
    for (auto b : base) {
      const auto x = grp.add_index(b, shift);
      mask[x] = 1;
      members.push_back(x);
    }
    shift = grp.add_index(shift, gen);
  }
}

Subgroup build(const FiniteAbelianGroup& g, std::vector<std::size_t> members,
               std::vector<GroupElement> gens) {
  std::sort(members.begin(), members.end());
  return Subgroup(g, std::move(members), std::move(gens));
}

void require_same_ambient(const Subgroup& a, const Subgroup& b) {
  if (!(a.ambient() == b.ambient()))
    throw Error(ErrorKind::AmbientMismatch, "subgroups of different groups: " +
                                                a.ambient().to_string() + " vs " +
                                                b.ambient().to_string());
}

}  // namespace

Subgroup::Subgroup(FiniteAbelianGroup ambient, std::vector<std::size_t> members,
                   std::vector<GroupElement> generators)
    : ambient_(std::move(ambient)),
      members_(std::move(members)),
      generators_(std::move(generators)) {}

Subgroup Subgroup::trivial(const FiniteAbelianGroup& g) { return Subgroup(g, {0}, {}); }

Subgroup Subgroup::full(const FiniteAbelianGroup& g) {
  std::vector<std::size_t> all(g.order());
  std::iota(all.begin(), all.end(), std::size_t{0});
  std::vector<GroupElement> gens;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    if (g.moduli()[i] == 1) continue;
    auto e = g.identity();
    e.residues[i] = 1;
    gens.push_back(std::move(e));
  }
  return Subgroup(g, std::move(all), std::move(gens));
}

std::vector<GroupElement> Subgroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(members_.size());
  for (auto i : members_) out.push_back(ambient_.element(i));
  return out;
}

bool Subgroup::contains_index(std::size_t i) const {
  return std::binary_search(members_.begin(), members_.end(), i);
}

bool Subgroup::contains(const GroupElement& g) const {
  return ambient_.contains(g) && contains_index(ambient_.index(g));
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  return ambient_ == other.ambient_ &&
         std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

std::vector<std::int64_t> Subgroup::invariant_factors() const {
  // For each prime p, the number of elements killed by p^j fixes the
  // p-primary partition; the invariant factors are then products across
  // primes of the sorted prime-power parts.
  const auto n = static_cast<std::int64_t>(members_.size());
  std::vector<std::int64_t> primes;
  {
    auto m = n;
    for (std::int64_t p = 2; p * p <= m; ++p)
      if (m % p == 0) {
        primes.push_back(p);
        while (m % p == 0) m /= p;
      }
    if (m > 1) primes.push_back(m);
  }
  const auto elems = elements();
  std::vector<std::vector<std::int64_t>> parts;  // per prime: factor sizes, descending
  for (auto p : primes) {
    std::vector<std::int64_t> logs{0};  // log_p |{x : p^j x = 0}|
    std::int64_t pj = 1;
    for (;;) {
      pj *= p;
      std::int64_t count = 0;
      for (const auto& e : elems)
        if (ambient_.scale(pj, e) == ambient_.identity()) ++count;
      std::int64_t lg = 0;
      for (auto c = count; c > 1; c /= p) ++lg;
      if (lg == logs.back()) break;
      logs.push_back(lg);
    }
    // at_least[j] = number of cyclic factors of order >= p^j
    std::vector<std::int64_t> sizes;
    for (std::size_t j = 1; j < logs.size(); ++j) {
      const auto at_least = logs[j] - logs[j - 1];
      const auto next = j + 1 < logs.size() ? logs[j + 1] - logs[j] : 0;
      std::int64_t pw = 1;
      for (std::size_t t = 0; t < j; ++t) pw *= p;
      for (auto c = next; c < at_least; ++c) sizes.push_back(pw);
    }
    std::sort(sizes.rbegin(), sizes.rend());
    parts.push_back(std::move(sizes));
  }
  std::size_t width = 0;
  for (const auto& s : parts) width = std::max(width, s.size());
  std::vector<std::int64_t> out(width, 1);  // descending for now
  for (const auto& s : parts)
    for (std::size_t i = 0; i < s.size(); ++i) out[i] *= s[i];
  std::reverse(out.begin(), out.end());
  if (out.empty()) out.push_back(1);
  return out;
}

Subgroup subgroup_closure(const FiniteAbelianGroup& g, const std::vector<GroupElement>& gens) {
  std::vector<char> mask(g.order(), 0);
  std::vector<std::size_t> members{0};
  mask[0] = 1;
  for (const auto& x : gens) {
    g.check(x);
    absorb(g, mask, members, g.index(x));
  }
  return build(g, std::move(members), gens);
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  require_same_ambient(a, b);
  const auto& g = a.ambient();
  std::vector<char> mask(g.order(), 0);
  auto members = a.members();
  for (auto i : members) mask[i] = 1;
  auto gens = a.generators();
  for (const auto& x : b.generators()) {
    const auto i = g.index(x);
    if (!mask[i]) gens.push_back(x);
    absorb(g, mask, members, i);
  }
  return build(g, std::move(members), std::move(gens));
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  require_same_ambient(a, b);
  const auto& g = a.ambient();
  std::vector<std::size_t> common;
  std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(),
                        b.members().end(), std::back_inserter(common));
  // greedy generating set
  std::vector<char> mask(g.order(), 0);
  std::vector<std::size_t> reached{0};
  mask[0] = 1;
  std::vector<GroupElement> gens;
  for (auto i : common) {
    if (mask[i]) continue;
    gens.push_back(g.element(i));
    absorb(g, mask, reached, i);
  }
  return Subgroup(g, std::move(common), std::move(gens));
}

// ---------------------------------------------------------------------------

GroupElement QuotientPresentation::project(const GroupElement& g) const {
  source.check(g);
  return target.element(table[source.index(g)]);
}

QuotientPresentation quotient(const FiniteAbelianGroup& g, const Subgroup& k) {
  if (!(k.ambient() == g))
    throw Error(ErrorKind::NotSubgroup,
                "subgroup of " + k.ambient().to_string() + " is not inside " + g.to_string());
  const auto rank = g.rank();
  const auto& gens = k.generators();
  // relation lattice: columns are n_i e_i and the kernel generators
  IntMatrix rel(rank, rank + gens.size());
  for (std::size_t i = 0; i < rank; ++i) rel(i, i) = g.moduli()[i];
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (std::size_t i = 0; i < rank; ++i) rel(i, rank + j) = gens[j].residues[i];
  const auto snf = smith_normal_form(rel);

  std::vector<std::int64_t> moduli;
  std::vector<std::vector<std::int64_t>> rows;
  for (std::size_t i = 0; i < rank; ++i) {
    const auto d = snf.diagonal(i, i);
    if (d == 1) continue;
    std::vector<std::int64_t> row(rank);
    for (std::size_t c = 0; c < rank; ++c) row[c] = ((snf.left(i, c) % d) + d) % d;
    // a row may be negated freely; prefer the smaller leading residue
    const auto lead = std::find_if(row.begin(), row.end(), [](auto x) { return x != 0; });
    if (lead != row.end() && *lead > d - *lead)
      for (auto& x : row) x = (d - x) % d;
    moduli.push_back(d);
    rows.push_back(std::move(row));
  }
  if (moduli.empty()) {
    moduli.push_back(1);
    rows.emplace_back(rank, 0);
  }

  FiniteAbelianGroup target(moduli);
  std::vector<std::size_t> table(g.order());
  for (std::size_t idx = 0; idx < g.order(); ++idx) {
    const auto x = g.element(idx);
    GroupElement img(std::vector<std::int64_t>(moduli.size()));
    for (std::size_t t = 0; t < moduli.size(); ++t) {
      std::int64_t acc = 0;
      for (std::size_t c = 0; c < rank; ++c) acc = (acc + rows[t][c] * x.residues[c]) % moduli[t];
      img.residues[t] = acc;
    }
    table[idx] = target.index(img);
  }
  return QuotientPresentation{g, k, std::move(target), std::move(rows), std::move(table)};
}

Subgroup push_subgroup(const QuotientPresentation& q, const Subgroup& h) {
  if (!(h.ambient() == q.source))
    throw Error(ErrorKind::NotSubgroup,
                "subgroup of " + h.ambient().to_string() + " is not inside " +
                    q.source.to_string());
  // the image of a subgroup under a homomorphism is already a subgroup
  std::vector<std::size_t> image;
  image.reserve(h.order());
  for (auto i : h.members()) image.push_back(q.table[i]);
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  std::vector<GroupElement> gens;
  for (const auto& x : h.generators()) {
    auto y = q.target.element(q.table[q.source.index(x)]);
    if (y != q.target.identity()) gens.push_back(std::move(y));
  }
  return Subgroup(q.target, std::move(image), std::move(gens));
}

}  // namespace gstrat
