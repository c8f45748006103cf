#include "gstrat/iso.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

#include "gstrat/error.hpp"

namespace gstrat {

GroupMap::GroupMap(FiniteAbelianGroup source, FiniteAbelianGroup target,
                   std::vector<GroupElement> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_.rank())
    throw Error(ErrorKind::InvalidArgument, "group map needs one image per source generator");
  for (std::size_t i = 0; i < images_.size(); ++i) {
    target_.check(images_[i]);
    if (target_.scale(source_.moduli()[i], images_[i]) != target_.identity())
      throw Error(ErrorKind::InvalidArgument,
                  "image " + images_[i].to_string() + " does not respect the relation of Z" +
                      std::to_string(source_.moduli()[i]));
  }
  table_.resize(source_.order());
  for (std::size_t idx = 0; idx < source_.order(); ++idx) {
    const auto g = source_.element(idx);
    auto acc = target_.identity();
    for (std::size_t i = 0; i < images_.size(); ++i)
      acc = target_.add(acc, target_.scale(g.residues[i], images_[i]));
    table_[idx] = target_.index(acc);
  }
}

GroupMap GroupMap::identity(const FiniteAbelianGroup& g) {
  std::vector<GroupElement> images;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    auto e = g.identity();
    e.residues[i] = g.moduli()[i] == 1 ? 0 : 1;
    images.push_back(std::move(e));
  }
  return GroupMap(g, g, std::move(images));
}

GroupElement GroupMap::apply(const GroupElement& g) const {
  source_.check(g);
  return target_.element(table_[source_.index(g)]);
}

Subgroup GroupMap::apply(const Subgroup& h) const {
  if (!(h.ambient() == source_))
    throw Error(ErrorKind::AmbientMismatch, "group map applied to a foreign subgroup");
  std::vector<std::size_t> image;
  for (auto i : h.members()) image.push_back(table_[i]);
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  std::vector<GroupElement> gens;
  for (const auto& x : h.generators()) gens.push_back(apply(x));
  return Subgroup(target_, std::move(image), std::move(gens));
}

bool GroupMap::is_bijective() const {
  if (source_.order() != target_.order()) return false;
  std::vector<char> seen(target_.order(), 0);
  for (auto t : table_) {
    if (seen[t]) return false;
    seen[t] = 1;
  }
  return true;
}

std::string GroupMap::to_string() const {
  std::ostringstream os;
  os << source_.to_string() << "->" << target_.to_string() << " [";
  for (std::size_t i = 0; i < images_.size(); ++i) os << (i ? " " : "") << images_[i].to_string();
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------

namespace {

struct IsoSearch {
  const FiniteAbelianGroup& g;
  const FiniteAbelianGroup& h;
  const std::function<bool(const GroupMap&)>& visit;
  bool skip_identity;
  std::vector<std::vector<GroupElement>> candidates;
  std::vector<GroupElement> chosen;

  bool run(std::size_t i, const Subgroup& span, std::size_t expected) {
    if (i == g.rank()) {
      if (skip_identity && chosen == GroupMap::identity(g).images()) return false;
      return visit(GroupMap(g, h, chosen));
    }
    const auto n = static_cast<std::size_t>(g.moduli()[i]);
    for (const auto& c : candidates[i]) {
      auto next = join(span, subgroup_closure(h, {c}));
      // injective on <e_0..e_i> iff the image span has the full order
      if (next.order() != expected * n) continue;
      chosen.push_back(c);
      if (run(i + 1, next, expected * n)) return true;
      chosen.pop_back();
    }
    return false;
  }
};

}  // namespace

bool for_each_group_iso(const FiniteAbelianGroup& g, const FiniteAbelianGroup& h,
                        const std::function<bool(const GroupMap&)>& visit) {
  if (g.order() != h.order() || g.invariant_factors() != h.invariant_factors()) return false;
  bool tried_identity = false;
  if (g.moduli() == h.moduli()) {
    if (visit(GroupMap::identity(g))) return true;
    tried_identity = true;
  }
  IsoSearch search{g, h, visit, tried_identity, {}, {}};
  const auto elems = h.elements();
  for (std::size_t i = 0; i < g.rank(); ++i) {
    std::vector<GroupElement> c;
    for (const auto& e : elems)
      if (h.element_order(e) == g.moduli()[i]) c.push_back(e);
    search.candidates.push_back(std::move(c));
  }
  return search.run(0, Subgroup::trivial(h), 1);
}

// ---------------------------------------------------------------------------

namespace {

using Allowed = std::function<bool(std::size_t, std::size_t)>;

struct StratumSignature {
  int dim;
  std::size_t below;
  std::size_t above;
  bool singular;
  std::vector<std::int64_t> label;

  auto operator<=>(const StratumSignature&) const = default;
};

std::vector<StratumSignature> signatures(const StratSpace& x) {
  std::vector<StratumSignature> out;
  for (std::size_t s = 0; s < x.size(); ++s) {
    std::size_t below = 0, above = 0;
    for (std::size_t t = 0; t < x.size(); ++t) {
      below += x.less(t, s);
      above += x.less(s, t);
    }
    const auto& st = x.stratum(s);
    out.push_back({st.dim, below, above, st.singular(), st.isotropy.invariant_factors()});
  }
  return out;
}

bool same_shape(const StratSpace& x, const StratSpace& y) {
  if (x.size() != y.size() || x.compact() != y.compact()) return false;
  if (x.group().order() != y.group().order()) return false;
  auto a = signatures(x);
  auto b = signatures(y);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

class Matcher {
 public:
  explicit Matcher(const GroupMap& phi) : phi_(phi) {}

  bool match(const StratSpace& x, const StratSpace& y, const Allowed& allowed, SpaceIso& out) {
    if (x.size() != y.size() || x.compact() != y.compact()) return false;
    if (!(phi_.apply(x.acting()) == y.acting())) return false;

    const auto n = x.size();
    State st{x, y, allowed, {}, std::vector<std::size_t>(n, npos), std::vector<char>(n, 0),
             std::vector<SpaceIso>(n), {}, {}};
    st.sig_x = signatures(x);
    st.sig_y = signatures(y);
    // strata with fewer strata above first, so a singular stratum is placed
    // only after everything its link attaches to
    std::vector<int> up(n);
    for (std::size_t s = 0; s < n; ++s) up[s] = depth_above(x, s);
    st.sequence.resize(n);
    std::iota(st.sequence.begin(), st.sequence.end(), std::size_t{0});
    std::stable_sort(st.sequence.begin(), st.sequence.end(),
                     [&](std::size_t a, std::size_t b) { return up[a] < up[b]; });

    if (!assign(st, 0)) return false;
    out.stratum_map = st.map;
    out.links = std::move(st.links);
    return true;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  struct State {
    const StratSpace& x;
    const StratSpace& y;
    const Allowed& allowed;
    std::vector<std::size_t> sequence;
    std::vector<std::size_t> map;
    std::vector<char> used;
    std::vector<SpaceIso> links;
    std::vector<StratumSignature> sig_x;
    std::vector<StratumSignature> sig_y;
  };

  bool assign(State& st, std::size_t pos) {
    if (pos == st.sequence.size()) return true;
    const auto i = st.sequence[pos];
    const auto& si = st.x.stratum(i);
    for (std::size_t j = 0; j < st.y.size(); ++j) {
      if (st.used[j] || !st.allowed(i, j)) continue;
      if (!(st.sig_x[i] == st.sig_y[j])) continue;
      const auto& sj = st.y.stratum(j);
      if (!(phi_.apply(si.isotropy) == sj.isotropy)) continue;
      bool order_ok = true;
      for (std::size_t k = 0; k < st.x.size() && order_ok; ++k) {
        if (st.map[k] == npos) continue;
        order_ok = st.x.less(i, k) == st.y.less(j, st.map[k]) &&
                   st.x.less(k, i) == st.y.less(st.map[k], j);
      }
      if (!order_ok) continue;

      SpaceIso link_iso;
      if (si.link) {
        const auto& ai = si.attach;
        const auto& aj = sj.attach;
        const auto& map = st.map;
        Allowed compat = [&](std::size_t a, std::size_t b) { return map[ai[a]] == aj[b]; };
        if (!match(*si.link, *sj.link, compat, link_iso)) continue;
      }

      st.map[i] = j;
      st.used[j] = 1;
      st.links[i] = std::move(link_iso);
      if (assign(st, pos + 1)) return true;
      st.map[i] = npos;
      st.used[j] = 0;
      st.links[i] = SpaceIso{};
    }
    return false;
  }

  const GroupMap& phi_;
};

bool verify_with(const StratSpace& x, const StratSpace& y, const SpaceIso& iso,
                 const GroupMap& phi) {
  const auto n = x.size();
  if (y.size() != n || iso.stratum_map.size() != n || iso.links.size() != n) return false;
  if (x.compact() != y.compact() || !(phi.apply(x.acting()) == y.acting())) return false;
  std::vector<char> hit(n, 0);
  for (auto j : iso.stratum_map) {
    if (j >= n || hit[j]) return false;
    hit[j] = 1;
  }
  for (std::size_t a = 0; a < n; ++a) {
    const auto& sa = x.stratum(a);
    const auto& sb = y.stratum(iso.stratum_map[a]);
    if (sa.dim != sb.dim || !(phi.apply(sa.isotropy) == sb.isotropy)) return false;
    if (sa.singular() != sb.singular()) return false;
    for (std::size_t b = 0; b < n; ++b)
      if (x.less(a, b) != y.less(iso.stratum_map[a], iso.stratum_map[b])) return false;
    if (!sa.link) continue;
    const auto& sub = iso.links[a];
    if (!verify_with(*sa.link, *sb.link, sub, phi)) return false;
    for (std::size_t t = 0; t < sa.link->size(); ++t)
      if (iso.stratum_map[sa.attach[t]] != sb.attach[sub.stratum_map[t]]) return false;
  }
  return true;
}

}  // namespace

std::string SpaceIso::summary() const {
  std::ostringstream os;
  os << "strata=[";
  for (std::size_t i = 0; i < stratum_map.size(); ++i)
    os << (i ? "," : "") << i << "->" << stratum_map[i];
  os << ']';
  if (group_map) os << " group=" << group_map->to_string();
  return os.str();
}

std::optional<SpaceIso> is_isomorphic(const StratSpace& x, const StratSpace& y) {
  if (!same_shape(x, y)) return std::nullopt;
  std::optional<SpaceIso> found;
  const Allowed any = [](std::size_t, std::size_t) { return true; };
  for_each_group_iso(x.group(), y.group(), [&](const GroupMap& phi) {
    SpaceIso iso;
    if (!Matcher(phi).match(x, y, any, iso)) return false;
    iso.group_map = phi;
    found = std::move(iso);
    return true;
  });
  return found;
}

bool verify_iso(const StratSpace& x, const StratSpace& y, const SpaceIso& iso) {
  if (!iso.group_map || !iso.group_map->is_bijective()) return false;
  if (!(iso.group_map->source() == x.group()) || !(iso.group_map->target() == y.group()))
    return false;
  return verify_with(x, y, iso, *iso.group_map);
}

}  // namespace gstrat
