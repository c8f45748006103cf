#include "gstrat/space.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "gstrat/error.hpp"

namespace gstrat {

std::vector<std::pair<std::size_t, std::size_t>> StrictOrder::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b)
      if (less(a, b)) out.emplace_back(a, b);
  return out;
}

void StrictOrder::close() {
  for (std::size_t k = 0; k < n_; ++k)
    for (std::size_t a = 0; a < n_; ++a)
      if (less(a, k))
        for (std::size_t b = 0; b < n_; ++b)
          if (less(k, b)) set(a, b);
}

StratSpace::StratSpace(FiniteAbelianGroup group, Subgroup acting, std::vector<Stratum> strata,
                       StrictOrder order, bool compact)
    : group_(std::move(group)),
      acting_(std::move(acting)),
      strata_(std::move(strata)),
      order_(std::move(order)),
      compact_(compact) {}

// ---------------------------------------------------------------------------

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::OrderReflexive: return "order-reflexive";
    case ViolationKind::OrderNotTransitive: return "order-not-transitive";
    case ViolationKind::OrderNotAntisymmetric: return "order-not-antisymmetric";
    case ViolationKind::OrderSize: return "order-size";
    case ViolationKind::NegativeDimension: return "negative-dimension";
    case ViolationKind::ActingNotSubgroup: return "acting-not-subgroup";
    case ViolationKind::IsotropyNotSubgroup: return "isotropy-not-subgroup";
    case ViolationKind::MissingLink: return "missing link";
    case ViolationKind::UnexpectedLink: return "unexpected link";
    case ViolationKind::AttachSize: return "attach-size";
    case ViolationKind::AttachOutOfRange: return "attach-out-of-range";
    case ViolationKind::AttachNotAbove: return "attach-not-above";
    case ViolationKind::AttachNotSurjective: return "attach-not-surjective";
    case ViolationKind::AttachNotMonotone: return "attach-not-monotone";
    case ViolationKind::LinkDimension: return "link-dimension";
    case ViolationKind::LinkIsotropy: return "link-isotropy";
    case ViolationKind::LinkNotCompact: return "link-not-compact";
    case ViolationKind::LinkGroup: return "link-group";
    case ViolationKind::LinkDepth: return "link-depth";
  }
  return "unknown";
}

bool ValidationReport::has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [kind](const Violation& v) { return v.kind == kind; });
}

std::string ValidationReport::to_string() const {
  if (ok()) return "valid";
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    const auto& v = violations[i];
    if (i) os << '\n';
    os << gstrat::to_string(v.kind) << " at [";
    for (std::size_t j = 0; j < v.where.size(); ++j) os << (j ? "/" : "") << v.where[j];
    os << "]: " << v.message;
  }
  return os.str();
}

namespace {

class Validator {
 public:
  explicit Validator(ValidationReport& report) : report_(report) {}

  void run(const StratSpace& x, const std::vector<std::size_t>& path) {
    const auto n = x.size();
    auto at = [&](std::size_t s) {
      auto p = path;
      p.push_back(s);
      return p;
    };
    auto flag = [&](ViolationKind k, std::vector<std::size_t> where, std::string msg) {
      report_.violations.push_back({k, std::move(where), std::move(msg)});
    };

    if (!(x.acting().ambient() == x.group()))
      flag(ViolationKind::ActingNotSubgroup, path, "acting subgroup lives in another group");

    const auto before = report_.violations.size();
    const bool order_ok = x.order().size() == n;
    if (!order_ok) {
      flag(ViolationKind::OrderSize, path, "order relation has the wrong size");
    } else {
      for (std::size_t a = 0; a < n; ++a) {
        if (x.less(a, a)) flag(ViolationKind::OrderReflexive, at(a), "stratum below itself");
        for (std::size_t b = 0; b < n; ++b) {
          if (a < b && x.less(a, b) && x.less(b, a))
            flag(ViolationKind::OrderNotAntisymmetric, at(a),
                 "mutually below stratum " + std::to_string(b));
          if (!x.less(a, b)) continue;
          for (std::size_t c = 0; c < n; ++c)
            if (x.less(b, c) && !x.less(a, c))
              flag(ViolationKind::OrderNotTransitive, at(a),
                   "below " + std::to_string(b) + " below " + std::to_string(c) +
                       " but not below " + std::to_string(c));
        }
      }
    }
    strict_ = order_ok && report_.violations.size() == before;

    for (std::size_t s = 0; s < n; ++s) {
      const auto& st = x.stratum(s);
      if (st.dim < 0) flag(ViolationKind::NegativeDimension, at(s), "negative dimension");
      if (!st.isotropy.is_subgroup_of(x.acting()))
        flag(ViolationKind::IsotropyNotSubgroup, at(s),
             "isotropy is not a subgroup of the acting group");
      if (!order_ok) continue;

      const bool maximal = is_maximal(x, s);
      if (maximal) {
        if (st.link || !st.attach.empty())
          flag(ViolationKind::UnexpectedLink, at(s), "maximal stratum carries a link");
        continue;
      }
      if (!st.link) {
        flag(ViolationKind::MissingLink, at(s), "singular stratum lacks a link");
        continue;
      }
      check_link(x, s, at(s), flag);
    }
  }

 private:
  template <class Flag>
  void check_link(const StratSpace& x, std::size_t s, const std::vector<std::size_t>& where,
                  Flag& flag) {
    const auto& st = x.stratum(s);
    const auto& link = *st.link;
    const auto n = x.size();

    if (!link.compact()) flag(ViolationKind::LinkNotCompact, where, "link is not compact");
    if (!(link.group() == x.group()) || !(link.acting() == st.isotropy))
      flag(ViolationKind::LinkGroup, where,
           "link must be acted on by the stratum isotropy inside the top group");

    const bool strict = strict_;
    const auto before = report_.violations.size();
    run(link, where);
    const bool link_ok = report_.violations.size() == before;

    if (st.attach.size() != link.size()) {
      flag(ViolationKind::AttachSize, where, "attach map does not cover the link strata");
      return;
    }
    bool in_range = true;
    for (std::size_t t = 0; t < st.attach.size(); ++t)
      if (st.attach[t] >= n) {
        flag(ViolationKind::AttachOutOfRange, where,
             "link stratum " + std::to_string(t) + " attaches to a missing stratum");
        in_range = false;
      }
    if (!in_range) return;

    std::vector<char> hit(n, 0);
    for (std::size_t t = 0; t < link.size(); ++t) {
      const auto r = st.attach[t];
      hit[r] = 1;
      if (!x.less(s, r)) {
        flag(ViolationKind::AttachNotAbove, where,
             "link stratum " + std::to_string(t) + " attaches to " + std::to_string(r) +
                 ", which is not above");
        continue;
      }
      const auto& above = x.stratum(r);
      const auto& lt = link.stratum(t);
      if (above.dim != st.dim + 1 + lt.dim)
        flag(ViolationKind::LinkDimension, where,
             "link stratum " + std::to_string(t) + " (dim " + std::to_string(lt.dim) +
                 ") attaches to stratum " + std::to_string(r) + " of dim " +
                 std::to_string(above.dim) + ", expected " +
                 std::to_string(st.dim + 1 + lt.dim));
      if (!(lt.isotropy == above.isotropy))
        flag(ViolationKind::LinkIsotropy, where,
             "link stratum " + std::to_string(t) + " and stratum " + std::to_string(r) +
                 " have different isotropy");
    }
    for (std::size_t r = 0; r < n; ++r)
      if (x.less(s, r) && !hit[r])
        flag(ViolationKind::AttachNotSurjective, where,
             "stratum " + std::to_string(r) + " above is missing from the link");
    if (link.order().size() == link.size())
      for (const auto& [a, b] : link.order().pairs())
        if (!x.less(st.attach[a], st.attach[b]))
          flag(ViolationKind::AttachNotMonotone, where,
               "link order " + std::to_string(a) + " < " + std::to_string(b) +
                   " is not preserved");

    if (strict && link_ok && depth_above(x, s) != depth(link) + 1)
      flag(ViolationKind::LinkDepth, where,
           "depth above is " + std::to_string(depth_above(x, s)) + " but link depth is " +
               std::to_string(depth(link)));
  }

  ValidationReport& report_;
  bool strict_ = false;  // the order of the space being checked is a strict order
};

}  // namespace

ValidationReport validate(const StratSpace& x) {
  ValidationReport report;
  Validator(report).run(x, {});
  return report;
}

void require_valid(const StratSpace& x) {
  const auto report = validate(x);
  if (!report.ok()) throw Error(ErrorKind::InvalidSpace, "invalid space: " + report.to_string());
}

// ---------------------------------------------------------------------------

namespace {

std::vector<int> longest_chains(const StratSpace& x, bool upward) {
  const auto n = x.size();
  constexpr int kOpen = -2;
  std::vector<int> memo(n, -1);
  std::function<int(std::size_t)> go = [&](std::size_t s) -> int {
    if (memo[s] == kOpen) throw Error(ErrorKind::InvalidSpace, "order relation has a cycle");
    if (memo[s] >= 0) return memo[s];
    memo[s] = kOpen;
    int best = 0;
    for (std::size_t t = 0; t < n; ++t) {
      const bool step = upward ? x.less(s, t) : x.less(t, s);
      if (step) best = std::max(best, 1 + go(t));
    }
    return memo[s] = best;
  };
  for (std::size_t s = 0; s < n; ++s) go(s);
  return memo;
}

}  // namespace

int depth(const StratSpace& x) {
  const auto up = longest_chains(x, true);
  return up.empty() ? 0 : *std::max_element(up.begin(), up.end());
}

int depth_above(const StratSpace& x, std::size_t s) { return longest_chains(x, true).at(s); }

int height(const StratSpace& x, std::size_t s) { return longest_chains(x, false).at(s); }

bool is_minimal(const StratSpace& x, std::size_t s) {
  for (std::size_t t = 0; t < x.size(); ++t)
    if (x.less(t, s)) return false;
  return true;
}

bool is_maximal(const StratSpace& x, std::size_t s) {
  for (std::size_t t = 0; t < x.size(); ++t)
    if (x.less(s, t)) return false;
  return true;
}

std::vector<std::size_t> minimal_strata(const StratSpace& x) {
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < x.size(); ++s)
    if (is_minimal(x, s)) out.push_back(s);
  return out;
}

std::vector<std::size_t> maximal_strata(const StratSpace& x) {
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < x.size(); ++s)
    if (is_maximal(x, s)) out.push_back(s);
  return out;
}

// ---------------------------------------------------------------------------

StratSpace free_manifold(int dim, const FiniteAbelianGroup& group, std::string name) {
  if (dim < 0) throw Error(ErrorKind::NegativeDimension, "manifold dimension must be >= 0");
  std::vector<Stratum> strata{{std::move(name), dim, Subgroup::trivial(group), nullptr, {}}};
  return StratSpace(group, Subgroup::full(group), std::move(strata), StrictOrder(1), true);
}

StratSpace euclidean(int dim) {
  if (dim < 0) throw Error(ErrorKind::NegativeDimension, "euclidean dimension must be >= 0");
  const auto g = FiniteAbelianGroup::trivial();
  std::vector<Stratum> strata{{"R" + std::to_string(dim), dim, Subgroup::trivial(g), nullptr, {}}};
  return StratSpace(g, Subgroup::full(g), std::move(strata), StrictOrder(1), dim == 0);
}

StratSpace circle(std::int64_t m) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "circle needs m >= 1");
  return free_manifold(1, FiniteAbelianGroup::cyclic(m), "t");
}

StratSpace rot_sphere(std::int64_t m) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "rotsphere needs m >= 1");
  const auto g = FiniteAbelianGroup::cyclic(m);
  const auto full = Subgroup::full(g);
  const auto link = std::make_shared<const StratSpace>(circle(m));
  std::vector<Stratum> strata{
      {"N", 0, full, link, {2}},
      {"S", 0, full, link, {2}},
      {"T", 2, Subgroup::trivial(g), nullptr, {}},
  };
  StrictOrder order(3);
  order.set(0, 2);
  order.set(1, 2);
  return StratSpace(g, full, std::move(strata), std::move(order), true);
}

namespace {

/// Cylinder strata S x I over every stratum of `link`, indices shifted by `offset`.
std::vector<Stratum> cylinders(const StratSpace& link, std::size_t offset) {
  std::vector<Stratum> out;
  for (const auto& s : link.strata()) {
    Stratum c = s;
    c.dim += 1;
    for (auto& a : c.attach) a += offset;
    out.push_back(std::move(c));
  }
  return out;
}

Stratum apex(std::string name, const SpacePtr& link, std::size_t offset) {
  std::vector<std::size_t> attach(link->size());
  std::iota(attach.begin(), attach.end(), offset);
  return Stratum{std::move(name), 0, link->acting(), link, std::move(attach)};
}

void require_compact(const StratSpace& link, const char* what) {
  if (!link.compact())
    throw Error(ErrorKind::ConeOverNoncompact, std::string(what) + " over a non-compact space");
}

}  // namespace

StratSpace cone(const StratSpace& link) {
  require_compact(link, "cone");
  const auto ptr = std::make_shared<const StratSpace>(link);
  const auto n = link.size();
  std::vector<Stratum> strata{apex("v", ptr, 1)};
  for (auto& c : cylinders(link, 1)) strata.push_back(std::move(c));

  StrictOrder order(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    order.set(0, i + 1);
    for (std::size_t j = 0; j < n; ++j)
      if (link.less(i, j)) order.set(i + 1, j + 1);
  }
  return StratSpace(link.group(), link.acting(), std::move(strata), std::move(order), false);
}

StratSpace suspension(const StratSpace& link) {
  require_compact(link, "suspension");
  const auto ptr = std::make_shared<const StratSpace>(link);
  const auto n = link.size();
  std::vector<Stratum> strata{apex("n", ptr, 2), apex("s", ptr, 2)};
  for (auto& c : cylinders(link, 2)) strata.push_back(std::move(c));

  StrictOrder order(n + 2);
  for (std::size_t i = 0; i < n; ++i) {
    order.set(0, i + 2);
    order.set(1, i + 2);
    for (std::size_t j = 0; j < n; ++j)
      if (link.less(i, j)) order.set(i + 2, j + 2);
  }
  return StratSpace(link.group(), link.acting(), std::move(strata), std::move(order), true);
}

StratSpace product(int manifold_dim, const StratSpace& x) {
  if (manifold_dim < 0)
    throw Error(ErrorKind::NegativeDimension, "product with a manifold of negative dimension");
  auto strata = x.strata();
  for (auto& s : strata) s.dim += manifold_dim;
  return StratSpace(x.group(), x.acting(), std::move(strata), x.order(),
                    x.compact() && manifold_dim == 0);
}

StratSpace disjoint_union(const StratSpace& a, const StratSpace& b) {
  if (!(a.group() == b.group()) || !(a.acting() == b.acting()))
    throw Error(ErrorKind::GroupMismatch, "disjoint union needs a common acting group");
  auto strata = a.strata();
  const auto offset = a.size();
  for (auto s : b.strata()) {
    for (auto& t : s.attach) t += offset;
    strata.push_back(std::move(s));
  }
  StrictOrder order(strata.size());
  for (const auto& [i, j] : a.order().pairs()) order.set(i, j);
  for (const auto& [i, j] : b.order().pairs()) order.set(i + offset, j + offset);
  return StratSpace(a.group(), a.acting(), std::move(strata), std::move(order),
                    a.compact() && b.compact());
}

// ---------------------------------------------------------------------------

namespace {

/// Labels of X/K: a subgroup H of G becomes KH/K in G/K. Applied to links
/// this is the passage L_S -> L_S/(G_S n K) with G_S/(G_S n K) = KG_S/K.
StratSpace quotient_labels(const StratSpace& x, const QuotientPresentation& q) {
  const auto& k = q.kernel;
  auto label = [&](const Subgroup& h) { return push_subgroup(q, join(k, h)); };
  std::vector<Stratum> strata;
  strata.reserve(x.size());
  for (const auto& s : x.strata()) {
    Stratum t{s.name, s.dim, label(s.isotropy), nullptr, s.attach};
    if (s.link) t.link = std::make_shared<const StratSpace>(quotient_labels(*s.link, q));
    strata.push_back(std::move(t));
  }
  return StratSpace(q.target, label(x.acting()), std::move(strata), x.order(), x.compact());
}

}  // namespace

OrbitSpace orbit_space(const StratSpace& x, const Subgroup& k) {
  if (!(k.ambient() == x.group()))
    throw Error(ErrorKind::NotSubgroup, "quotient subgroup is not a subgroup of " +
                                            x.group().to_string());
  auto q = quotient(x.group(), k);
  auto space = quotient_labels(x, q);
  std::vector<std::size_t> bij(x.size());
  std::iota(bij.begin(), bij.end(), std::size_t{0});
  return OrbitSpace{std::move(space), std::move(bij), std::move(q)};
}

}  // namespace gstrat
