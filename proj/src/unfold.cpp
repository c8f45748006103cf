#include "gstrat/unfold.hpp"

#include <numeric>

#include "gstrat/error.hpp"

namespace gstrat {

UnfoldStep elementary_unfold(const StratSpace& x) {
  require_valid(x);
  const auto n = x.size();
  constexpr auto none = static_cast<std::size_t>(-1);

  std::vector<Stratum> strata;
  std::vector<std::size_t> provenance;
  std::vector<std::size_t> duplicated;
  std::vector<std::size_t> image(n, none);  // surviving source index -> result index

  for (std::size_t s = 0; s < n; ++s) {
    const auto& st = x.stratum(s);
    const bool minimal = is_minimal(x, s);
    if (!minimal) {
      image[s] = strata.size();
      strata.push_back(st);
      provenance.push_back(s);
    } else if (is_maximal(x, s)) {
      // isolated stratum: no tube glues the two sheets of (X - min) x {+-1}
      duplicated.push_back(s);
      for (const char* sheet : {"+", "-"}) {
        Stratum copy = st;
        copy.name += sheet;
        strata.push_back(std::move(copy));
        provenance.push_back(s);
      }
    }
  }
  // links of surviving strata attach only to strata above them, which survive
  for (auto& st : strata)
    for (auto& a : st.attach) a = image[a];

  StrictOrder order(strata.size());
  for (std::size_t a = 0; a < strata.size(); ++a)
    for (std::size_t b = 0; b < strata.size(); ++b)
      if (x.less(provenance[a], provenance[b])) order.set(a, b);

  StratSpace result(x.group(), x.acting(), std::move(strata), std::move(order), x.compact());
  return UnfoldStep{x, std::move(result), std::move(provenance), std::move(duplicated)};
}

UnfoldChain unfold_all(const StratSpace& x) {
  require_valid(x);
  UnfoldChain chain;
  chain.total_provenance.resize(x.size());
  std::iota(chain.total_provenance.begin(), chain.total_provenance.end(), std::size_t{0});
  const int steps = depth(x);
  for (int i = 0; i < steps; ++i) {
    auto step = elementary_unfold(chain.result(x));
    std::vector<std::size_t> composed;
    composed.reserve(step.provenance.size());
    for (auto p : step.provenance) composed.push_back(chain.total_provenance[p]);
    chain.total_provenance = std::move(composed);
    chain.steps.push_back(std::move(step));
  }
  return chain;
}

std::optional<SpaceIso> check_unfold_quotient_commutes(const StratSpace& x, const Subgroup& k) {
  const auto quotient_first = elementary_unfold(orbit_space(x, k).space).result;
  const auto unfold_first = orbit_space(elementary_unfold(x).result, k).space;
  return is_isomorphic(quotient_first, unfold_first);
}

std::optional<SpaceIso> check_unfold_all_quotient_commutes(const StratSpace& x,
                                                          const Subgroup& k) {
  const auto q = orbit_space(x, k).space;
  const auto chain_q = unfold_all(q);
  const auto chain_x = unfold_all(x);
  const auto quotient_first = chain_q.result(q);
  const auto unfold_first = orbit_space(chain_x.result(x), k).space;
  return is_isomorphic(quotient_first, unfold_first);
}

}  // namespace gstrat
