#pragma once

// Brute-force reference computations. Nothing here calls into the library's
// group arithmetic; spaces are only read through their public accessors.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "gstrat/space.hpp"

namespace oracle {

using Vec = std::vector<std::int64_t>;
using Mask = std::uint64_t;  // subsets of groups with at most 64 elements

/// Explicit Cayley table of Z_{n1} x ... x Z_{nk}.
struct BruteGroup {
  Vec moduli;
  std::vector<Vec> elems;
  std::map<Vec, int> index;
  std::vector<std::vector<int>> add;
  int zero = 0;

  explicit BruteGroup(Vec m) : moduli(std::move(m)) {
    Vec cur(moduli.size(), 0);
    // odometer over residues
    while (true) {
      index[cur] = static_cast<int>(elems.size());
      elems.push_back(cur);
      std::size_t i = moduli.size();
      while (i > 0) {
        --i;
        if (++cur[i] < moduli[i]) break;
        cur[i] = 0;
        if (i == 0) goto done;
      }
      if (moduli.empty()) break;
    }
  done:
    const auto n = elems.size();
    add.assign(n, std::vector<int>(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        Vec s(moduli.size());
        for (std::size_t i = 0; i < s.size(); ++i) s[i] = (elems[a][i] + elems[b][i]) % moduli[i];
        add[a][b] = index.at(s);
      }
    zero = index.at(Vec(moduli.size(), 0));
  }

  int size() const { return static_cast<int>(elems.size()); }

  int order_of(int g) const {
    int k = 1;
    for (int x = g; x != zero; x = add[x][g]) ++k;
    return k;
  }
};

inline Mask bit(int i) { return Mask{1} << i; }

/// Smallest subgroup containing `start` and `gens`, by breadth-first search.
inline Mask closure(const BruteGroup& g, Mask start, const std::vector<int>& gens) {
  Mask seen = start | bit(g.zero);
  std::vector<int> queue;
  for (int i = 0; i < g.size(); ++i)
    if (seen & bit(i)) queue.push_back(i);
  std::vector<int> all_gens = gens;
  for (int i = 0; i < g.size(); ++i)
    if (start & bit(i)) all_gens.push_back(i);
  for (std::size_t q = 0; q < queue.size(); ++q)
    for (int s : all_gens) {
      const int y = g.add[queue[q]][s];
      if (!(seen & bit(y))) {
        seen |= bit(y);
        queue.push_back(y);
      }
    }
  return seen;
}

/// Every subgroup, found by growing subgroups one element at a time.
inline std::vector<Mask> all_subgroups(const BruteGroup& g) {
  std::set<Mask> found{bit(g.zero)};
  std::vector<Mask> work{bit(g.zero)};
  while (!work.empty()) {
    const Mask h = work.back();
    work.pop_back();
    for (int x = 0; x < g.size(); ++x) {
      if (h & bit(x)) continue;
      const Mask bigger = closure(g, h, {x});
      if (found.insert(bigger).second) work.push_back(bigger);
    }
  }
  return {found.begin(), found.end()};
}

inline int popcount(Mask m) { return __builtin_popcountll(m); }

/// Coset of each element modulo K; coset ids are assigned in index order.
inline std::vector<int> coset_ids(const BruteGroup& g, Mask k) {
  std::vector<int> id(g.size(), -1);
  int next = 0;
  for (int x = 0; x < g.size(); ++x) {
    if (id[x] >= 0) continue;
    for (int y = 0; y < g.size(); ++y)
      if (k & bit(y)) id[g.add[x][y]] = next;
    ++next;
  }
  return id;
}

/// Multiset of element orders; determines a finite abelian group up to isomorphism.
using OrderProfile = std::map<int, int>;

inline OrderProfile profile(const BruteGroup& g) {
  OrderProfile p;
  for (int x = 0; x < g.size(); ++x) ++p[g.order_of(x)];
  return p;
}

/// Order profile of G/K read off the coset table.
inline OrderProfile quotient_profile(const BruteGroup& g, Mask k) {
  const auto id = coset_ids(g, k);
  OrderProfile p;
  std::set<int> done;
  for (int x = 0; x < g.size(); ++x) {
    if (!done.insert(id[x]).second) continue;
    int n = 1;
    for (int y = x; !(k & bit(y)); y = g.add[y][x]) ++n;
    ++p[n];
  }
  return p;
}

/// Number of cosets of K meeting H, i.e. |KH/K|.
inline int cosets_meeting(const BruteGroup& g, Mask k, Mask h) {
  const auto id = coset_ids(g, k);
  std::set<int> hit;
  for (int x = 0; x < g.size(); ++x)
    if (h & bit(x)) hit.insert(id[x]);
  return static_cast<int>(hit.size());
}

/// Every finite abelian group of order <= max_order, one per invariant-factor
/// shape d1 | d2 | ... ; the trivial group is {1}.
inline std::vector<Vec> abelian_groups(std::int64_t max_order) {
  std::vector<Vec> out{{1}};
  std::vector<Vec> stack;
  for (std::int64_t d = 2; d <= max_order; ++d) stack.push_back({d});
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    out.push_back(v);
    const auto prod = std::accumulate(v.begin(), v.end(), std::int64_t{1}, std::multiplies<>());
    for (std::int64_t d = v.back(); prod * d <= max_order; d += v.back()) {
      auto w = v;
      w.push_back(d);
      stack.push_back(w);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Length of the longest strict chain, by enumerating every chain.
inline int chain_depth(const gstrat::StratSpace& x) {
  int best = 0;
  std::vector<std::size_t> chain;
  auto extend = [&](auto& self, std::size_t top) -> void {
    best = std::max(best, static_cast<int>(chain.size()) - 1);
    for (std::size_t s = 0; s < x.size(); ++s)
      if (x.less(top, s)) {
        chain.push_back(s);
        self(self, s);
        chain.pop_back();
      }
  };
  for (std::size_t s = 0; s < x.size(); ++s) {
    chain.assign(1, s);
    extend(extend, s);
  }
  return best;
}

/// Longest chain strictly below s.
inline int chain_height(const gstrat::StratSpace& x, std::size_t s) {
  int best = 0;
  for (std::size_t t = 0; t < x.size(); ++t)
    if (x.less(t, s)) best = std::max(best, 1 + chain_height(x, t));
  return best;
}

inline bool minimal(const gstrat::StratSpace& x, std::size_t s) {
  for (std::size_t t = 0; t < x.size(); ++t)
    if (x.less(t, s)) return false;
  return true;
}

inline bool maximal(const gstrat::StratSpace& x, std::size_t s) {
  for (std::size_t t = 0; t < x.size(); ++t)
    if (x.less(s, t)) return false;
  return true;
}

// -- determinants and minors ----------------------------------------------------

/// Fraction-free Gaussian elimination.
inline std::int64_t bareiss_det(std::vector<Vec> a) {
  const auto n = a.size();
  if (n == 0) return 1;
  std::int64_t sign = 1;
  std::int64_t prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

inline void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out,
                    std::vector<std::size_t>& cur, std::size_t from = 0) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, out, cur, i + 1);
    cur.pop_back();
  }
}

/// Invariant factors as quotients of determinantal divisors (gcd of k x k minors).
inline Vec determinantal_invariants(const std::vector<Vec>& m) {
  const auto rows = m.size();
  const auto cols = rows ? m[0].size() : 0;
  Vec out;
  std::int64_t prev = 1;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(rows, k, rs, cur);
    subsets(cols, k, cs, cur);
    std::int64_t g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        std::vector<Vec> sub(k, Vec(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[r[i]][c[j]];
        g = std::gcd(g, bareiss_det(sub));
      }
    if (g == 0) {
      out.push_back(0);
      prev = 0;
      continue;
    }
    out.push_back(prev == 0 ? 0 : g / prev);
    prev = g;
  }
  return out;
}

}  // namespace oracle
