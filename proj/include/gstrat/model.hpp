#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gstrat/abelian.hpp"
#include "gstrat/space.hpp"

namespace gstrat::model {

enum class Kind { Euclidean, Circle, RotSphere, Cone, Product };

/// Grammar of realizable model spaces.
struct Term {
  Kind kind = Kind::Euclidean;
  std::int64_t param = 0;  // k for Euclidean, m for Circle / RotSphere
  std::vector<Term> children;

  static Term euclidean(int k);
  static Term circle(std::int64_t m);
  static Term rotsphere(std::int64_t m);
  static Term cone(Term inner);
  static Term product(std::vector<Term> factors);

  bool compact() const;
  std::string to_string() const;
  bool operator==(const Term&) const = default;
};

/// Coordinate tree mirroring a Term.
///   Euclidean: coords = (x_1..x_k)        Circle: coords = (theta)
///   RotSphere: coords = (lon, colat)      Cone:   coords = (r), children = (inner)
///   Product:   children = factor points
/// Canonical form: angles in [0, 2pi), lon = 0 at the poles, and a cone
/// point with r = 0 carries the basepoint of its inner space.
struct Point {
  Kind kind = Kind::Euclidean;
  std::vector<double> coords;
  std::vector<Point> children;
};

struct Tube {
  std::size_t stratum;
  double epsilon;
};

/// Coordinates of a point of T_S in the trivial chart U x c(L_S): a point on
/// the stratum, a point of the link and the cone radius.
struct ChartCoords {
  std::vector<double> along;
  Point link;
  double radius = 0.0;
};

class RealizedSpace {
 public:
  RealizedSpace(Term term, StratSpace skeleton, std::vector<Tube> tubes);

  const Term& term() const noexcept { return term_; }
  const StratSpace& skeleton() const noexcept { return skeleton_; }
  const FiniteAbelianGroup& group() const noexcept { return skeleton_.group(); }
  const std::vector<Tube>& tubes() const noexcept { return tubes_; }
  /// Throws NotSingular for regular strata.
  const Tube& tube(std::size_t stratum) const;
  RealizedSpace with_tube_epsilon(std::size_t stratum, double epsilon) const;

 private:
  Term term_;
  StratSpace skeleton_;
  std::vector<Tube> tubes_;
};

/// Builds the skeleton and default tubes (epsilon 1/2 on every singular stratum).
RealizedSpace realize(const Term& term);

constexpr double kIdentityTol = 1e-9;
constexpr double kCanonicalTol = 1e-12;

Point basepoint(const Term& term);
Point canonical(const Term& term, Point x);
bool approx_equal(const Term& term, const Point& a, const Point& b, double tol = kIdentityTol);
std::string to_string(const Point& x);

/// Stratum of the skeleton containing x.
std::size_t locate(const RealizedSpace& space, const Point& x);

Point act(const RealizedSpace& space, const GroupElement& g, const Point& x);

/// The cone radius at the node realizing S's transverse direction; for the
/// poles of a RotSphere, the colatitude distance to the pole.
double radium(const RealizedSpace& space, std::size_t s, const Point& x);
/// Whether x lies in the chart domain of T_S (the full cone bundle).
bool in_chart(const RealizedSpace& space, std::size_t s, const Point& x);
/// Open tube {rho_S < epsilon} inside the chart domain.
bool in_tube(const RealizedSpace& space, std::size_t s, const Point& x);
/// tau_S: collapses the radius at S.
Point projection(const RealizedSpace& space, std::size_t s, const Point& x);
/// Radial action x -> r x. Throws InvalidArgument for r <= 0 and
/// OutOfChart when x or the result leaves the chart domain.
Point radial(const RealizedSpace& space, double r, const Point& x, std::size_t s);

Point chart(const RealizedSpace& space, std::size_t s, const ChartCoords& c);
ChartCoords chart_inverse(const RealizedSpace& space, std::size_t s, const Point& x);
/// Realization of the link L_S.
Term link_term(const RealizedSpace& space, std::size_t s);

/// L_{T_S}(e, t) = |t| e for t != 0 and tau_S(e) for t = 0, with e in E_S = rho^-1(1).
Point tube_unfold(const RealizedSpace& space, std::size_t s, const Point& e, double t);
/// The sheets (e, t) over x when rho_S(x) > 0; empty when x lies on S, whose
/// preimage is the whole fibre {(e, 0)}.
std::vector<std::pair<Point, double>> tube_unfold_preimage(const RealizedSpace& space,
                                                          std::size_t s, const Point& x);
/// theta(x, t) = (|t| x, sign t) for x in E_S, t != 0.
std::pair<Point, int> glue(const RealizedSpace& space, std::size_t s, const Point& x, double t);

/// Realized X/K: Circle(m)/Z_d = Circle(m/d), RotSphere likewise, cones and
/// products recursively.
RealizedSpace orbit_space(const RealizedSpace& space, const Subgroup& k);
/// Canonical representative of the K-orbit of x, as a point of orbit_space(space, K).
Point orbit_point(const RealizedSpace& space, const Point& x, const Subgroup& k);
/// Image of g in the acting group of orbit_space(space, K).
GroupElement orbit_element(const RealizedSpace& space, const GroupElement& g, const Subgroup& k);

/// Deterministic quasi-random points: a Halton sequence with a seeded
/// Cranley-Patterson shift.
class PointSampler {
 public:
  PointSampler(const Term& term, std::uint64_t seed);
  Point next();
  /// Next uniform vector in [0,1)^n, for callers that sample their own parameters.
  std::vector<double> next_uniforms(std::size_t n);

 private:
  Term term_;
  std::size_t dims_;
  std::uint64_t index_ = 1;
  std::mt19937_64 rng_;
  std::vector<double> shift_;
};

struct TubePair {
  std::size_t a;
  std::size_t b;
  bool comparable;
  std::size_t hits;  // sampled points in both tubes
};

struct ThomMatherReport {
  std::size_t samples = 0;
  std::vector<TubePair> pairs;
  bool pass = true;
  std::size_t violations = 0;  // points in two incomparable tubes

  std::string to_string() const;
};

ThomMatherReport thom_mather_check(const RealizedSpace& space, std::size_t samples,
                                   std::uint64_t seed = 0);

}  // namespace gstrat::model
