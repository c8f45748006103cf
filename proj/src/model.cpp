#include "gstrat/model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "gstrat/error.hpp"

namespace gstrat::model {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::size_t npos = static_cast<std::size_t>(-1);

double wrap_angle(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0) a += kTwoPi;
  if (a >= kTwoPi - kCanonicalTol) a = 0.0;
  return a;
}

double angle_gap(double a, double b) {
  const auto d = std::fabs(wrap_angle(a) - wrap_angle(b));
  return std::min(d, kTwoPi - d);
}

/// Position of the unique non-Euclidean factor of a product, npos if none.
std::size_t active_factor(const Term& t) {
  for (std::size_t i = 0; i < t.children.size(); ++i)
    if (t.children[i].kind != Kind::Euclidean) return i;
  return npos;
}

std::int64_t cyclic_order(const Term& t) {
  switch (t.kind) {
    case Kind::Circle:
    case Kind::RotSphere: return t.param;
    case Kind::Cone: return cyclic_order(t.children[0]);
    case Kind::Product: {
      const auto f = active_factor(t);
      return f == npos ? 1 : cyclic_order(t.children[f]);
    }
    case Kind::Euclidean: return 1;
  }
  return 1;
}

[[noreturn]] void not_singular(std::size_t s) {
  throw Error(ErrorKind::NotSingular, "stratum " + std::to_string(s) + " is not singular");
}

void require_in_chart(bool ok, std::size_t s) {
  if (!ok)
    throw Error(ErrorKind::OutOfChart,
                "point is outside the tube chart of stratum " + std::to_string(s));
}

StratSpace skeleton_of(const Term& t) {
  switch (t.kind) {
    case Kind::Euclidean: return euclidean(static_cast<int>(t.param));
    case Kind::Circle: return circle(t.param);
    case Kind::RotSphere: return rot_sphere(t.param);
    case Kind::Cone:
      if (!t.children[0].compact())
        throw Error(ErrorKind::ConeOverNoncompact,
                    "cannot cone over non-compact " + t.children[0].to_string());
      return cone(skeleton_of(t.children[0]));
    case Kind::Product: {
      int flat = 0;
      for (const auto& c : t.children)
        if (c.kind == Kind::Euclidean) flat += static_cast<int>(c.param);
      const auto f = active_factor(t);
      if (f == npos) return euclidean(flat);
      return product(flat, skeleton_of(t.children[f]));
    }
  }
  throw Error(ErrorKind::InvalidArgument, "unknown term");
}

void check_term(const Term& t) {
  switch (t.kind) {
    case Kind::Euclidean:
      if (t.param < 0) throw Error(ErrorKind::NegativeDimension, "euclidean(k) needs k >= 0");
      break;
    case Kind::Circle:
    case Kind::RotSphere:
      if (t.param < 1) throw Error(ErrorKind::InvalidArgument, "group order must be >= 1");
      break;
    case Kind::Cone:
      if (t.children.size() != 1) throw Error(ErrorKind::InvalidArgument, "cone takes one term");
      check_term(t.children[0]);
      break;
    case Kind::Product: {
      if (t.children.empty()) throw Error(ErrorKind::InvalidArgument, "empty product");
      std::size_t active = 0;
      for (const auto& c : t.children) {
        check_term(c);
        active += c.kind != Kind::Euclidean;
      }
      if (active > 1)
        throw Error(ErrorKind::Unsupported,
                    "products support at most one non-Euclidean factor");
      break;
    }
  }
}

// -- recursive maps over (term, point, local stratum) ---------------------------

double radium_rec(const Term& t, const Point& x, std::size_t s) {
  switch (t.kind) {
    case Kind::Cone:
      if (s == 0) return x.coords[0];
      return radium_rec(t.children[0], x.children[0], s - 1);
    case Kind::Product: {
      const auto f = active_factor(t);
      if (f == npos) not_singular(s);
      return radium_rec(t.children[f], x.children[f], s);
    }
    case Kind::RotSphere:
      if (s == 0) return x.coords[1];
      if (s == 1) return kPi - x.coords[1];
      not_singular(s);
    default: not_singular(s);
  }
}

bool chart_rec(const Term& t, const Point& x, std::size_t s) {
  switch (t.kind) {
    case Kind::Cone:
      if (s == 0) return true;
      return x.coords[0] > 0.0 && chart_rec(t.children[0], x.children[0], s - 1);
    case Kind::Product: {
      const auto f = active_factor(t);
      if (f == npos) not_singular(s);
      return chart_rec(t.children[f], x.children[f], s);
    }
    case Kind::RotSphere:
      if (s == 0) return x.coords[1] < kPi - kCanonicalTol;
      if (s == 1) return x.coords[1] > kCanonicalTol;
      not_singular(s);
    default: not_singular(s);
  }
}

Point projection_rec(const Term& t, const Point& x, std::size_t s) {
  switch (t.kind) {
    case Kind::Cone:
      if (s == 0) return basepoint(t);
      {
        Point y = x;
        y.children[0] = projection_rec(t.children[0], x.children[0], s - 1);
        return y;
      }
    case Kind::Product: {
      const auto f = active_factor(t);
      if (f == npos) not_singular(s);
      Point y = x;
      y.children[f] = projection_rec(t.children[f], x.children[f], s);
      return y;
    }
    case Kind::RotSphere:
      if (s == 0) return Point{Kind::RotSphere, {0.0, 0.0}, {}};
      if (s == 1) return Point{Kind::RotSphere, {0.0, kPi}, {}};
      not_singular(s);
    default: not_singular(s);
  }
}

Point radial_rec(const Term& t, double r, const Point& x, std::size_t s) {
  switch (t.kind) {
    case Kind::Cone:
      if (s == 0) {
        Point y = x;
        y.coords[0] *= r;
        return canonical(t, std::move(y));
      }
      {
        Point y = x;
        y.children[0] = radial_rec(t.children[0], r, x.children[0], s - 1);
        return y;
      }
    case Kind::Product: {
      const auto f = active_factor(t);
      if (f == npos) not_singular(s);
      Point y = x;
      y.children[f] = radial_rec(t.children[f], r, x.children[f], s);
      return y;
    }
    case Kind::RotSphere: {
      if (s > 1) not_singular(s);
      const double rho = (s == 0 ? x.coords[1] : kPi - x.coords[1]) * r;
      require_in_chart(rho < kPi, s);
      Point y = x;
      y.coords[1] = s == 0 ? rho : kPi - rho;
      return canonical(t, std::move(y));
    }
    default: not_singular(s);
  }
}

Point chart_rec_map(const Term& t, std::size_t s, std::vector<double> along, const Point& link,
                    double radius) {
  switch (t.kind) {
    case Kind::Cone:
      if (s == 0) {
        if (!along.empty()) throw Error(ErrorKind::InvalidArgument, "vertex has no coordinates");
        return canonical(t, Point{Kind::Cone, {radius}, {link}});
      }
      {
        if (along.empty()) throw Error(ErrorKind::InvalidArgument, "missing cone radius");
        const double outer = along.back();
        along.pop_back();
        if (outer <= 0.0) throw Error(ErrorKind::OutOfChart, "stratum point needs r > 0");
        return Point{Kind::Cone,
                     {outer},
                     {chart_rec_map(t.children[0], s - 1, std::move(along), link, radius)}};
      }
    case Kind::Product: {
      const auto f = active_factor(t);
      if (f == npos) not_singular(s);
      Point y{Kind::Product, {}, {}};
      std::size_t used = 0;
      for (const auto& c : t.children) {
        if (c.kind != Kind::Euclidean) continue;
        const auto k = static_cast<std::size_t>(c.param);
        if (used + k > along.size()) throw Error(ErrorKind::InvalidArgument, "short coordinates");
        used += k;
      }
      std::size_t pos = 0;
      for (std::size_t i = 0; i < t.children.size(); ++i) {
        const auto& c = t.children[i];
        if (i == f) {
          y.children.push_back(chart_rec_map(
              c, s, std::vector<double>(along.begin() + static_cast<std::ptrdiff_t>(used), along.end()),
              link, radius));
          continue;
        }
        const auto k = static_cast<std::size_t>(c.param);
        y.children.push_back(Point{Kind::Euclidean,
                                   std::vector<double>(along.begin() + static_cast<std::ptrdiff_t>(pos),
                                                       along.begin() + static_cast<std::ptrdiff_t>(pos + k)),
                                   {}});
        pos += k;
      }
      return y;
    }
    case Kind::RotSphere: {
      if (s > 1) not_singular(s);
      if (!along.empty()) throw Error(ErrorKind::InvalidArgument, "poles have no coordinates");
      if (radius < 0.0 || radius >= kPi) throw Error(ErrorKind::OutOfChart, "radius beyond pole chart");
      const double lon = link.coords.at(0);
      return canonical(t, Point{Kind::RotSphere, {lon, s == 0 ? radius : kPi - radius}, {}});
    }
    default: not_singular(s);
  }
}

void chart_inverse_rec(const Term& t, std::size_t s, const Point& x, ChartCoords& out) {
  switch (t.kind) {
    case Kind::Cone:
      if (s == 0) {
        out.radius = x.coords[0];
        out.link = x.children[0];
        return;
      }
      chart_inverse_rec(t.children[0], s - 1, x.children[0], out);
      out.along.push_back(x.coords[0]);
      return;
    case Kind::Product: {
      const auto f = active_factor(t);
      if (f == npos) not_singular(s);
      std::vector<double> flat;
      for (std::size_t i = 0; i < t.children.size(); ++i)
        if (i != f) flat.insert(flat.end(), x.children[i].coords.begin(), x.children[i].coords.end());
      ChartCoords inner;
      chart_inverse_rec(t.children[f], s, x.children[f], inner);
      flat.insert(flat.end(), inner.along.begin(), inner.along.end());
      out.along = std::move(flat);
      out.link = std::move(inner.link);
      out.radius = inner.radius;
      return;
    }
    case Kind::RotSphere:
      if (s > 1) not_singular(s);
      out.radius = s == 0 ? x.coords[1] : kPi - x.coords[1];
      out.link = Point{Kind::Circle, {out.radius > 0.0 ? x.coords[0] : 0.0}, {}};
      return;
    default: not_singular(s);
  }
}

Term link_rec(const Term& t, std::size_t s) {
  switch (t.kind) {
    case Kind::Cone:
      if (s == 0) return t.children[0];
      return link_rec(t.children[0], s - 1);
    case Kind::Product: {
      const auto f = active_factor(t);
      if (f == npos) not_singular(s);
      return link_rec(t.children[f], s);
    }
    case Kind::RotSphere:
      if (s > 1) not_singular(s);
      return Term::circle(t.param);
    default: not_singular(s);
  }
}

std::size_t locate_rec(const Term& t, const Point& x) {
  switch (t.kind) {
    case Kind::Euclidean:
    case Kind::Circle: return 0;
    case Kind::RotSphere:
      if (x.coords[1] <= kCanonicalTol) return 0;
      if (x.coords[1] >= kPi - kCanonicalTol) return 1;
      return 2;
    case Kind::Cone:
      if (x.coords[0] <= 0.0) return 0;
      return 1 + locate_rec(t.children[0], x.children[0]);
    case Kind::Product: {
      const auto f = active_factor(t);
      return f == npos ? 0 : locate_rec(t.children[f], x.children[f]);
    }
  }
  return 0;
}

Point act_rec(const Term& t, std::int64_t g, const Point& x) {
  switch (t.kind) {
    case Kind::Euclidean: return x;
    case Kind::Circle: {
      Point y = x;
      y.coords[0] = wrap_angle(x.coords[0] + kTwoPi * static_cast<double>(g) / static_cast<double>(t.param));
      return y;
    }
    case Kind::RotSphere: {
      Point y = x;
      y.coords[0] = wrap_angle(x.coords[0] + kTwoPi * static_cast<double>(g) / static_cast<double>(t.param));
      return canonical(t, std::move(y));
    }
    case Kind::Cone: {
      if (x.coords[0] <= 0.0) return x;
      Point y = x;
      y.children[0] = act_rec(t.children[0], g, x.children[0]);
      return y;
    }
    case Kind::Product: {
      Point y = x;
      const auto f = active_factor(t);
      if (f != npos) y.children[f] = act_rec(t.children[f], g, x.children[f]);
      return y;
    }
  }
  return x;
}

Term quotient_term(const Term& t, std::int64_t d) {
  switch (t.kind) {
    case Kind::Euclidean: return t;
    case Kind::Circle: return Term::circle(t.param / d);
    case Kind::RotSphere: return Term::rotsphere(t.param / d);
    case Kind::Cone: return Term::cone(quotient_term(t.children[0], d));
    case Kind::Product: {
      Term q = t;
      for (auto& c : q.children) c = quotient_term(c, d);
      return q;
    }
  }
  return t;
}

/// Angle class modulo 2pi/d, rescaled to a full turn.
double reduce_angle(double a, std::int64_t d) {
  const double sector = kTwoPi / static_cast<double>(d);
  double r = std::fmod(wrap_angle(a), sector);
  if (r < 0) r += sector;
  if (sector - r <= kCanonicalTol) r = 0.0;
  return wrap_angle(r * static_cast<double>(d));
}

Point orbit_rec(const Term& t, const Point& x, std::int64_t d) {
  switch (t.kind) {
    case Kind::Euclidean: return x;
    case Kind::Circle: return Point{Kind::Circle, {reduce_angle(x.coords[0], d)}, {}};
    case Kind::RotSphere: {
      Point y = x;
      y.coords[0] = reduce_angle(x.coords[0], d);
      return canonical(quotient_term(t, d), std::move(y));
    }
    case Kind::Cone: {
      if (x.coords[0] <= 0.0) return basepoint(quotient_term(t, d));
      return Point{Kind::Cone, {x.coords[0]}, {orbit_rec(t.children[0], x.children[0], d)}};
    }
    case Kind::Product: {
      Point y = x;
      for (std::size_t i = 0; i < t.children.size(); ++i)
        y.children[i] = orbit_rec(t.children[i], x.children[i], d);
      return y;
    }
  }
  return x;
}

std::size_t uniform_count(const Term& t) {
  switch (t.kind) {
    case Kind::Euclidean: return static_cast<std::size_t>(t.param);
    case Kind::Circle: return 1;
    case Kind::RotSphere: return 2;
    case Kind::Cone: return 1 + uniform_count(t.children[0]);
    case Kind::Product: {
      std::size_t n = 0;
      for (const auto& c : t.children) n += uniform_count(c);
      return n;
    }
  }
  return 0;
}

Point sample_rec(const Term& t, const std::vector<double>& u, std::size_t& pos) {
  switch (t.kind) {
    case Kind::Euclidean: {
      Point p{Kind::Euclidean, {}, {}};
      for (std::int64_t i = 0; i < t.param; ++i) p.coords.push_back(6.0 * u[pos++] - 3.0);
      return p;
    }
    case Kind::Circle: return Point{Kind::Circle, {kTwoPi * u[pos++]}, {}};
    case Kind::RotSphere: {
      const double lon = kTwoPi * u[pos++];
      const double colat = kPi * u[pos++];
      return canonical(t, Point{Kind::RotSphere, {lon, colat}, {}});
    }
    case Kind::Cone: {
      const double r = 2.0 * u[pos++];
      Point inner = sample_rec(t.children[0], u, pos);
      return canonical(t, Point{Kind::Cone, {r}, {std::move(inner)}});
    }
    case Kind::Product: {
      Point p{Kind::Product, {}, {}};
      for (const auto& c : t.children) p.children.push_back(sample_rec(c, u, pos));
      return p;
    }
  }
  return {};
}

double radical_inverse(std::uint64_t i, std::uint64_t base) {
  double inv = 1.0 / static_cast<double>(base);
  double f = inv;
  double out = 0.0;
  while (i > 0) {
    out += f * static_cast<double>(i % base);
    i /= base;
    f *= inv;
  }
  return out;
}

constexpr std::uint64_t kPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                                     41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89};

}  // namespace

// -- Term -----------------------------------------------------------------------

Term Term::euclidean(int k) { return Term{Kind::Euclidean, k, {}}; }
Term Term::circle(std::int64_t m) { return Term{Kind::Circle, m, {}}; }
Term Term::rotsphere(std::int64_t m) { return Term{Kind::RotSphere, m, {}}; }
Term Term::cone(Term inner) { return Term{Kind::Cone, 0, {std::move(inner)}}; }
Term Term::product(std::vector<Term> factors) { return Term{Kind::Product, 0, std::move(factors)}; }

bool Term::compact() const {
  switch (kind) {
    case Kind::Euclidean: return param == 0;
    case Kind::Circle:
    case Kind::RotSphere: return true;
    case Kind::Cone: return false;
    case Kind::Product:
      return std::all_of(children.begin(), children.end(), [](const Term& c) { return c.compact(); });
  }
  return false;
}

std::string Term::to_string() const {
  switch (kind) {
    case Kind::Euclidean: return "euclidean(" + std::to_string(param) + ")";
    case Kind::Circle: return "circle(" + std::to_string(param) + ")";
    case Kind::RotSphere: return "rotsphere(" + std::to_string(param) + ")";
    case Kind::Cone: return "cone(" + children[0].to_string() + ")";
    case Kind::Product: {
      std::string s = "product(";
      for (std::size_t i = 0; i < children.size(); ++i) s += (i ? ", " : "") + children[i].to_string();
      return s + ")";
    }
  }
  return "?";
}

// -- RealizedSpace ----------------------------------------------------------------

RealizedSpace::RealizedSpace(Term term, StratSpace skeleton, std::vector<Tube> tubes)
    : term_(std::move(term)), skeleton_(std::move(skeleton)), tubes_(std::move(tubes)) {}

const Tube& RealizedSpace::tube(std::size_t stratum) const {
  for (const auto& t : tubes_)
    if (t.stratum == stratum) return t;
  not_singular(stratum);
}

RealizedSpace RealizedSpace::with_tube_epsilon(std::size_t stratum, double epsilon) const {
  if (!(epsilon > 0.0)) throw Error(ErrorKind::InvalidArgument, "tube radius must be positive");
  auto tubes = tubes_;
  bool found = false;
  for (auto& t : tubes)
    if (t.stratum == stratum) {
      t.epsilon = epsilon;
      found = true;
    }
  if (!found) not_singular(stratum);
  return RealizedSpace(term_, skeleton_, std::move(tubes));
}

RealizedSpace realize(const Term& term) {
  check_term(term);
  auto skeleton = skeleton_of(term);
  std::vector<Tube> tubes;
  for (std::size_t s = 0; s < skeleton.size(); ++s)
    if (skeleton.stratum(s).singular()) tubes.push_back({s, 0.5});
  return RealizedSpace(term, std::move(skeleton), std::move(tubes));
}

// -- points -------------------------------------------------------------------------

Point basepoint(const Term& t) {
  switch (t.kind) {
    case Kind::Euclidean:
      return Point{Kind::Euclidean, std::vector<double>(static_cast<std::size_t>(t.param), 0.0), {}};
    case Kind::Circle: return Point{Kind::Circle, {0.0}, {}};
    case Kind::RotSphere: return Point{Kind::RotSphere, {0.0, 0.0}, {}};
    case Kind::Cone: return Point{Kind::Cone, {0.0}, {basepoint(t.children[0])}};
    case Kind::Product: {
      Point p{Kind::Product, {}, {}};
      for (const auto& c : t.children) p.children.push_back(basepoint(c));
      return p;
    }
  }
  return {};
}

Point canonical(const Term& t, Point x) {
  switch (t.kind) {
    case Kind::Euclidean: break;
    case Kind::Circle: x.coords[0] = wrap_angle(x.coords[0]); break;
    case Kind::RotSphere:
      x.coords[1] = std::clamp(x.coords[1], 0.0, kPi);
      if (x.coords[1] <= kCanonicalTol) x.coords = {0.0, 0.0};
      else if (x.coords[1] >= kPi - kCanonicalTol) x.coords = {0.0, kPi};
      else x.coords[0] = wrap_angle(x.coords[0]);
      break;
    case Kind::Cone:
      if (x.coords[0] <= 0.0) return basepoint(t);
      x.children[0] = canonical(t.children[0], std::move(x.children[0]));
      break;
    case Kind::Product:
      for (std::size_t i = 0; i < t.children.size(); ++i)
        x.children[i] = canonical(t.children[i], std::move(x.children[i]));
      break;
  }
  return x;
}

bool approx_equal(const Term& t, const Point& a, const Point& b, double tol) {
  switch (t.kind) {
    case Kind::Euclidean:
      for (std::size_t i = 0; i < a.coords.size(); ++i)
        if (std::fabs(a.coords[i] - b.coords[i]) > tol) return false;
      return true;
    case Kind::Circle: return angle_gap(a.coords[0], b.coords[0]) <= tol;
    case Kind::RotSphere: {
      if (std::fabs(a.coords[1] - b.coords[1]) > tol) return false;
      // longitude is immaterial at the poles
      const double c = std::min(a.coords[1], kPi - a.coords[1]);
      return c <= tol || angle_gap(a.coords[0], b.coords[0]) * std::sin(a.coords[1]) <= tol;
    }
    case Kind::Cone:
      if (std::fabs(a.coords[0] - b.coords[0]) > tol) return false;
      if (a.coords[0] <= tol && b.coords[0] <= tol) return true;
      return approx_equal(t.children[0], a.children[0], b.children[0], tol);
    case Kind::Product:
      for (std::size_t i = 0; i < t.children.size(); ++i)
        if (!approx_equal(t.children[i], a.children[i], b.children[i], tol)) return false;
      return true;
  }
  return false;
}

std::string to_string(const Point& x) {
  std::ostringstream os;
  os.precision(6);
  switch (x.kind) {
    case Kind::Euclidean:
    case Kind::Circle:
    case Kind::RotSphere:
      os << '(';
      for (std::size_t i = 0; i < x.coords.size(); ++i) os << (i ? "," : "") << x.coords[i];
      os << ')';
      break;
    case Kind::Cone: os << '[' << to_string(x.children[0]) << ", r=" << x.coords[0] << ']'; break;
    case Kind::Product:
      os << '<';
      for (std::size_t i = 0; i < x.children.size(); ++i) os << (i ? " " : "") << to_string(x.children[i]);
      os << '>';
      break;
  }
  return os.str();
}

std::size_t locate(const RealizedSpace& space, const Point& x) {
  return locate_rec(space.term(), x);
}

Point act(const RealizedSpace& space, const GroupElement& g, const Point& x) {
  if (!space.group().contains(g))
    throw Error(ErrorKind::GroupMismatch,
                "element " + g.to_string() + " does not act on " + space.term().to_string());
  return act_rec(space.term(), g.residues[0], x);
}

// -- tubes ----------------------------------------------------------------------------

double radium(const RealizedSpace& space, std::size_t s, const Point& x) {
  space.tube(s);
  return radium_rec(space.term(), x, s);
}

bool in_chart(const RealizedSpace& space, std::size_t s, const Point& x) {
  space.tube(s);
  return chart_rec(space.term(), x, s);
}

bool in_tube(const RealizedSpace& space, std::size_t s, const Point& x) {
  const auto& tube = space.tube(s);
  return chart_rec(space.term(), x, s) && radium_rec(space.term(), x, s) < tube.epsilon;
}

Point projection(const RealizedSpace& space, std::size_t s, const Point& x) {
  require_in_chart(in_chart(space, s, x), s);
  return projection_rec(space.term(), x, s);
}

Point radial(const RealizedSpace& space, double r, const Point& x, std::size_t s) {
  if (!(r > 0.0)) throw Error(ErrorKind::InvalidArgument, "radial action needs r > 0");
  require_in_chart(in_chart(space, s, x), s);
  return radial_rec(space.term(), r, x, s);
}

Point chart(const RealizedSpace& space, std::size_t s, const ChartCoords& c) {
  space.tube(s);
  if (c.radius < 0.0) throw Error(ErrorKind::InvalidArgument, "negative cone radius");
  return chart_rec_map(space.term(), s, c.along, c.link, c.radius);
}

ChartCoords chart_inverse(const RealizedSpace& space, std::size_t s, const Point& x) {
  require_in_chart(in_chart(space, s, x), s);
  ChartCoords out;
  chart_inverse_rec(space.term(), s, x, out);
  return out;
}

Term link_term(const RealizedSpace& space, std::size_t s) {
  space.tube(s);
  return link_rec(space.term(), s);
}

Point tube_unfold(const RealizedSpace& space, std::size_t s, const Point& e, double t) {
  require_in_chart(in_chart(space, s, e), s);
  const double rho = radium_rec(space.term(), e, s);
  if (std::fabs(rho - 1.0) > kCanonicalTol)
    throw Error(ErrorKind::InvalidArgument, "point is not on the unitary sub-bundle");
  if (t == 0.0) return projection_rec(space.term(), e, s);
  return radial_rec(space.term(), std::fabs(t), e, s);
}

std::vector<std::pair<Point, double>> tube_unfold_preimage(const RealizedSpace& space,
                                                          std::size_t s, const Point& x) {
  require_in_chart(in_chart(space, s, x), s);
  const double rho = radium_rec(space.term(), x, s);
  if (rho <= 0.0) return {};
  auto e = radial_rec(space.term(), 1.0 / rho, x, s);
  return {{e, rho}, {e, -rho}};
}

std::pair<Point, int> glue(const RealizedSpace& space, std::size_t s, const Point& x, double t) {
  if (t == 0.0) throw Error(ErrorKind::InvalidArgument, "gluing is defined for t != 0 only");
  require_in_chart(in_chart(space, s, x), s);
  if (std::fabs(radium_rec(space.term(), x, s) - 1.0) > kCanonicalTol)
    throw Error(ErrorKind::InvalidArgument, "point is not on the unitary sub-bundle");
  return {radial_rec(space.term(), std::fabs(t), x, s), t > 0 ? 1 : -1};
}

// -- orbit spaces -------------------------------------------------------------------------

namespace {

std::int64_t orbit_divisor(const RealizedSpace& space, const Subgroup& k) {
  if (!(k.ambient() == space.group()))
    throw Error(ErrorKind::GroupMismatch, "subgroup of " + k.ambient().to_string() +
                                              " does not act on " + space.term().to_string());
  return static_cast<std::int64_t>(k.order());
}

}  // namespace

RealizedSpace orbit_space(const RealizedSpace& space, const Subgroup& k) {
  const auto d = orbit_divisor(space, k);
  auto q = realize(quotient_term(space.term(), d));
  // carry tube radii over
  for (const auto& t : space.tubes()) q = q.with_tube_epsilon(t.stratum, t.epsilon);
  return q;
}

Point orbit_point(const RealizedSpace& space, const Point& x, const Subgroup& k) {
  const auto d = orbit_divisor(space, k);
  return orbit_rec(space.term(), x, d);
}

GroupElement orbit_element(const RealizedSpace& space, const GroupElement& g, const Subgroup& k) {
  const auto d = orbit_divisor(space, k);
  space.group().check(g);
  const auto m = cyclic_order(space.term()) / d;
  return GroupElement{g.residues[0] % m};
}

// -- sampling ------------------------------------------------------------------------------

PointSampler::PointSampler(const Term& term, std::uint64_t seed)
    : term_(term), dims_(uniform_count(term)), rng_(seed) {
  shift_.resize(std::size(kPrimes));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (auto& s : shift_) s = unit(rng_);
}

std::vector<double> PointSampler::next_uniforms(std::size_t n) {
  std::vector<double> u(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i < std::size(kPrimes)) {
      const double h = radical_inverse(index_, kPrimes[i]) + shift_[i];
      u[i] = h - std::floor(h);
    } else {
      u[i] = std::uniform_real_distribution<double>(0.0, 1.0)(rng_);
    }
  }
  ++index_;
  return u;
}

Point PointSampler::next() {
  const auto u = next_uniforms(dims_);
  std::size_t pos = 0;
  return sample_rec(term_, u, pos);
}

std::string ThomMatherReport::to_string() const {
  std::ostringstream os;
  os << (pass ? "pass" : "fail") << " samples=" << samples << " violations=" << violations;
  for (const auto& p : pairs)
    os << "\n  tubes " << p.a << "," << p.b << (p.comparable ? " comparable" : " incomparable")
       << " hits=" << p.hits;
  return os.str();
}

ThomMatherReport thom_mather_check(const RealizedSpace& space, std::size_t samples,
                                   std::uint64_t seed) {
  ThomMatherReport report;
  report.samples = samples;
  const auto& tubes = space.tubes();
  const auto& sk = space.skeleton();
  for (std::size_t i = 0; i < tubes.size(); ++i)
    for (std::size_t j = i + 1; j < tubes.size(); ++j) {
      const auto a = tubes[i].stratum, b = tubes[j].stratum;
      report.pairs.push_back({a, b, sk.less(a, b) || sk.less(b, a), 0});
    }
  if (report.pairs.empty()) return report;

  PointSampler sampler(space.term(), seed);
  std::vector<char> inside(tubes.size());
  for (std::size_t n = 0; n < samples; ++n) {
    const auto x = sampler.next();
    for (std::size_t i = 0; i < tubes.size(); ++i) inside[i] = in_tube(space, tubes[i].stratum, x);
    std::size_t p = 0;
    bool bad = false;
    for (std::size_t i = 0; i < tubes.size(); ++i)
      for (std::size_t j = i + 1; j < tubes.size(); ++j, ++p) {
        if (!(inside[i] && inside[j])) continue;
        ++report.pairs[p].hits;
        if (!report.pairs[p].comparable) bad = true;
      }
    if (bad) ++report.violations;
  }
  report.pass = report.violations == 0;
  return report;
}

}  // namespace gstrat::model
