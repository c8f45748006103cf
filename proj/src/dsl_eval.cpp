#include <map>
#include <sstream>
#include <variant>

#include "gstrat/dsl.hpp"
#include "gstrat/emit.hpp"
#include "gstrat/error.hpp"
#include "gstrat/iso.hpp"
#include "gstrat/unfold.hpp"

namespace gstrat::dsl {

namespace {

struct IsoOutcome {
  std::optional<SpaceIso> witness;
};

using Value = std::variant<SpaceValue, std::int64_t, ValidationReport, IsoOutcome,
                           model::ThomMatherReport>;

std::string strip_newline(std::string s) {
  while (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

SpaceValue realized_value(const model::Term& term) {
  auto r = model::realize(term);
  auto skeleton = r.skeleton();
  return SpaceValue{std::move(skeleton), std::move(r), {}};
}

// A single free stratum with a trivial group, i.e. R^k.
std::optional<int> manifold_dim(const StratSpace& x) {
  if (x.size() != 1 || x.group().order() != 1) return std::nullopt;
  return x.stratum(0).dim;
}

}  // namespace

struct Evaluator::State {
  EvalOptions options;
  std::map<std::string, Value> env;

  Value eval(const Expr& e) {
    if (e.type == Expr::Type::Ident) return env.at(e.name);
    const auto& f = e.name;
    if (f == "euclidean") return realized_value(model::Term::euclidean(static_cast<int>(e.args[0].value)));
    if (f == "circle") return realized_value(model::Term::circle(e.args[0].value));
    if (f == "rotsphere") return realized_value(model::Term::rotsphere(e.args[0].value));

    auto a = std::get<SpaceValue>(eval(e.args[0]));
    if (f == "cone") {
      SpaceValue out{gstrat::cone(a.space), std::nullopt, {}};
      if (a.realized) out.realized = model::realize(model::Term::cone(a.realized->term()));
      return out;
    }
    if (f == "product") {
      auto b = std::get<SpaceValue>(eval(e.args[1]));
      SpaceValue out{a.space, std::nullopt, {}};
      if (auto k = manifold_dim(a.space)) {
        out.space = gstrat::product(*k, b.space);
      } else if (auto k2 = manifold_dim(b.space)) {
        out.space = gstrat::product(*k2, a.space);
      } else {
        throw Error(ErrorKind::Unsupported, "product needs a Euclidean factor");
      }
      if (a.realized && b.realized) {
        try {
          out.realized = model::realize(model::Term::product({a.realized->term(), b.realized->term()}));
        } catch (const Error&) {
          out.realized.reset();
        }
      }
      return out;
    }
    if (f == "quotient") {
      const auto& g = a.space.group();
      std::vector<GroupElement> gens;
      for (const auto& t : e.args[1].subgroup.tuples) {
        GroupElement x(t);
        g.check(x);
        gens.push_back(std::move(x));
      }
      const auto k = subgroup_closure(g, gens);
      auto orbit = gstrat::orbit_space(a.space, k);
      SpaceValue out{std::move(orbit.space), std::nullopt, {}};
      if (a.realized && a.realized->group() == g) out.realized = model::orbit_space(*a.realized, k);
      return out;
    }
    if (f == "unfold") {
      auto step = elementary_unfold(a.space);
      return SpaceValue{std::move(step.result), std::nullopt, std::move(step.provenance)};
    }
    if (f == "unfold_all") {
      auto chain = unfold_all(a.space);
      auto result = chain.result(a.space);
      return SpaceValue{std::move(result), std::nullopt, std::move(chain.total_provenance)};
    }
    if (f == "depth") return static_cast<std::int64_t>(depth(a.space));
    if (f == "validate") return validate(a.space);
    if (f == "iso") {
      auto b = std::get<SpaceValue>(eval(e.args[1]));
      return IsoOutcome{is_isomorphic(a.space, b.space)};
    }
    if (f == "thom_mather") {
      if (!a.realized) throw Error(ErrorKind::Unsupported, "expression has no numeric realization");
      return model::thom_mather_check(*a.realized, options.samples, options.seed);
    }
    throw Error(ErrorKind::InvalidArgument, "unknown function '" + f + "'");
  }

  std::string render(const Value& v) const {
    if (const auto* s = std::get_if<SpaceValue>(&v)) {
      if (options.emit == "dot") return emit_dot(s->space);
      if (options.emit == "json") return emit_json(s->space);
      return summarize(s->space);
    }
    if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
    if (const auto* r = std::get_if<ValidationReport>(&v)) return r->to_string();
    if (const auto* o = std::get_if<IsoOutcome>(&v))
      return o->witness ? "isomorphic " + o->witness->summary() : "not isomorphic";
    return std::get<model::ThomMatherReport>(v).to_string();
  }
};

Evaluator::Evaluator(EvalOptions options) : state_(std::make_shared<State>()) {
  state_->options = std::move(options);
}

std::vector<std::string> Evaluator::run(const Script& script) {
  std::vector<std::string> out;
  for (const auto& st : script.stmts) {
    try {
      auto v = state_->eval(st.expr);
      switch (st.type) {
        case Stmt::Type::Let:
          state_->env.insert_or_assign(st.name, std::move(v));
          break;
        case Stmt::Type::Print:
          out.push_back(strip_newline(state_->render(v)));
          break;
        case Stmt::Type::Emit: {
          const auto& sp = std::get<SpaceValue>(v).space;
          out.push_back(strip_newline(st.format == "dot" ? emit_dot(sp) : emit_json(sp)));
          break;
        }
      }
    } catch (const Error& e) {
      throw EvalError(st.span, std::string(to_string(e.kind())) + ": " + e.what());
    } catch (const std::bad_variant_access&) {
      throw EvalError(st.span, "type mismatch");
    } catch (const std::out_of_range&) {
      throw EvalError(st.span, "unbound identifier");
    }
  }
  return out;
}

std::vector<std::string> eval(const Script& script, const EvalOptions& options) {
  return Evaluator(options).run(script);
}

std::string summarize(const StratSpace& x) {
  std::ostringstream os;
  os << "space group=" << x.group().to_string()
     << " acting=" << factors_to_string(x.acting().invariant_factors()) << " strata=" << x.size()
     << " depth=" << depth(x) << (x.compact() ? " compact" : " noncompact");
  for (std::size_t s = 0; s < x.size(); ++s) {
    const auto& st = x.stratum(s);
    os << "\n  " << s << ' ' << st.name << " dim=" << st.dim
       << " isotropy=" << factors_to_string(st.isotropy.invariant_factors());
    if (st.link) os << " link=[strata=" << st.link->size() << " depth=" << depth(*st.link) << ']';
  }
  const auto pairs = x.order().pairs();
  if (!pairs.empty()) {
    os << "\n  order:";
    for (const auto& [a, b] : pairs) os << ' ' << a << '<' << b;
  }
  return os.str();
}

}  // namespace gstrat::dsl
