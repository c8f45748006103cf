#include "gstrat/emit.hpp"

#include <sstream>

#include "gstrat/error.hpp"
#include "json.hpp"

namespace gstrat {

namespace {

using nlohmann::json;

constexpr const char* kFormat = "gstrat-space/1";

bool hasse_edge(const StratSpace& x, std::size_t a, std::size_t b) {
  if (!x.less(a, b)) return false;
  for (std::size_t c = 0; c < x.size(); ++c)
    if (x.less(a, c) && x.less(c, b)) return false;
  return true;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\' || c == '|' || c == '{' || c == '}' || c == '<' || c == '>')
      out += '\\';
    out += c;
  }
  return out;
}

void dot_body(std::ostringstream& os, const StratSpace& x, const std::string& prefix,
              const std::string& indent) {
  for (std::size_t s = 0; s < x.size(); ++s) {
    const auto& st = x.stratum(s);
    os << indent << prefix << s << " [label=\"" << s << ':' << escape(st.name) << '|' << st.dim
       << '|' << factors_to_string(st.isotropy.invariant_factors()) << "\"];\n";
  }
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = 0; b < x.size(); ++b)
      if (hasse_edge(x, a, b)) os << indent << prefix << a << " -> " << prefix << b << ";\n";
  for (std::size_t s = 0; s < x.size(); ++s) {
    const auto& st = x.stratum(s);
    if (!st.link) continue;
    const auto id = prefix + std::to_string(s);
    os << indent << "subgraph cluster_" << id << " {\n";
    os << indent << "  label=\"link(" << id << ")\";\n";
    dot_body(os, *st.link, id + "_", indent + "  ");
    os << indent << "}\n";
  }
}

json element_json(const GroupElement& g) { return json(g.residues); }

json subgroup_json(const Subgroup& h) {
  json out = json::array();
  for (const auto& e : h.elements()) out.push_back(element_json(e));
  return out;
}

json space_json(const StratSpace& x) {
  json strata = json::array();
  for (const auto& st : x.strata()) {
    json s;
    s["name"] = st.name;
    s["dim"] = st.dim;
    s["isotropy"] = subgroup_json(st.isotropy);
    s["link"] = st.link ? space_json(*st.link) : json(nullptr);
    s["attach"] = st.attach;
    strata.push_back(std::move(s));
  }
  json order = json::array();
  for (const auto& [a, b] : x.order().pairs()) order.push_back({a, b});
  json out;
  out["group"] = x.group().moduli();
  out["acting"] = subgroup_json(x.acting());
  out["compact"] = x.compact();
  out["strata"] = std::move(strata);
  out["order"] = std::move(order);
  return out;
}

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorKind::Serialization, msg); }

Subgroup read_subgroup(const FiniteAbelianGroup& g, const json& j) {
  if (!j.is_array() || j.empty()) bad("subgroup must be a non-empty element list");
  std::vector<GroupElement> elems;
  for (const auto& e : j) {
    GroupElement x(e.get<std::vector<std::int64_t>>());
    if (!g.contains(x)) bad("element " + x.to_string() + " is not in " + g.to_string());
    elems.push_back(std::move(x));
  }
  auto h = subgroup_closure(g, elems);
  if (h.order() != elems.size()) bad("element list is not a subgroup");
  return h;
}

StratSpace read_space(const json& j, const FiniteAbelianGroup* top) {
  if (!j.is_object()) bad("space must be an object");
  FiniteAbelianGroup g(j.at("group").get<std::vector<std::int64_t>>());
  if (top && !(g == *top)) bad("link group differs from the top group");
  auto acting = read_subgroup(g, j.at("acting"));
  std::vector<Stratum> strata;
  for (const auto& s : j.at("strata")) {
    SpacePtr link;
    if (!s.at("link").is_null()) link = std::make_shared<const StratSpace>(read_space(s.at("link"), &g));
    strata.push_back(Stratum{s.at("name").get<std::string>(), s.at("dim").get<int>(),
                             read_subgroup(g, s.at("isotropy")), std::move(link),
                             s.at("attach").get<std::vector<std::size_t>>()});
  }
  StrictOrder order(strata.size());
  for (const auto& p : j.at("order")) {
    const auto a = p.at(0).get<std::size_t>();
    const auto b = p.at(1).get<std::size_t>();
    if (a >= strata.size() || b >= strata.size()) bad("order refers to a missing stratum");
    order.set(a, b);
  }
  return StratSpace(std::move(g), std::move(acting), std::move(strata), std::move(order),
                    j.at("compact").get<bool>());
}

}  // namespace

std::string emit_dot(const StratSpace& x) {
  std::ostringstream os;
  os << "digraph space {\n  rankdir=BT;\n  node [shape=record];\n";
  os << "  label=\"" << x.group().to_string() << (x.compact() ? " compact" : "") << "\";\n";
  dot_body(os, x, "s", "  ");
  os << "}\n";
  return os.str();
}

std::string emit_json(const StratSpace& x) {
  json out;
  out["format"] = kFormat;
  out["space"] = space_json(x);
  return out.dump(2) + "\n";
}

StratSpace read_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    bad(std::string("malformed structured text: ") + e.what());
  }
  try {
    if (j.at("format") != kFormat) bad("unknown format tag");
    return read_space(j.at("space"), nullptr);
  } catch (const json::exception& e) {
    bad(std::string("malformed space: ") + e.what());
  }
}

}  // namespace gstrat
