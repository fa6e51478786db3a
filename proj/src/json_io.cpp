#include "borel/json_io.hpp"

#include <limits>
#include <sstream>

namespace borel {

Json degree_to_json(ExtendedDegree d) {
  if (d.is_finite()) return Json(d.value());
  return Json("-inf");
}

Json degrees_to_json(const std::vector<ExtendedDegree>& v) {
  Json arr = Json::array();
  for (ExtendedDegree d : v) arr.push_back(degree_to_json(d));
  return arr;
}

Json ideal_to_json(const MonomialIdeal& I) {
  Json j;
  j["vars"] = I.var_names();
  Json gens = Json::array();
  for (const Monomial& g : I.gens()) gens.push_back(g.exps);
  j["gens"] = std::move(gens);
  return j;
}

MonomialIdeal ideal_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("gens"))
    fail("parse", "ideal JSON must be an object with 'vars' and 'gens'");
  std::vector<std::string> names;
  for (const auto& v : j.at("vars")) {
    if (!v.is_string()) fail("parse", "'vars' must be an array of strings");
    names.push_back(v.get<std::string>());
  }
  const int n = static_cast<int>(names.size());
  std::vector<Monomial> gens;
  for (const auto& row : j.at("gens")) {
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      fail("parse", "each generator must list one exponent per variable");
    std::vector<int> exps;
    for (const auto& e : row) {
      if (!e.is_number_integer()) fail("parse", "exponents must be integers");
      long long v = e.get<long long>();
      if (v < 0) fail("domain", "negative exponent");
      if (v > std::numeric_limits<int>::max()) fail("overflow", "exponent exceeds 2^31-1");
      exps.push_back(static_cast<int>(v));
    }
    gens.emplace_back(std::move(exps));
  }
  return MonomialIdeal::make(n, std::move(gens), std::move(names));
}

Json check_to_json(const BorelTypeCheck& c) {
  Json j;
  j["borel_type"] = c.borel_type;
  j["failing_index"] = c.failing_index ? Json(*c.failing_index) : Json(nullptr);
  return j;
}

Json decomposition_to_json(const Decomposition& d) {
  Json j;
  j["vars"] = d.source.var_names();
  Json comps = Json::array();
  for (const IrreducibleComponent& c : d.components) comps.push_back(c.b);
  j["components"] = std::move(comps);
  return j;
}

Json chain_to_json(const SequentialChain& c) {
  Json j;
  j["indices"] = c.indices;
  Json ideals = Json::array();
  for (const MonomialIdeal& I : c.ideals) ideals.push_back(ideal_to_json(I));
  j["ideals"] = std::move(ideals);
  Json restricted = Json::array();
  for (const MonomialIdeal& J : c.restricted) restricted.push_back(ideal_to_json(J));
  j["restricted"] = std::move(restricted);
  return j;
}

Json report_to_json(const InvariantReport& r) {
  Json j;
  j["n"] = r.n;
  j["route"] = route_name(r.route);
  j["a_module"] = r.a_module ? degrees_to_json(*r.a_module) : Json(nullptr);
  j["a_ideal"] = r.a_ideal ? degrees_to_json(*r.a_ideal) : Json(nullptr);
  j["reg_t_module"] = degrees_to_json(r.reg_t_module);
  j["astar_t_module"] = degrees_to_json(r.astar_t_module);
  j["reg_t_ideal"] = degrees_to_json(r.reg_t_ideal);
  j["astar_t_ideal"] = degrees_to_json(r.astar_t_ideal);
  j["reg"] = degree_to_json(r.reg);
  j["astar"] = degree_to_json(r.astar);
  j["reg_ideal"] = degree_to_json(r.reg_ideal);
  j["astar_ideal"] = degree_to_json(r.astar_ideal);
  j["sat"] = degree_to_json(r.sat);
  return j;
}

Json betti_to_json(const BettiTable& t) {
  Json j;
  j["n"] = t.n;
  Json entries = Json::array();
  for (const auto& [key, beta] : t.entries) {
    Json e;
    e["i"] = key.first;
    e["j"] = key.second;
    e["beta"] = beta;
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  j["b"] = degrees_to_json(t.b);
  return j;
}

Json comparison_to_json(const RouteComparison& c, const MonomialIdeal& I) {
  Json j;
  j["ideal"] = ideal_to_json(I);
  j["agree"] = c.agree;
  Json rows = Json::array();
  for (const QuantityComparison& q : c.quantities) {
    Json row;
    row["quantity"] = q.name;
    Json values;
    for (const auto& [route, value] : q.values) values[route] = value;
    row["values"] = std::move(values);
    row["equal"] = q.equal;
    rows.push_back(std::move(row));
  }
  j["quantities"] = std::move(rows);
  if (!c.agree) {
    j["reports"] = Json::object();
    j["reports"]["decomposition"] = report_to_json(c.decomposition);
    j["reports"]["chain"] = report_to_json(c.chain);
    j["reports"]["oracle"] = report_to_json(c.oracle);
  }
  return j;
}

Json error_to_json(const Error& e) {
  Json j;
  Json inner;
  inner["kind"] = e.kind();
  inner["message"] = e.what();
  if (e.position()) inner["position"] = *e.position();
  j["error"] = std::move(inner);
  return j;
}

namespace {

void append_row(std::ostringstream& out, const std::string& label,
                const std::vector<std::string>& cells, std::size_t width) {
  out << "  " << label;
  for (std::size_t i = label.size(); i < 16; ++i) out << ' ';
  for (const std::string& c : cells) {
    for (std::size_t i = c.size(); i < width; ++i) out << ' ';
    out << c << ' ';
  }
  out << '\n';
}

}  // namespace

std::string render_report_table(const InvariantReport& r) {
  std::ostringstream out;
  std::vector<std::string> header;
  std::size_t width = 5;
  for (int t = 0; t <= r.n; ++t) header.push_back("t=" + std::to_string(t));
  auto cells = [&](const std::vector<ExtendedDegree>& v) {
    std::vector<std::string> c;
    for (ExtendedDegree d : v) {
      c.push_back(d.str());
      width = std::max(width, c.back().size());
    }
    return c;
  };
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> labels;
  if (r.a_module) {
    labels.push_back("a_k(S/I)");
    rows.push_back(cells(*r.a_module));
  }
  if (r.a_ideal) {
    labels.push_back("a_k(I)");
    rows.push_back(cells(*r.a_ideal));
  }
  labels.push_back("reg_t(S/I)");
  rows.push_back(cells(r.reg_t_module));
  labels.push_back("a*_t(S/I)");
  rows.push_back(cells(r.astar_t_module));
  labels.push_back("reg_t(I)");
  rows.push_back(cells(r.reg_t_ideal));
  labels.push_back("a*_t(I)");
  rows.push_back(cells(r.astar_t_ideal));

  out << "route: " << route_name(r.route) << '\n';
  append_row(out, "", header, width);
  for (std::size_t i = 0; i < rows.size(); ++i) append_row(out, labels[i], rows[i], width);
  out << "  reg(S/I) = " << r.reg.str() << "    a*(S/I) = " << r.astar.str() << '\n';
  out << "  reg(I)   = " << r.reg_ideal.str() << "    a*(I)   = " << r.astar_ideal.str()
      << '\n';
  out << "  sat(I)   = " << r.sat.str() << '\n';
  return out.str();
}

}  // namespace borel
