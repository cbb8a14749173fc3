#include "vglab/json_io.hpp"

#include <fstream>

#include "vglab/error.hpp"

namespace vglab {

namespace {

std::string require_string(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string())
    throw ParseError(std::string("missing or non-string field '") + key + "'");
  return j[key].get<std::string>();
}

int require_int(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw ParseError(std::string("missing or non-integer field '") + key + "'");
  return j[key].get<int>();
}

const json& require_field(const json& j, const char* key) {
  if (!j.contains(key))
    throw ParseError(std::string("missing field '") + key + "'");
  return j[key];
}

}  // namespace

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("JSON parse error at byte ") +
                     std::to_string(e.byte) + ": " + e.what());
  }
}

json parse_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return parse_json_text(text);
}

QuantaleSpec quantale_spec_from_json(const json& j) {
  std::string kind = require_string(j, "kind");
  if (kind == "two") return QuantaleSpec::two();
  if (kind == "chain") return QuantaleSpec::chain(require_int(j, "n"));
  if (kind == "lukasiewicz_chain")
    return QuantaleSpec::lukasiewicz_chain(require_int(j, "n"));
  if (kind == "pplus") return QuantaleSpec::pplus();
  if (kind == "pmax") return QuantaleSpec::pmax();
  if (kind == "unit_interval") {
    std::string t = require_string(j, "tensor");
    if (t == "min") return QuantaleSpec::unit_interval(UnitTensor::min);
    if (t == "product") return QuantaleSpec::unit_interval(UnitTensor::product);
    if (t == "lukasiewicz")
      return QuantaleSpec::unit_interval(UnitTensor::lukasiewicz);
    throw ParseError("unknown unit_interval tensor '" + t + "'");
  }
  if (kind == "delta_grid") {
    std::string t = require_string(j, "tensor");
    GridTensor g;
    if (t == "min")
      g = GridTensor::min;
    else if (t == "conv")
      g = GridTensor::conv;
    else
      throw ParseError("unknown delta_grid tensor '" + t + "'");
    return QuantaleSpec::delta_grid(Rat::parse(require_string(j, "h")),
                                    require_int(j, "N"), g);
  }
  if (kind == "table") {
    TableSpec t;
    for (const auto& e : require_field(j, "elements"))
      t.elements.push_back(e.get<std::string>());
    for (const auto& row : require_field(j, "leq")) {
      std::vector<bool> r;
      for (const auto& v : row) r.push_back(v.get<int>() != 0);
      t.leq.push_back(std::move(r));
    }
    auto index_of = [&](const std::string& name) {
      for (std::size_t i = 0; i < t.elements.size(); ++i)
        if (t.elements[i] == name) return static_cast<int>(i);
      throw ParseError("table element '" + name + "' not in carrier");
    };
    for (const auto& row : require_field(j, "tensor")) {
      std::vector<int> r;
      for (const auto& v : row) r.push_back(index_of(v.get<std::string>()));
      t.tensor.push_back(std::move(r));
    }
    t.unit = index_of(require_string(j, "unit"));
    if (j.contains("name")) t.name = j["name"].get<std::string>();
    return QuantaleSpec::from_table(std::move(t));
  }
  throw ParseError("unknown quantale kind '" + kind + "'");
}

json quantale_spec_to_json(const QuantaleSpec& s) {
  json j;
  switch (s.kind) {
    case QuantaleKind::two: j["kind"] = "two"; break;
    case QuantaleKind::chain:
      j["kind"] = "chain";
      j["n"] = s.n;
      break;
    case QuantaleKind::lukasiewicz_chain:
      j["kind"] = "lukasiewicz_chain";
      j["n"] = s.n;
      break;
    case QuantaleKind::pplus: j["kind"] = "pplus"; break;
    case QuantaleKind::pmax: j["kind"] = "pmax"; break;
    case QuantaleKind::unit_interval:
      j["kind"] = "unit_interval";
      j["tensor"] = s.unit_tensor == UnitTensor::min       ? "min"
                    : s.unit_tensor == UnitTensor::product ? "product"
                                                           : "lukasiewicz";
      break;
    case QuantaleKind::delta_grid:
      j["kind"] = "delta_grid";
      j["h"] = s.grid_h.str();
      j["N"] = s.grid_n;
      j["tensor"] = s.grid_tensor == GridTensor::min ? "min" : "conv";
      break;
    case QuantaleKind::table: {
      j["kind"] = "table";
      j["elements"] = s.table.elements;
      json leq = json::array();
      for (const auto& row : s.table.leq) {
        json r = json::array();
        for (bool b : row) r.push_back(b ? 1 : 0);
        leq.push_back(std::move(r));
      }
      j["leq"] = std::move(leq);
      json tensor = json::array();
      for (const auto& row : s.table.tensor) {
        json r = json::array();
        for (int v : row) r.push_back(s.table.elements[v]);
        tensor.push_back(std::move(r));
      }
      j["tensor"] = std::move(tensor);
      j["unit"] = s.table.elements[s.table.unit];
      j["name"] = s.table.name;
      break;
    }
  }
  return j;
}

FiniteGroup group_from_json(const json& j) {
  std::string kind = require_string(j, "kind");
  if (kind == "cyclic") return FiniteGroup::cyclic(require_int(j, "n"));
  if (kind == "klein") return FiniteGroup::klein();
  if (kind == "s3") return FiniteGroup::symmetric3();
  if (kind == "dihedral") return FiniteGroup::dihedral(require_int(j, "n"));
  if (kind == "trivial") return FiniteGroup::trivial();
  if (kind == "product") {
    const json& factors = require_field(j, "factors");
    if (!factors.is_array() || factors.empty())
      throw ParseError("product group needs a non-empty factor list");
    FiniteGroup g = group_from_json(factors[0]);
    for (std::size_t i = 1; i < factors.size(); ++i)
      g = FiniteGroup::direct_product(g, group_from_json(factors[i]));
    return g;
  }
  if (kind == "table") {
    std::vector<std::string> labels;
    for (const auto& l : require_field(j, "labels"))
      labels.push_back(l.get<std::string>());
    std::vector<std::vector<int>> add;
    for (const auto& row : require_field(j, "add")) {
      std::vector<int> r;
      for (const auto& v : row) r.push_back(v.get<int>());
      add.push_back(std::move(r));
    }
    return FiniteGroup::from_table(std::move(labels), std::move(add));
  }
  throw ParseError("unknown group kind '" + kind + "'");
}

json group_to_json(const FiniteGroup& g) {
  json j;
  j["kind"] = "table";
  j["labels"] = g.labels();
  json add = json::array();
  for (int x = 0; x < g.size(); ++x) {
    json row = json::array();
    for (int y = 0; y < g.size(); ++y) row.push_back(g.add(x, y));
    add.push_back(std::move(row));
  }
  j["add"] = std::move(add);
  return j;
}

GroupAction action_from_json(const json& j) {
  FiniteGroup on = group_from_json(require_field(j, "on"));
  FiniteGroup by = group_from_json(require_field(j, "by"));
  std::vector<std::vector<int>> phi;
  for (const auto& row : require_field(j, "phi")) {
    std::vector<int> r;
    for (const auto& v : row) r.push_back(v.get<int>());
    phi.push_back(std::move(r));
  }
  return GroupAction::make(std::move(by), std::move(on), std::move(phi));
}

json action_to_json(const GroupAction& a) {
  json j;
  j["on"] = group_to_json(a.acted());
  j["by"] = group_to_json(a.acting());
  json phi = json::array();
  for (int y = 0; y < a.acting().size(); ++y) phi.push_back(a.perm(y));
  j["phi"] = std::move(phi);
  return j;
}

VRel vrel_from_json(const json& j, const Quantale& q) {
  Carrier carrier;
  for (const auto& l : require_field(j, "carrier"))
    carrier.push_back(l.get<std::string>());
  std::vector<QElem> entries;
  const json& m = require_field(j, "matrix");
  if (m.size() != carrier.size())
    throw ParseError("matrix row count does not match carrier");
  for (const auto& row : m) {
    if (row.size() != carrier.size())
      throw ParseError("matrix column count does not match carrier");
    for (const auto& v : row) entries.push_back(q.parse_elem(v.get<std::string>()));
  }
  return VRel(q, carrier, carrier, std::move(entries));
}

json vcategory_to_json(const VCategory& a) {
  json j;
  j["quantale"] = quantale_spec_to_json(a.quantale().spec());
  j["carrier"] = a.carrier();
  json m = json::array();
  for (std::size_t x = 0; x < a.size(); ++x) {
    json row = json::array();
    for (std::size_t y = 0; y < a.size(); ++y)
      row.push_back(a.quantale().format_elem(a.at(x, y)));
    m.push_back(std::move(row));
  }
  j["matrix"] = std::move(m);
  return j;
}

VGroup vgroup_from_json(const json& j) {
  Quantale q = make_quantale(quantale_spec_from_json(require_field(j, "quantale")));
  FiniteGroup g = group_from_json(require_field(j, "group"));
  std::vector<QElem> delta;
  for (const auto& v : require_field(j, "delta"))
    delta.push_back(q.parse_elem(v.get<std::string>()));
  return VGroup::from_delta(std::move(g), q, std::move(delta));
}

json vgroup_to_json(const VGroup& x) {
  json j;
  j["quantale"] = quantale_spec_to_json(x.quantale().spec());
  j["group"] = group_to_json(x.group());
  json d = json::array();
  for (int u = 0; u < x.size(); ++u)
    d.push_back(x.quantale().format_elem(x.delta(u)));
  j["delta"] = std::move(d);
  return j;
}

VGroupHom vgroup_hom_from_json(const json& j) {
  VGroup source = vgroup_from_json(require_field(j, "source"));
  VGroup target = vgroup_from_json(require_field(j, "target"));
  std::vector<int> map;
  for (const auto& v : require_field(j, "map")) map.push_back(v.get<int>());
  return make_vgroup_hom(source, target, std::move(map));
}

SplitExtensionInput split_input_from_json(const json& j) {
  SplitExtensionInput out{action_from_json(require_field(j, "action")),
                          vgroup_from_json(require_field(j, "kernel")),
                          vgroup_from_json(require_field(j, "quotient"))};
  if (!out.action.acted().same_table(out.kernel.group()))
    throw ParseError("split input: action 'on' group differs from the kernel");
  if (!out.action.acting().same_table(out.quotient.group()))
    throw ParseError("split input: action 'by' group differs from the quotient");
  return out;
}

json law_report_to_json(const LawReport& r) {
  json j;
  j["id"] = r.id;
  j["claim"] = r.claim;
  j["attempted"] = r.attempted;
  j["passed"] = r.passed;
  j["ok"] = r.ok();
  if (!r.witness.empty()) j["witness"] = r.witness;
  return j;
}

}  // namespace vglab
