// SPDX-License-Identifier: Apache-2.0

#include "toricdec/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace toricdec {

namespace {

using json = nlohmann::ordered_json;

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("", std::string("not a valid document: ") + e.what());
  }
}

std::string at(const std::string& where, const std::string& key) { return where + "/" + key; }
std::string at(const std::string& where, std::size_t i) { return where + "/" + std::to_string(i); }

const json& field(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object()) throw InputError(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(where, "missing field '" + key + "'");
  return *it;
}

const json* optional_field(const json& obj, const std::string& key) {
  auto it = obj.find(key);
  return it == obj.end() || it->is_null() ? nullptr : &*it;
}

const json& array(const json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where, "expected a list");
  return j;
}

Integer get_integer(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const std::size_t start = !s.empty() && (s[0] == '-' || s[0] == '+') ? 1 : 0;
    bool ok = s.size() > start;
    for (std::size_t i = start; i < s.size(); ++i) ok = ok && std::isdigit(static_cast<unsigned char>(s[i]));
    if (ok) return Integer(s[0] == '+' ? s.substr(1) : s);
  }
  throw InputError(where, "expected an integer (decimal string or number)");
}

std::int64_t get_int(const json& j, const std::string& where) {
  const Integer v = get_integer(j, where);
  if (!v.fits_slong_p()) throw InputError(where, "integer out of range");
  return v.get_si();
}

std::size_t get_count(const json& j, const std::string& where) {
  const std::int64_t v = get_int(j, where);
  if (v < 0) throw InputError(where, "expected a nonnegative integer");
  return static_cast<std::size_t>(v);
}

Rational get_rational(const json& j, const std::string& where) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const auto slash = s.find('/');
    if (slash != std::string::npos) {
      const Integer num = get_integer(json(s.substr(0, slash)), where);
      const Integer den = get_integer(json(s.substr(slash + 1)), where);
      if (den == 0) throw InputError(where, "zero denominator");
      Rational q(num, den);
      q.canonicalize();
      return q;
    }
  }
  return Rational(get_integer(j, where));
}

std::string get_string(const json& j, const std::string& where) {
  if (!j.is_string()) throw InputError(where, "expected a string");
  return j.get<std::string>();
}

IntVector get_int_vector(const json& j, const std::string& where, std::optional<std::size_t> size = std::nullopt) {
  IntVector out;
  const auto& a = array(j, where);
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(get_int(a[i], at(where, i)));
  if (size && out.size() != *size)
    throw InputError(where, "expected " + std::to_string(*size) + " entries, got " + std::to_string(out.size()));
  return out;
}

std::vector<IntVector> get_int_vectors(const json& j, const std::string& where,
                                       std::optional<std::size_t> size = std::nullopt) {
  std::vector<IntVector> out;
  const auto& a = array(j, where);
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(get_int_vector(a[i], at(where, i), size));
  return out;
}

VarSet get_varset(const json& j, const std::string& where) {
  VarSet out;
  for (auto v : get_int_vector(j, where)) {
    if (v < 0) throw InputError(where, "negative variable index");
    out.push_back(static_cast<std::size_t>(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

void check_version(const json& doc, const std::string& kind) {
  const json& v = field(doc, "version", "");
  const std::string version = v.is_string() ? v.get<std::string>() : v.dump();
  if (version != kFormatVersion) throw InputError("/version", "unsupported format version " + version);
  if (auto k = optional_field(doc, "kind"); k && get_string(*k, "/kind") != kind)
    throw InputError("/kind", "expected a '" + kind + "' document, got '" + k->get<std::string>() + "'");
}

json str(std::int64_t v) { return std::to_string(v); }
json str(const Rational& v) { return v.get_str(); }

json vec(const IntVector& v) {
  json a = json::array();
  for (auto x : v) a.push_back(str(x));
  return a;
}

json vec(const RatVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(str(x));
  return a;
}

json vecs(const std::vector<IntVector>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(vec(v));
  return a;
}

json vecs(const std::vector<RatVector>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(vec(v));
  return a;
}

json varset(const VarSet& p) {
  json a = json::array();
  for (auto i : p) a.push_back(std::to_string(i));
  return a;
}

std::shared_ptr<const Fan> fan_from(const json& j, const std::string& where) {
  const std::size_t dim = get_count(field(j, "ambient_dim", where), at(where, "ambient_dim"));
  auto rays = get_int_vectors(field(j, "rays", where), at(where, "rays"), dim);
  std::vector<Cone> cones;
  const auto& cs = array(field(j, "max_cones", where), at(where, "max_cones"));
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const VarSet c = get_varset(cs[i], at(at(where, "max_cones"), i));
    cones.emplace_back(c.begin(), c.end());
  }
  try {
    return std::make_shared<const Fan>(dim, std::move(rays), std::move(cones));
  } catch (const std::exception& e) {
    throw InputError(where, std::string("invalid fan: ") + e.what());
  }
}

GradingSetup setup_from(const json& j, const std::string& where) {
  if (!j.is_object()) throw InputError(where, "expected an object");
  if (auto f = optional_field(j, "fan")) return GradingSetup::from_fan(fan_from(*f, at(where, "fan")));
  if (j.contains("rays")) return GradingSetup::from_fan(fan_from(j, where));
  const std::size_t r = get_count(field(j, "num_vars", where), at(where, "num_vars"));
  std::vector<IntVector> rows;
  if (auto c = optional_field(j, "class_matrix")) rows = get_int_vectors(*c, at(where, "class_matrix"), r);
  std::vector<Integer> torsion;
  if (auto t = optional_field(j, "torsion")) {
    const auto& a = array(*t, at(where, "torsion"));
    for (std::size_t i = 0; i < a.size(); ++i) torsion.push_back(get_integer(a[i], at(at(where, "torsion"), i)));
  }
  const auto irrelevant = get_int_vectors(field(j, "irrelevant", where), at(where, "irrelevant"), r);
  try {
    return GradingSetup::explicit_grading(r, IntMatrix::from_rows(rows, r), torsion, irrelevant);
  } catch (const std::exception& e) {
    throw InputError(where, e.what());
  }
}

Monomial entry_from(const json& j, std::size_t nvars, const std::string& where) {
  if (!j.is_object()) {
    const Rational c = get_rational(j, where);
    if (c == 0) return {};
    return {c, IntVector(nvars, 0)};
  }
  Monomial m;
  m.coef = get_rational(field(j, "coef", where), at(where, "coef"));
  if (auto e = optional_field(j, "exp"))
    m.exponent = get_int_vector(*e, at(where, "exp"), nvars);
  else
    m.exponent = IntVector(nvars, 0);
  for (auto x : m.exponent)
    if (x < 0) throw InputError(at(where, "exp"), "negative exponent");
  return m;
}

MonomialGrid grid_from(const json& j, std::size_t nvars, const std::string& where) {
  MonomialGrid grid;
  const auto& rows = array(j, where);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = array(rows[i], at(where, i));
    std::vector<Monomial> r;
    for (std::size_t k = 0; k < row.size(); ++k) r.push_back(entry_from(row[k], nvars, at(at(where, i), k)));
    if (!grid.empty() && r.size() != grid.front().size()) throw InputError(at(where, i), "ragged matrix");
    grid.push_back(std::move(r));
  }
  return grid;
}

MonomialMatrix matrix_from(const json& j, std::size_t nvars, const std::string& where) {
  const auto source = get_int_vectors(field(j, "source_shifts", where), at(where, "source_shifts"), nvars);
  const auto target = get_int_vectors(field(j, "target_shifts", where), at(where, "target_shifts"), nvars);
  MonomialGrid grid = grid_from(field(j, "entries", where), nvars, at(where, "entries"));
  if (grid.empty() && !target.empty()) grid.assign(target.size(), std::vector<Monomial>(source.size()));
  try {
    return MonomialMatrix(FreeModuleSpec(nvars, source), FreeModuleSpec(nvars, target), std::move(grid));
  } catch (const std::exception& e) {
    throw InputError(where, e.what());
  }
}

struct ExprReader {
  std::size_t nvars;
  std::map<std::string, ModuleExpr> defs;

  ModuleExpr read(const json& j, const std::string& where) {
    if (!j.is_object()) throw InputError(where, "expected a module expression object");
    if (auto r = optional_field(j, "ref")) {
      const std::string name = get_string(*r, at(where, "ref"));
      auto it = defs.find(name);
      if (it == defs.end()) throw InputError(at(where, "ref"), "unknown definition '" + name + "'");
      return it->second;
    }
    const std::string node = get_string(field(j, "node", where), at(where, "node"));
    try {
      return build(node, j, where);
    } catch (const InputError&) {
      throw;
    } catch (const std::exception& e) {
      throw InputError(where, e.what());
    }
  }

  std::vector<ModuleExpr> read_list(const json& j, const std::string& where) {
    std::vector<ModuleExpr> out;
    const auto& a = array(j, where);
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(read(a[i], at(where, i)));
    return out;
  }

  ModuleExpr build(const std::string& node, const json& j, const std::string& where) {
    if (node == "free")
      return ModuleExpr::free(FreeModuleSpec(nvars, get_int_vectors(field(j, "shifts", where), at(where, "shifts"), nvars)));
    if (node == "image" || node == "kernel" || node == "cokernel") {
      MonomialMatrix m = matrix_from(field(j, "matrix", where), nvars, at(where, "matrix"));
      if (node == "cokernel") return ModuleExpr::cokernel(std::move(m));
      const std::string sub = node == "image" ? "of" : "modulo";
      std::optional<ModuleExpr> child;
      if (auto c = optional_field(j, sub)) child = read(*c, at(where, sub));
      return node == "image" ? ModuleExpr::image(std::move(m), child) : ModuleExpr::kernel(std::move(m), child);
    }
    if (node == "intersection") return ModuleExpr::intersection(read_list(field(j, "parts", where), at(where, "parts")));
    if (node == "sum") return ModuleExpr::sum(read_list(field(j, "parts", where), at(where, "parts")));
    if (node == "quotient")
      return ModuleExpr::quotient(read(field(j, "base", where), at(where, "base")),
                                  read(field(j, "by", where), at(where, "by")));
    if (node == "zero") return ModuleExpr::zero(read(field(j, "of", where), at(where, "of")));
    if (node == "colon" || node == "saturation") {
      ModuleExpr n = read(field(j, "n", where), at(where, "n"));
      ModuleExpr e = read(field(j, "e", where), at(where, "e"));
      IntVector c = get_int_vector(field(j, "exp", where), at(where, "exp"), nvars);
      return node == "colon" ? ModuleExpr::colon(n, e, c) : ModuleExpr::saturation(n, e, c);
    }
    if (node == "shift")
      return ModuleExpr::shift(read(field(j, "of", where), at(where, "of")),
                               get_int_vector(field(j, "by", where), at(where, "by"), nvars));
    throw InputError(at(where, "node"), "unknown node kind '" + node + "'");
  }
};

json report_json(const DecompositionReport& r) {
  json doc;
  doc["version"] = kFormatVersion;
  doc["kind"] = "report";
  doc["title"] = r.title;
  doc["target"] = r.target;
  doc["box"] = str(r.box);
  doc["k_max"] = str(r.k_max);
  doc["overall"] = to_string(r.overall());
  json comps = json::array();
  for (const auto& c : r.components) {
    json x;
    x["label"] = c.label;
    x["prime"] = varset(c.prime);
    x["relevant"] = c.relevant;
    x["kept"] = c.kept;
    x["note"] = c.note;
    comps.push_back(std::move(x));
  }
  doc["components"] = std::move(comps);
  doc["columns"] = r.columns;
  json table = json::array();
  for (const auto& row : r.table) {
    json x;
    x["degree"] = vec(row.degree);
    x["values"] = vec(row.values);
    table.push_back(std::move(x));
  }
  doc["table"] = std::move(table);
  json verdicts = json::array();
  for (const auto& v : r.verdicts) {
    json x;
    x["check"] = v.check;
    x["status"] = to_string(v.status);
    x["label"] = v.label();
    x["degree"] = vec(v.degree);
    x["witness"] = v.witness;
    x["detail"] = v.detail;
    verdicts.push_back(std::move(x));
  }
  doc["verdicts"] = std::move(verdicts);
  return doc;
}

}  // namespace

std::shared_ptr<const Fan> parse_fan(const std::string& text) {
  const json doc = parse_text(text);
  check_version(doc, "fan");
  return fan_from(doc, "");
}

std::string fan_to_document(const Fan& fan) {
  json doc;
  doc["version"] = kFormatVersion;
  doc["kind"] = "fan";
  doc["ambient_dim"] = str(static_cast<std::int64_t>(fan.ambient_dim()));
  doc["rays"] = vecs(fan.rays());
  json cones = json::array();
  for (const auto& c : fan.max_cones()) cones.push_back(varset(c));
  doc["max_cones"] = std::move(cones);
  return doc.dump(2) + "\n";
}

GradingSetup parse_setup(const std::string& text) {
  const json doc = parse_text(text);
  if (!doc.is_object()) throw InputError("", "expected an object");
  const std::string kind = doc.contains("kind") ? get_string(doc["kind"], "/kind") : "grading";
  if (kind == "fan") {
    check_version(doc, "fan");
    return GradingSetup::from_fan(fan_from(doc, ""));
  }
  check_version(doc, "grading");
  return setup_from(doc, "");
}

MatrixDocument parse_matrix(const std::string& text) {
  const json doc = parse_text(text);
  check_version(doc, "matrix");
  MatrixDocument out;
  out.nvars = get_count(field(doc, "num_vars", ""), "/num_vars");
  out.entries = grid_from(field(doc, "entries", ""), out.nvars, "/entries");
  if (optional_field(doc, "source_shifts") && optional_field(doc, "target_shifts"))
    out.matrix = matrix_from(doc, out.nvars, "");
  return out;
}

ModuleDocument parse_module(const std::string& text) {
  const json doc = parse_text(text);
  check_version(doc, "module");
  GradingSetup setup = setup_from(field(doc, "setup", ""), "/setup");
  ExprReader reader{setup.num_vars(), {}};
  if (auto defs = optional_field(doc, "defs")) {
    if (!defs->is_object()) throw InputError("/defs", "expected an object");
    for (const auto& [name, value] : defs->items()) {
      ModuleExpr e = reader.read(value, "/defs/" + name);
      reader.defs.insert_or_assign(name, std::move(e));
    }
  }
  ModuleExpr module = reader.read(field(doc, "module", ""), "/module");
  std::optional<ModuleExpr> target;
  if (auto t = optional_field(doc, "target")) target = reader.read(*t, "/target");
  std::vector<ComponentDocument> components;
  if (auto cs = optional_field(doc, "components")) {
    const auto& a = array(*cs, "/components");
    for (std::size_t i = 0; i < a.size(); ++i) {
      const std::string where = at("/components", i);
      std::string label = std::to_string(i);
      if (auto l = optional_field(a[i], "label")) label = get_string(*l, at(where, "label"));
      VarSet prime = get_varset(field(a[i], "prime", where), at(where, "prime"));
      for (auto p : prime)
        if (p >= setup.num_vars()) throw InputError(at(where, "prime"), "variable index out of range");
      ModuleExpr m = reader.read(field(a[i], "module", where), at(where, "module"));
      if (!(m.ambient() == module.ambient()))
        throw InputError(at(where, "module"), "component lives in a different ambient than the module");
      components.push_back({std::move(label), std::move(prime), std::move(m)});
    }
  }
  std::optional<IntVector> degree;
  if (auto d = optional_field(doc, "degree")) degree = get_int_vector(*d, "/degree", setup.num_vars());
  return {std::move(setup), std::move(module), std::move(target), std::move(components), std::move(degree)};
}

std::string report_to_document(const DecompositionReport& report) { return report_json(report).dump(2) + "\n"; }

DecompositionReport parse_report(const std::string& text) {
  const json doc = parse_text(text);
  check_version(doc, "report");
  DecompositionReport r;
  r.title = get_string(field(doc, "title", ""), "/title");
  r.target = get_string(field(doc, "target", ""), "/target");
  r.box = get_int(field(doc, "box", ""), "/box");
  r.k_max = get_int(field(doc, "k_max", ""), "/k_max");
  const auto& comps = array(field(doc, "components", ""), "/components");
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const std::string w = at("/components", i);
    ComponentSummary c;
    c.label = get_string(field(comps[i], "label", w), at(w, "label"));
    c.prime = get_varset(field(comps[i], "prime", w), at(w, "prime"));
    c.relevant = field(comps[i], "relevant", w).get<bool>();
    c.kept = field(comps[i], "kept", w).get<bool>();
    c.note = get_string(field(comps[i], "note", w), at(w, "note"));
    r.components.push_back(std::move(c));
  }
  const auto& cols = array(field(doc, "columns", ""), "/columns");
  for (std::size_t i = 0; i < cols.size(); ++i) r.columns.push_back(get_string(cols[i], at("/columns", i)));
  const auto& table = array(field(doc, "table", ""), "/table");
  for (std::size_t i = 0; i < table.size(); ++i) {
    const std::string w = at("/table", i);
    r.table.push_back({get_int_vector(field(table[i], "degree", w), at(w, "degree")),
                       get_int_vector(field(table[i], "values", w), at(w, "values"))});
  }
  const auto& verdicts = array(field(doc, "verdicts", ""), "/verdicts");
  for (std::size_t i = 0; i < verdicts.size(); ++i) {
    const std::string w = at("/verdicts", i);
    const json& v = verdicts[i];
    Verdict x;
    x.check = get_string(field(v, "check", w), at(w, "check"));
    try {
      x.status = verdict_status_from_string(get_string(field(v, "status", w), at(w, "status")));
    } catch (const std::invalid_argument& e) {
      throw InputError(at(w, "status"), e.what());
    }
    x.degree = get_int_vector(field(v, "degree", w), at(w, "degree"));
    x.witness = get_string(field(v, "witness", w), at(w, "witness"));
    x.detail = get_string(field(v, "detail", w), at(w, "detail"));
    r.verdicts.push_back(std::move(x));
  }
  return r;
}

std::string piece_to_document(const GradedPiece& p) {
  json doc;
  doc["version"] = kFormatVersion;
  doc["kind"] = "piece";
  doc["degree"] = vec(p.degree);
  doc["dim"] = str(static_cast<std::int64_t>(p.dim()));
  json labels = json::array();
  for (const auto& l : p.labels) {
    json x;
    x["generator"] = str(static_cast<std::int64_t>(l.generator));
    x["exponent"] = vec(l.exponent);
    labels.push_back(std::move(x));
  }
  doc["labels"] = std::move(labels);
  doc["span"] = vecs(p.span);
  doc["relations"] = vecs(p.relations);
  doc["basis"] = vecs(p.basis);
  return doc.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path, "cannot open file");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace toricdec
