#include "arrhom/io.hpp"

#include <fstream>

namespace arrhom {

namespace {

Rational parse_entry(const Json& j, const std::string& where) {
  try {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ValidationError("input: " + where + ": " + e.what());
  }
  throw ValidationError("input: " + where +
                        ": expected an integer or a rational string");
}

}  // namespace

Json arrangement_to_json(const Arrangement& arr) {
  Json hs = Json::array();
  for (const Vec& n : arr.normals) {
    Json row = Json::array();
    for (int i = 0; i < n.size(); ++i)
      row.push_back(rational_to_string(n(i)));
    hs.push_back(std::move(row));
  }
  return Json{{"ambient_dim", arr.ambient_dim}, {"hyperplanes", hs}};
}

Arrangement preset_by_name(const std::string& name, int n) {
  if (n < 1) throw ValidationError("input: preset size must be positive");
  if (name == "boolean") return preset_boolean(n);
  if (name == "braid") return preset_braid(n);
  throw ValidationError("input: unknown preset '" + name + "'");
}

Arrangement arrangement_from_json(const Json& j) {
  if (!j.is_object()) throw ValidationError("input: expected a JSON object");
  if (j.contains("preset")) {
    if (!j.contains("n") || !j["n"].is_number_integer())
      throw ValidationError("input: preset requires an integer field 'n'");
    return preset_by_name(j["preset"].get<std::string>(), j["n"].get<int>());
  }
  if (!j.contains("ambient_dim") || !j["ambient_dim"].is_number_integer())
    throw ValidationError("input: missing integer field 'ambient_dim'");
  if (!j.contains("hyperplanes") || !j["hyperplanes"].is_array())
    throw ValidationError("input: missing array field 'hyperplanes'");
  const int d = j["ambient_dim"].get<int>();
  std::vector<std::vector<Rational>> ns;
  int idx = 0;
  for (const Json& row : j["hyperplanes"]) {
    const std::string where = "hyperplane " + std::to_string(idx);
    if (!row.is_array() || static_cast<int>(row.size()) != d)
      throw ValidationError("input: " + where + ": expected " +
                            std::to_string(d) + " coordinates");
    std::vector<Rational> n;
    for (const Json& e : row) n.push_back(parse_entry(e, where));
    ns.push_back(std::move(n));
    ++idx;
  }
  return Arrangement::from_normals(d, ns);
}

Arrangement load_arrangement_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("input: cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw ValidationError("input: '" + path + "': " + e.what());
  }
  return arrangement_from_json(j);
}

Json betti_to_json(const BettiTable& t) {
  return Json{{"betti", t.betti}};
}

BettiTable betti_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("betti") || !j["betti"].is_array())
    throw ValidationError("input: expected {\"betti\": [...]}");
  BettiTable t;
  for (const Json& e : j["betti"]) {
    if (!e.is_number_integer() || e.get<long>() < 0)
      throw ValidationError("input: betti numbers must be non-negative");
    t.betti.push_back(e.get<long>());
  }
  return t;
}

Json report_to_json(const VerificationReport& r) {
  Json checks = Json::array();
  for (const CheckResult& c : r.checks)
    checks.push_back(
        Json{{"name", c.name}, {"status", c.status}, {"detail", c.detail}});
  return Json{{"checks", checks}, {"all_passed", r.all_passed()}};
}

VerificationReport report_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("checks") || !j["checks"].is_array())
    throw ValidationError("input: expected {\"checks\": [...]}");
  VerificationReport r;
  for (const Json& c : j["checks"])
    r.add(c.at("name").get<std::string>(), c.at("status").get<std::string>(),
          c.value("detail", ""));
  return r;
}

Json complex_to_json(const ChainComplex& c) {
  Json out;
  out["dims"] = c.dims;
  Json bnd = Json::array();
  for (const SpMat& d : c.boundary) {
    Json entries = Json::array();
    for (int k = 0; k < d.outerSize(); ++k)
      for (SpMat::InnerIterator it(d, k); it; ++it)
        entries.push_back(Json::array(
            {it.row(), it.col(), rational_to_string(it.value())}));
    bnd.push_back(Json{{"rows", d.rows()}, {"cols", d.cols()},
                       {"entries", entries}});
  }
  out["boundary"] = bnd;
  if (!c.gen_labels.empty()) out["generators"] = c.gen_labels;
  return out;
}

Json sheaf_to_json(const Sheaf& f) {
  const Poset& p = f.base();
  Json dims = Json::array();
  for (int x = 0; x < p.size(); ++x) dims.push_back(f.dim(x));
  Json maps = Json::array();
  for (int x = 0; x < p.size(); ++x)
    for (int y : p.upper_covers(x)) {
      Mat m = f.map(x, y);
      Json rows = Json::array();
      for (int r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (int cc = 0; cc < m.cols(); ++cc)
          row.push_back(rational_to_string(m(r, cc)));
        rows.push_back(std::move(row));
      }
      maps.push_back(Json{{"from", y}, {"to", x}, {"matrix", rows}});
    }
  return Json{{"elements", p.size()}, {"stalk_dims", dims},
              {"cover_maps", maps}};
}

}  // namespace arrhom
