#include "cgseries/group_io.hpp"

#include <fstream>
#include <limits>

#include "cgseries/errors.hpp"

namespace cgs {

namespace {

Json integer_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

mpz_class integer_from_json(const Json& j, const char* what) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_number_unsigned()) return mpz_class(j.get<unsigned long>());
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) == 0) return z;
  }
  throw SchemaError(std::string("expected an integer for ") + what);
}

long long_field(const Json& j, const char* key) {
  if (!j.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
  const mpz_class z = integer_from_json(j.at(key), key);
  if (!z.fits_slong_p() || z <= 0) throw SchemaError(std::string("field '") + key + "' must be a positive integer");
  return z.get_si();
}

const Json& array_field(const Json& j, const char* key) {
  if (!j.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
  const Json& a = j.at(key);
  if (!a.is_array()) throw SchemaError(std::string("field '") + key + "' must be an array");
  return a;
}

std::vector<Cyclo> cyclo_row(const Json& a, long m, const char* what) {
  if (!a.is_array()) throw SchemaError(std::string(what) + " must be an array of cyclotomic literals");
  std::vector<Cyclo> out;
  for (const auto& v : a) out.push_back(cyclo_from_json(v, m));
  return out;
}

}  // namespace

Json rational_to_json(const Rational& r) { return Json(r.get_str()); }

Json cyclo_to_json(const Cyclo& c, long m) {
  Json out = Json::array();
  for (const auto& [k, r] : c.terms(m)) {
    out.push_back(Json::array({k, integer_to_json(r.get_num()), integer_to_json(r.get_den())}));
  }
  return out;
}

Cyclo cyclo_from_json(const Json& j, long m) {
  if (!j.is_array()) throw SchemaError("cyclotomic literal must be a list of [k, num, den] triples");
  std::vector<std::pair<long, Rational>> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer())
      throw SchemaError("cyclotomic literal term must be [k, num, den]");
    const mpz_class num = integer_from_json(t[1], "numerator");
    const mpz_class den = integer_from_json(t[2], "denominator");
    if (den <= 0) throw SchemaError("cyclotomic literal denominator must be positive");
    Rational r(num, den);
    r.canonicalize();
    terms.emplace_back(t[0].get<long>(), r);
  }
  return Cyclo::from_terms(m, terms);
}

Json group_to_json(const GroupModel& g) {
  const long m = g.conductor;
  Json out;
  out["name"] = g.name;
  out["order"] = g.order;
  out["dim_defining"] = g.dim;
  out["conductor"] = m;
  out["class_sizes"] = g.class_sizes;
  Json table = Json::array();
  for (std::size_t i = 0; i < g.char_table.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < g.char_table.cols(); ++k) row.push_back(cyclo_to_json(g.char_table(i, k), m));
    table.push_back(row);
  }
  out["char_table"] = table;
  Json def = Json::array();
  for (const auto& v : g.defining_row) def.push_back(cyclo_to_json(v, m));
  out["defining_row"] = def;
  if (g.class_reps) {
    Json reps = Json::array();
    for (const auto& mat : *g.class_reps) {
      Json rows = Json::array();
      for (std::size_t a = 0; a < mat.rows(); ++a) {
        Json row = Json::array();
        for (std::size_t b = 0; b < mat.cols(); ++b) row.push_back(cyclo_to_json(mat(a, b), m));
        rows.push_back(row);
      }
      reps.push_back(rows);
    }
    out["class_reps"] = reps;
  }
  return out;
}

GroupModel group_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("group file must contain a JSON object");
  static const char* known[] = {"name", "order", "dim_defining", "conductor", "class_sizes",
                                "char_table", "defining_row", "class_reps"};
  for (const auto& [key, _] : j.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw SchemaError("unknown field '" + key + "'");
  }
  GroupModel g;
  if (!j.contains("name") || !j.at("name").is_string()) throw SchemaError("missing string field 'name'");
  g.name = j.at("name").get<std::string>();
  g.family = Family::Imported;
  g.order = long_field(j, "order");
  g.dim = static_cast<int>(long_field(j, "dim_defining"));
  const long m_raw = long_field(j, "conductor");
  g.conductor = normalized_conductor(m_raw);

  for (const auto& s : array_field(j, "class_sizes")) {
    const mpz_class z = integer_from_json(s, "class size");
    if (!z.fits_slong_p() || z <= 0) throw SchemaError("class sizes must be positive integers");
    g.class_sizes.push_back(z.get_si());
  }
  const Json& table = array_field(j, "char_table");
  const std::size_t n = table.size();
  g.char_table = CycloMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::vector<Cyclo> row = cyclo_row(table[i], m_raw, "char_table row");
    if (row.size() != n) throw SizeMismatchError("char_table must be square (row " + std::to_string(i) + ")");
    for (std::size_t k = 0; k < n; ++k) g.char_table(i, k) = row[k];
  }
  g.defining_row = cyclo_row(array_field(j, "defining_row"), m_raw, "defining_row");
  if (j.contains("class_reps")) {
    std::vector<CycloMatrix> reps;
    for (const auto& mj : array_field(j, "class_reps")) {
      if (!mj.is_array()) throw SchemaError("class representative must be a matrix");
      CycloMatrix mat(mj.size(), mj.empty() ? 0 : mj[0].size());
      for (std::size_t a = 0; a < mj.size(); ++a) {
        const std::vector<Cyclo> row = cyclo_row(mj[a], m_raw, "class representative row");
        if (row.size() != mat.cols()) throw SchemaError("class representative rows differ in length");
        for (std::size_t b = 0; b < row.size(); ++b) mat(a, b) = row[b];
      }
      reps.push_back(std::move(mat));
    }
    g.class_reps = std::move(reps);
  }
  for (std::size_t i = 0; i < n; ++i) g.irrep_labels.push_back("R" + std::to_string(i));
  for (std::size_t k = 0; k < g.class_sizes.size(); ++k) g.class_labels.push_back("C" + std::to_string(k));
  require_valid(g);
  return g;
}

GroupModel load_group(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open group file: " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError(std::string("group file is not valid JSON: ") + e.what());
  }
  return group_from_json(j);
}

void save_group(const GroupModel& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write group file: " + path);
  out << group_to_json(g).dump(1) << "\n";
}

}  // namespace cgs
