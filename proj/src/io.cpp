#include "lforms/io.hpp"

#include <fstream>
#include <sstream>

namespace lforms::io {

Json rational_to_json(const Rational& q) { return rational_to_string(q); }

Rational rational_from_json(const Json& j, const std::string& where) {
  try {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(where + ": " + e.what());
  }
  throw ParseError(where + ": expected a rational (\"p/q\" string or integer)");
}

Json quadelem_to_json(const QuadElem& x, long field_d) {
  if (field_d == 0) return rational_to_json(x.rational_value());
  Json j;
  j["a"] = rational_to_json(x.a());
  j["b"] = rational_to_json(x.b());
  j["d"] = field_d;
  return j;
}

QuadElem quadelem_from_json(const Json& j, long field_d, const std::string& where) {
  if (j.is_object()) {
    if (!j.contains("a") || !j.contains("b") || !j.contains("d"))
      throw ParseError(where + ": field element object needs keys a, b, d");
    long d = 0;
    if (!j["d"].is_number_integer()) throw ParseError(where + ".d: expected an integer");
    d = j["d"].get<long>();
    if (d != field_d && !(d == 0))
      throw ParseError(where + ".d: element lives in Q(sqrt " + std::to_string(d) +
                       ") but the form is over " + (field_d ? "Q(sqrt " + std::to_string(field_d) + ")" : "Q"));
    Rational a = rational_from_json(j["a"], where + ".a");
    Rational b = rational_from_json(j["b"], where + ".b");
    if (sgn(b) != 0 && field_d == 0)
      throw ParseError(where + ": irrational entry in a form over Q");
    try {
      return QuadElem(a, b, sgn(b) == 0 ? 0 : field_d);
    } catch (const std::domain_error& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  Rational a = rational_from_json(j, where);
  return QuadElem(a);
}

Json field_to_json(const FieldTag& f) {
  if (f.is_rational()) return "Q";
  Json j;
  j["sqrt"] = f.d;
  return j;
}

FieldTag field_from_json(const Json& j, const std::string& where) {
  if (j.is_string() && j.get<std::string>() == "Q") return FieldTag::Q();
  if (j.is_object() && j.contains("sqrt") && j["sqrt"].is_number_integer()) {
    long d = j["sqrt"].get<long>();
    try {
      validate_field_d(d);
    } catch (const std::domain_error& e) {
      throw ParseError(where + ".sqrt: " + e.what());
    }
    if (d == 0) throw ParseError(where + ".sqrt: use \"Q\" for the rational field");
    return FieldTag::Qsqrt(d);
  }
  throw ParseError(where + ": expected \"Q\" or {\"sqrt\": d}");
}

Json mat_to_json(const Mat& m, long field_d) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(quadelem_to_json(m.at(i, j), field_d));
    rows.push_back(row);
  }
  return rows;
}

Mat mat_from_json(const Json& j, long field_d, const std::string& where) {
  if (!j.is_array() || j.empty()) throw ParseError(where + ": expected a nonempty array of rows");
  int rows = static_cast<int>(j.size());
  int cols = -1;
  Mat m;
  for (int i = 0; i < rows; ++i) {
    const Json& row = j[static_cast<size_t>(i)];
    if (!row.is_array()) throw ParseError(where + "[" + std::to_string(i) + "]: expected an array");
    if (cols < 0) {
      cols = static_cast<int>(row.size());
      m = Mat(rows, cols);
    }
    if (static_cast<int>(row.size()) != cols)
      throw ParseError(where + "[" + std::to_string(i) + "]: ragged row");
    for (int k = 0; k < cols; ++k)
      m.at(i, k) = quadelem_from_json(row[static_cast<size_t>(k)], field_d,
                                      where + "[" + std::to_string(i) + "][" + std::to_string(k) + "]");
  }
  return m;
}

Json form_to_json(const QuadraticForm& f) {
  Json j;
  j["dim"] = f.dim();
  j["field"] = field_to_json(f.field());
  j["gram"] = mat_to_json(f.gram(), f.field().d);
  return j;
}

QuadraticForm form_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected a form object");
  for (const char* key : {"dim", "field", "gram"})
    if (!j.contains(key)) throw ParseError(where + ": missing key \"" + key + "\"");
  FieldTag field = field_from_json(j["field"], where + ".field");
  Mat gram = mat_from_json(j["gram"], field.d, where + ".gram");
  if (!j["dim"].is_number_integer() || j["dim"].get<long>() != gram.rows())
    throw ParseError(where + ".dim: does not match the gram matrix size");
  try {
    return QuadraticForm(field, std::move(gram));
  } catch (const std::domain_error& e) {
    throw ParseError(where + ".gram: " + e.what());
  }
}

Json ivec_to_json(const IVec& v) {
  Json a = Json::array();
  for (const auto& x : v) {
    if (x.fits_slong_p())
      a.push_back(x.get_si());
    else
      a.push_back(x.get_str());
  }
  return a;
}

IVec ivec_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an integer vector");
  IVec v;
  for (size_t i = 0; i < j.size(); ++i) {
    const Json& x = j[i];
    if (x.is_number_integer())
      v.push_back(Int(static_cast<long>(x.get<long long>())));
    else if (x.is_string())
      v.push_back(Int(x.get<std::string>()));
    else
      throw ParseError(where + "[" + std::to_string(i) + "]: expected an integer");
  }
  return v;
}

Json rvec_to_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rational_to_json(x));
  return a;
}

std::vector<Rational> rvec_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected a vector of rationals");
  std::vector<Rational> v;
  for (size_t i = 0; i < j.size(); ++i)
    v.push_back(rational_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

Json family_to_json(const HyperplaneFamily& f) {
  Json j;
  j["space"] = form_to_json(f.space().form());
  Json normals = Json::array();
  for (const auto& n : f.normals()) normals.push_back(ivec_to_json(n));
  j["normals"] = normals;
  return j;
}

HyperplaneFamily family_from_json(const Json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("space") || !j.contains("normals"))
    throw ParseError(where + ": expected {\"space\": <form>, \"normals\": [[...]]}");
  QuadraticForm f = form_from_json(j["space"], where + ".space");
  if (!j["normals"].is_array()) throw ParseError(where + ".normals: expected an array");
  std::vector<IVec> normals;
  for (size_t i = 0; i < j["normals"].size(); ++i)
    normals.push_back(ivec_from_json(j["normals"][i], where + ".normals[" + std::to_string(i) + "]"));
  try {
    return HyperplaneFamily(LorentzSpace(std::move(f)), std::move(normals));
  } catch (const std::domain_error& e) {
    throw ParseError(where + ": " + e.what());
  }
}

Json coxeter_to_json(const CoxeterMatrix& m) {
  Json j;
  j["size"] = m.size();
  Json rows = Json::array();
  for (int i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < m.size(); ++k) row.push_back(m.at(i, k));
    rows.push_back(row);
  }
  j["matrix"] = rows;
  return j;
}

CoxeterMatrix coxeter_from_json(const Json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("size") || !j.contains("matrix"))
    throw ParseError(where + ": expected {\"size\": m, \"matrix\": [[...]]} (0 = infinite label)");
  if (!j["size"].is_number_integer()) throw ParseError(where + ".size: expected an integer");
  int size = j["size"].get<int>();
  if (!j["matrix"].is_array()) throw ParseError(where + ".matrix: expected an array");
  std::vector<std::vector<int>> entries;
  for (size_t i = 0; i < j["matrix"].size(); ++i) {
    const Json& row = j["matrix"][i];
    if (!row.is_array()) throw ParseError(where + ".matrix[" + std::to_string(i) + "]: expected an array");
    std::vector<int> r;
    for (size_t k = 0; k < row.size(); ++k) {
      if (!row[k].is_number_integer())
        throw ParseError(where + ".matrix[" + std::to_string(i) + "][" + std::to_string(k) +
                         "]: expected an integer label");
      r.push_back(row[k].get<int>());
    }
    entries.push_back(std::move(r));
  }
  try {
    return CoxeterMatrix(size, std::move(entries));
  } catch (const std::domain_error& e) {
    throw ParseError(where + ".matrix: " + e.what());
  }
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

Json parse_text(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(what + ": " + e.what());
  }
}

Json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str(), path);
}

}  // namespace lforms::io
