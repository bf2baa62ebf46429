#pragma once

#include <json.hpp>

#include "lforms/coxeter.hpp"
#include "lforms/quadratic_form.hpp"
#include "lforms/separability.hpp"

namespace lforms::io {

using Json = nlohmann::json;

// Input rejection carrying a human-readable position ("$.gram[2][1]").
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rationals serialize as canonical "p/q" strings (sign on the numerator,
// "/q" omitted when q = 1); integers are accepted on input.
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j, const std::string& where);

// Field elements: plain rational string over Q, {"a","b","d"} objects over
// Q(sqrt d); both accepted on input for quadratic fields.
Json quadelem_to_json(const QuadElem& x, long field_d);
QuadElem quadelem_from_json(const Json& j, long field_d, const std::string& where);

Json field_to_json(const FieldTag& f);
FieldTag field_from_json(const Json& j, const std::string& where);

// {"dim": n, "field": "Q" | {"sqrt": d}, "gram": [[...]]}; the full matrix is
// given and symmetry is validated, not assumed.
Json form_to_json(const QuadraticForm& f);
QuadraticForm form_from_json(const Json& j, const std::string& where = "$");

Json mat_to_json(const Mat& m, long field_d);
Mat mat_from_json(const Json& j, long field_d, const std::string& where);

Json ivec_to_json(const IVec& v);
IVec ivec_from_json(const Json& j, const std::string& where);

Json rvec_to_json(const std::vector<Rational>& v);
std::vector<Rational> rvec_from_json(const Json& j, const std::string& where);

// {"space": <form>, "normals": [[...], ...]}
Json family_to_json(const HyperplaneFamily& f);
HyperplaneFamily family_from_json(const Json& j, const std::string& where = "$");

// {"size": m, "matrix": [[...]]} with 0 encoding the infinite label.
Json coxeter_to_json(const CoxeterMatrix& m);
CoxeterMatrix coxeter_from_json(const Json& j, const std::string& where = "$");

// Canonical text: two-space indent, sorted keys (nlohmann default), trailing
// newline.  parse(dump(x)) == x and dump(parse(canonical)) is byte-identical.
std::string dump_canonical(const Json& j);
Json parse_file(const std::string& path);
Json parse_text(const std::string& text, const std::string& what);

}  // namespace lforms::io
