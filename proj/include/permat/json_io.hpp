#pragma once

#include <json.hpp>

#include "permat/decompose.hpp"

namespace permat {

using Json = nlohmann::json;

/// "q", "fp:<p>" or "qsqrt:<d>".
FieldDescriptor field_from_string(const std::string& s);

Json field_to_json(const FieldDescriptor& f);
FieldDescriptor field_from_json(const Json& j);

/// Spec encodings: Q as "a/b" or "a"; F_p as an integer; Q(sqrt d) as
/// ["a/b", "c/e"] meaning a/b + (c/e)*sqrt(d).
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const FieldDescriptor& f, const Json& j);

/// {"field": {...}, "rows": [[scalar, ...], ...]}
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// Array of scalar encodings, constant term first.
Json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const FieldDescriptor& f, const Json& j);

/// "x" | {"nilpotent": k} | {"torsion": [coeffs]}
Json divisor_to_json(const ElementaryDivisor& d);
Json divisors_to_json(const std::vector<ElementaryDivisor>& ds);

Json certificate_to_json(const Certificate& cert, const FieldDescriptor& f,
                         const VerifyReport& report);
Certificate certificate_from_json(const Json& j);

Json witness_to_json(const PeriodWitness& w);
Json verify_report_to_json(const VerifyReport& r);
Json obstruction_report_to_json(const ObstructionReport& r);

Json read_json_file(const std::string& path);
/// Writes atomically (temp file + rename).
void write_json_file(const std::string& path, const Json& j);

}  // namespace permat
