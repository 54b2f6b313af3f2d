#include "permat/json_io.hpp"

#include <cstdio>
#include <fstream>

namespace permat {

FieldDescriptor field_from_string(const std::string& s) {
    if (s == "q" || s == "Q") return FieldDescriptor::rationals();
    if (s.rfind("fp:", 0) == 0) return FieldDescriptor::prime(std::stoll(s.substr(3)));
    if (s.rfind("qsqrt:", 0) == 0) return FieldDescriptor::quadratic(std::stoll(s.substr(6)));
    throw ParseError("unknown field '" + s + "' (expected q, fp:<p> or qsqrt:<d>)");
}

Json field_to_json(const FieldDescriptor& f) {
    switch (f.kind()) {
        case FieldKind::Rationals: return Json{{"kind", "rationals"}};
        case FieldKind::Prime: return Json{{"kind", "prime"}, {"p", f.p()}};
        case FieldKind::Quadratic: return Json{{"kind", "quadratic"}, {"d", f.d()}};
    }
    throw ParseError("bad field");
}

FieldDescriptor field_from_json(const Json& j) {
    if (j.is_string()) return field_from_string(j.get<std::string>());
    if (!j.is_object() || !j.contains("kind")) throw ParseError("field must be an object with 'kind'");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "rationals") return FieldDescriptor::rationals();
    if (kind == "prime") return FieldDescriptor::prime(j.at("p").get<std::int64_t>());
    if (kind == "quadratic") return FieldDescriptor::quadratic(j.at("d").get<std::int64_t>());
    throw ParseError("unknown field kind '" + kind + "'");
}

namespace {

std::string rat_to_string(const Rat& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in '" + s + "'");
        return Rat(num, den);
    } catch (const std::exception& e) {
        throw ParseError("bad rational '" + s + "'");
    }
}

Rat rat_from_json(const Json& j) {
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
    throw ParseError("expected a rational as string or integer, got " + j.dump());
}

}  // namespace

Json scalar_to_json(const Scalar& s) {
    switch (s.field().kind()) {
        case FieldKind::Rationals: return rat_to_string(s.a());
        case FieldKind::Prime: return static_cast<std::int64_t>(s.residue());
        case FieldKind::Quadratic: return Json::array({rat_to_string(s.a()), rat_to_string(s.b())});
    }
    throw ParseError("bad scalar");
}

Scalar scalar_from_json(const FieldDescriptor& f, const Json& j) {
    switch (f.kind()) {
        case FieldKind::Rationals: return Scalar::from_rat(f, rat_from_json(j));
        case FieldKind::Prime: return Scalar::from_rat(f, rat_from_json(j));
        case FieldKind::Quadratic: {
            if (j.is_array()) {
                if (j.size() != 2) throw ParseError("quadratic scalar needs two coordinates");
                return Scalar::quadratic(f, rat_from_json(j[0]), rat_from_json(j[1]));
            }
            return Scalar::quadratic(f, rat_from_json(j), 0);
        }
    }
    throw ParseError("bad scalar");
}

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.n(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.n(); ++j) row.push_back(scalar_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return Json{{"field", field_to_json(m.field())}, {"rows", std::move(rows)}};
}

Matrix matrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("field") || !j.contains("rows"))
        throw ParseError("matrix must be an object with 'field' and 'rows'");
    FieldDescriptor f = field_from_json(j.at("field"));
    const Json& rows = j.at("rows");
    if (!rows.is_array() || rows.empty()) throw ParseError("matrix needs at least one row");
    int n = int(rows.size());
    Matrix m(f, n);
    for (int i = 0; i < n; ++i) {
        if (!rows[i].is_array() || int(rows[i].size()) != n)
            throw ParseError("matrix must be square");
        for (int c = 0; c < n; ++c) m.at(i, c) = scalar_from_json(f, rows[i][c]);
    }
    return m;
}

Json polynomial_to_json(const Polynomial& p) {
    Json out = Json::array();
    for (int i = 0; i <= p.degree(); ++i) out.push_back(scalar_to_json(p.coeff(i)));
    return out;
}

Polynomial polynomial_from_json(const FieldDescriptor& f, const Json& j) {
    if (!j.is_array()) throw ParseError("polynomial must be an array of scalars");
    std::vector<Scalar> cs;
    for (const auto& c : j) cs.push_back(scalar_from_json(f, c));
    return Polynomial(f, std::move(cs));
}

Json divisor_to_json(const ElementaryDivisor& d) {
    switch (d.kind) {
        case ElementaryDivisor::Kind::X: return "x";
        case ElementaryDivisor::Kind::Nilpotent: return Json{{"nilpotent", d.k}};
        case ElementaryDivisor::Kind::Torsion: return Json{{"torsion", polynomial_to_json(d.poly)}};
    }
    throw ParseError("bad divisor");
}

Json divisors_to_json(const std::vector<ElementaryDivisor>& ds) {
    Json out = Json::array();
    for (const auto& d : ds) out.push_back(divisor_to_json(d));
    return out;
}

namespace {

Json matrix_rows(const Matrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.n(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.n(); ++j) row.push_back(scalar_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_rows(const FieldDescriptor& f, const Json& rows) {
    if (!rows.is_array() || rows.empty()) throw ParseError("expected matrix rows");
    int n = int(rows.size());
    Matrix m(f, n);
    for (int i = 0; i < n; ++i)
        for (int c = 0; c < n; ++c) m.at(i, c) = scalar_from_json(f, rows.at(i).at(c));
    return m;
}

}  // namespace

Json certificate_to_json(const Certificate& cert, const FieldDescriptor& f,
                         const VerifyReport& report) {
    Json parts;
    if (cert.kind == Certificate::Kind::ET) {
        parts = Json{{"E", matrix_rows(cert.first)}, {"T", matrix_rows(cert.second)}};
    } else {
        parts = Json{{"T", matrix_rows(cert.first)}, {"N", matrix_rows(cert.second)}};
    }
    Json checks = Json::array();
    for (const auto& c : report.checks) {
        Json e{{"name", c.name}, {"pass", c.pass}};
        if (!c.detail.empty()) e["detail"] = c.detail;
        checks.push_back(std::move(e));
    }
    return Json{{"kind", cert.kind == Certificate::Kind::ET ? "ET" : "TN"},
                {"field", field_to_json(f)},
                {"parts", std::move(parts)},
                {"torsion_order", cert.torsion_order},
                {"transform", matrix_rows(cert.transform)},
                {"checks", std::move(checks)}};
}

Certificate certificate_from_json(const Json& j) {
    FieldDescriptor f = field_from_json(j.at("field"));
    std::string kind = j.at("kind").get<std::string>();
    const Json& parts = j.at("parts");
    Matrix transform = matrix_from_rows(f, j.at("transform"));
    std::int64_t order = j.at("torsion_order").get<std::int64_t>();
    if (kind == "ET") {
        return Certificate{Certificate::Kind::ET, matrix_from_rows(f, parts.at("E")),
                           matrix_from_rows(f, parts.at("T")), order, std::move(transform)};
    }
    if (kind == "TN") {
        return Certificate{Certificate::Kind::TN, matrix_from_rows(f, parts.at("T")),
                           matrix_from_rows(f, parts.at("N")), order, std::move(transform)};
    }
    throw ParseError("certificate kind must be ET or TN");
}

Json witness_to_json(const PeriodWitness& w) {
    return Json{{"n0", w.n0}, {"m0", w.m0}, {"nil_index", w.nil_index}, {"torsion_order", w.torsion_order}};
}

Json verify_report_to_json(const VerifyReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json e{{"name", c.name}, {"pass", c.pass}};
        if (!c.detail.empty()) e["detail"] = c.detail;
        checks.push_back(std::move(e));
    }
    return Json{{"all_pass", r.all_pass()}, {"checks", std::move(checks)}};
}

Json obstruction_report_to_json(const ObstructionReport& r) {
    Json candidates = Json::array();
    for (auto d : r.candidates) candidates.push_back(d);
    return Json{{"matrix", matrix_to_json(r.A)},
                {"period_check", r.period_ok},
                {"forced", polynomial_to_json(r.forced)},
                {"forced_quadratic", polynomial_to_json(r.forced_quadratic)},
                {"min_poly", polynomial_to_json(r.min_poly_q)},
                {"min_poly_trace", scalar_to_json(r.min_poly_trace)},
                {"cyclotomic_candidates", std::move(candidates)},
                {"all_candidates_differ", r.all_candidates_differ}};
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError("invalid JSON in '" + path + "': " + e.what());
    }
    return j;
}

void write_json_file(const std::string& path, const Json& j) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw Error("cannot write '" + tmp + "'");
        out << j.dump(2) << "\n";
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw Error("cannot move temporary file onto '" + path + "'");
}

}  // namespace permat
