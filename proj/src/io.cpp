#include "bps/io.hpp"

#include <fstream>
#include <sstream>

namespace bps {

Json to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m(i, j).get_str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const IntPoly& p) {
    Json out = Json::array();
    for (const auto& c : p.coeffs()) out.push_back(c.get_str());
    return out;
}

Json to_json(const Rational& r) { return r.get_str(); }

Json to_json(const IsolatingInterval& iv) {
    return Json{{"lo", to_json(iv.lo)},
                {"hi", to_json(iv.hi)},
                {"lo_approx", iv.lo.get_d()},
                {"hi_approx", iv.hi.get_d()}};
}

Json to_json(const DiskRecord& rec) {
    Json out{{"radius", to_json(rec.radius)}};
    if (rec.result.ok()) {
        out["count"] = rec.result.count;
    } else {
        out["count"] = "boundary";
        out["root_on_circle"] = rec.result.root_on_circle;
    }
    return out;
}

Json to_json(const SquareFreeDecomposition& sfd) {
    Json parts = Json::array();
    for (const auto& part : sfd.parts)
        parts.push_back(Json{{"factor", to_json(part.factor)}, {"multiplicity", part.multiplicity}});
    return Json{{"content", sfd.content.get_str()}, {"parts", std::move(parts)}};
}

Json to_json(const AnnulusCertificate& cert) {
    Json out;
    out["polynomial"] = to_json(cert.poly);
    out["certified_polynomial"] = to_json(cert.certified_poly);
    out["mode"] = std::string(to_string(cert.mode));
    out["fallback"] = cert.fallback;
    out["verdict"] = std::string(to_string(cert.verdict));
    if (cert.leading_bracket)
        out["leading_bracket"] = to_json(*cert.leading_bracket);
    else
        out["leading_bracket"] = "none";
    out["lambda_multiplicity"] = cert.lambda_multiplicity;
    out["inner_radius"] = cert.inner_radius ? to_json(*cert.inner_radius) : Json(nullptr);
    out["outer_radius"] = cert.outer_radius ? to_json(*cert.outer_radius) : Json(nullptr);
    if (!cert.inner_closure.empty()) out["inner_closure"] = cert.inner_closure;
    Json counts = Json::array();
    for (const auto& rec : cert.disk_counts) counts.push_back(to_json(rec));
    out["disk_counts"] = std::move(counts);
    out["notes"] = cert.notes;
    return out;
}

Json to_json(const NonsurjectivityCertificate& cert) {
    Json out;
    out["Y"] = to_json(cert.y);
    out["A"] = to_json(cert.a);
    out["symplectic"] = cert.symplectic;
    out["form"] = std::string(to_string(FormVariant::StandardBlock));
    out["charpoly"] = to_json(cert.charpoly);
    out["charpoly_pretty"] = cert.charpoly.to_pretty();
    if (cert.expected) {
        out["closed_form"] = to_json(*cert.expected);
        out["matches_closed_form"] = cert.matches_closed_form;
    }
    out["square_free_decomposition"] = to_json(cert.decomposition);
    out["nonsimple"] = cert.all_nonsimple;
    out["leading_simplicity"] = std::string(to_string(cert.leading_simplicity));
    out["annulus"] = to_json(cert.annulus);
    out["verdict"] = std::string(to_string(cert.annulus.verdict));
    return out;
}

Json to_json(const DensityReport& report) {
    return Json{{"K", report.k},
                {"count_Q", report.count_q},
                {"count_total", report.count_total},
                {"fraction_num", report.fraction.get_num().get_str()},
                {"fraction_den", report.fraction.get_den().get_str()},
                {"bound_num", report.bound.get_num().get_str()},
                {"bound_den", report.bound.get_den().get_str()},
                {"fraction_approx", report.fraction.get_d()},
                {"bound_approx", report.bound.get_d()}};
}

namespace {

Integer integer_from_json(const Json& v) {
    if (v.is_number_integer()) {
        if (v.is_number_unsigned()) return Integer(std::to_string(v.get<std::uint64_t>()));
        return Integer(std::to_string(v.get<std::int64_t>()));
    }
    if (v.is_string()) return parse_integer(v.get<std::string>());
    throw Error("parse", "expected an integer or a decimal string, got " + v.dump());
}

} // namespace

IntMatrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw Error("parse", "matrix JSON must be a non-empty array of rows");
    std::vector<std::vector<Integer>> rows;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const Json& row = j[i];
        if (!row.is_array()) throw Error("parse", "row " + std::to_string(i + 1) + " is not an array");
        std::vector<Integer> vals;
        for (std::size_t c = 0; c < row.size(); ++c) {
            try {
                vals.push_back(integer_from_json(row[c]));
            } catch (const Error& e) {
                throw Error("parse", "row " + std::to_string(i + 1) + ", entry " + std::to_string(c + 1) + ": " + e.what());
            }
        }
        if (vals.size() != j.size())
            throw Error("parse", "row " + std::to_string(i + 1) + " has " + std::to_string(vals.size()) +
                                     " entries, expected " + std::to_string(j.size()));
        rows.push_back(std::move(vals));
    }
    return IntMatrix::from_rows(rows);
}

IntPoly poly_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw Error("parse", "polynomial JSON must be a non-empty array");
    std::vector<Integer> coeffs;
    for (const auto& v : j) coeffs.push_back(integer_from_json(v));
    return IntPoly(std::move(coeffs));
}

namespace {

bool looks_like_json(const std::string& content) {
    auto pos = content.find_first_not_of(" \t\r\n");
    return pos != std::string::npos && content[pos] == '[';
}

Json parse_json_or_throw(const std::string& content) {
    try {
        return Json::parse(content);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error("parse", std::string("invalid JSON: ") + e.what());
    }
}

} // namespace

IntMatrix parse_matrix(const std::string& content) {
    if (looks_like_json(content)) return matrix_from_json(parse_json_or_throw(content));
    return parse_matrix_text(content);
}

IntPoly parse_poly(const std::string& content) {
    if (looks_like_json(content)) return poly_from_json(parse_json_or_throw(content));
    return parse_poly_text(content);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("io", "cannot read '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string density_csv_header() { return "K,count_Q,count_total,fraction_num,fraction_den,bound_num,bound_den"; }

std::string density_csv_row(const DensityReport& r) {
    std::ostringstream os;
    os << r.k << ',' << r.count_q << ',' << r.count_total << ',' << r.fraction.get_num() << ','
       << r.fraction.get_den() << ',' << r.bound.get_num() << ',' << r.bound.get_den();
    return os.str();
}

} // namespace bps
