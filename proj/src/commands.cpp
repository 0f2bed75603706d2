#include "bps/commands.hpp"

#include <cstdlib>
#include <functional>
#include <sstream>

namespace bps::cli {

namespace {

std::string_view status_name(Status s) {
    switch (s) {
    case Status::Ok: return "ok";
    case Status::Error: return "error";
    case Status::Undecided: return "undecided";
    }
    return "error";
}

CommandResult guarded(const std::string& command, const std::function<CommandResult()>& fn) {
    try {
        CommandResult r = fn();
        r.command = command;
        return r;
    } catch (const StageError& e) {
        return {Status::Error, command, Json{{"error", e.code()}, {"stage", e.stage()}, {"message", e.what()}}};
    } catch (const Error& e) {
        return {Status::Error, command, Json{{"error", e.code()}, {"message", e.what()}}};
    }
}

CommandResult ok(Json payload) { return {Status::Ok, {}, std::move(payload)}; }

} // namespace

Json CommandResult::to_json() const {
    return Json{{"status", std::string(status_name(status))}, {"command", command}, {"payload", payload}};
}

OutputFormat parse_output_format(const std::string& name) {
    if (name == "json") return OutputFormat::Json;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "text") return OutputFormat::Text;
    throw Error("bad-format", "unknown output format '" + name + "'");
}

std::string render(const CommandResult& result, OutputFormat format) {
    if (format == OutputFormat::Csv && result.command == "scan-density" && result.status == Status::Ok) {
        std::ostringstream os;
        os << density_csv_header() << '\n';
        for (const auto& row : result.payload["rows"]) {
            os << row["K"].get<std::int64_t>() << ',' << row["count_Q"].get<std::uint64_t>() << ','
               << row["count_total"].get<std::uint64_t>() << ',' << row["fraction_num"].get<std::string>() << ','
               << row["fraction_den"].get<std::string>() << ',' << row["bound_num"].get<std::string>() << ','
               << row["bound_den"].get<std::string>() << '\n';
        }
        return os.str();
    }
    if (format == OutputFormat::Text) {
        std::ostringstream os;
        os << "status: " << status_name(result.status) << '\n';
        for (const auto& [key, value] : result.payload.items())
            os << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
        return os.str();
    }
    return result.to_json().dump(2) + "\n";
}

unsigned max_refinement_from_env() {
    const char* raw = std::getenv("BPS_MAX_REFINEMENT");
    if (!raw || !*raw) return kDefaultMaxRefinement;
    char* end = nullptr;
    const unsigned long v = std::strtoul(raw, &end, 10);
    if (*end != '\0' || v == 0 || v > 100000) throw Error("bad-env", "BPS_MAX_REFINEMENT must be a positive integer");
    return static_cast<unsigned>(v);
}

namespace {

Json matrix_summary(const IntMatrix& m, FormVariant form) {
    Json out;
    out["dimension"] = m.dim();
    out["form"] = std::string(to_string(form));
    out["symplectic"] = is_symplectic(m, SymplecticForm(form, m.dim() / 2));
    out["det"] = det(m).get_str();
    const IntPoly p = charpoly(m);
    out["charpoly"] = to_json(p);
    out["charpoly_pretty"] = p.to_pretty();
    out["palindromic"] = is_palindromic(p);
    out["reciprocal"] = is_reciprocal(p);
    return out;
}

} // namespace

CommandResult cmd_verify(const std::string& matrix_content, FormVariant form) {
    return guarded("verify-symplectic", [&] {
        const IntMatrix m = parse_matrix(matrix_content);
        Json payload = matrix_summary(m, form);
        payload["matrix"] = to_json(m);
        return ok(std::move(payload));
    });
}

CommandResult cmd_charpoly(const std::string& matrix_content) {
    return guarded("charpoly", [&] {
        const IntMatrix m = parse_matrix(matrix_content);
        const IntPoly p = charpoly(m);
        Json payload;
        payload["dimension"] = m.dim();
        payload["charpoly"] = to_json(p);
        payload["charpoly_pretty"] = p.to_pretty();
        payload["det"] = det(m).get_str();
        payload["square_free_decomposition"] = to_json(square_free_decomposition(p));
        payload["all_roots_nonsimple"] = all_roots_nonsimple(p);
        payload["palindromic"] = is_palindromic(p);
        return ok(std::move(payload));
    });
}

CommandResult cmd_construct(const ConstructRequest& request) {
    return guarded("construct", [&] {
        if (request.family == "y") {
            if (request.g < 2) throw Error("bad-params", "g must be at least 2");
            YFamilyParams params;
            params.g = static_cast<unsigned>(request.g);
            params.a = parse_integer(request.a);
            params.b = parse_integer(request.b);
            if (request.z_content) params.z = parse_matrix(*request.z_content);
            NonsurjectivityCertificate cert = nonsurjectivity_certificate(params, request.max_refinement);
            Json payload;
            payload["family"] = "y";
            payload["params"] = Json{{"g", params.g}, {"a", params.a.get_str()}, {"b", params.b.get_str()},
                                     {"lambda_squared", params.lambda_squared().get_str()}};
            if (params.z) payload["params"]["Z"] = to_json(*params.z);
            payload["matrix"] = to_json(cert.a);
            payload["certificate"] = to_json(cert);
            if (request.form != FormVariant::StandardBlock)
                payload["form_check"] = Json{{"form", std::string(to_string(request.form))},
                                             {"symplectic", is_symplectic(cert.a, SymplecticForm(request.form, params.g))}};
            return ok(std::move(payload));
        }
        if (request.family == "block") {
            if (!request.blocks_content) throw Error("bad-params", "family=block needs a blocks file");
            Json blocks_json;
            try {
                blocks_json = Json::parse(*request.blocks_content);
            } catch (const nlohmann::json::parse_error& e) {
                throw Error("parse", std::string("invalid blocks JSON: ") + e.what());
            }
            if (!blocks_json.is_array() || blocks_json.empty())
                throw Error("parse", "blocks file must hold a JSON array of matrices");
            BlockDiagonalParams params;
            for (const auto& b : blocks_json) params.blocks.push_back(matrix_from_json(b));
            const IntMatrix m = build_block_diagonal(params);
            Json payload = matrix_summary(m, FormVariant::PairwiseBlocks);
            payload["family"] = "block";
            payload["matrix"] = to_json(m);
            const IntPoly p = charpoly(m);
            payload["all_roots_nonsimple"] = all_roots_nonsimple(p);
            // The same matrix checked against the other two layouts of J.
            Json other = Json::object();
            for (FormVariant v : {FormVariant::StandardBlock, FormVariant::Tridiagonal})
                other[std::string(to_string(v))] = is_symplectic(m, SymplecticForm(v, m.dim() / 2));
            payload["symplectic_under_other_forms"] = std::move(other);
            const AnnulusCertificate cert = certify_biperron(p, CertMode::FullSpectrum, request.max_refinement);
            payload["annulus"] = to_json(cert);
            payload["verdict"] = std::string(to_string(cert.verdict));
            return ok(std::move(payload));
        }
        throw Error("bad-params", "unknown family '" + request.family + "' (expected y or block)");
    });
}

CommandResult cmd_certify(const std::string& poly_content, CertMode mode, unsigned max_refinement) {
    return guarded("certify-biperron", [&] {
        const IntPoly p = parse_poly(poly_content);
        if (p.is_zero()) throw Error("zero-polynomial", "cannot certify the zero polynomial");
        const AnnulusCertificate cert = certify_biperron(p, mode, max_refinement);
        CommandResult r = ok(to_json(cert));
        if (cert.verdict == Verdict::Undecided) r.status = Status::Undecided;
        return r;
    });
}

CommandResult cmd_density(const std::vector<std::int64_t>& ks, unsigned jobs) {
    return guarded("scan-density", [&] {
        if (ks.empty()) throw Error("bad-params", "no K values given");
        Json rows = Json::array();
        for (std::int64_t k : ks) rows.push_back(to_json(density_scan(k, jobs)));
        return ok(Json{{"rows", std::move(rows)}});
    });
}

CommandResult cmd_exceptional_set(std::int64_t scan_bound, unsigned jobs) {
    return guarded("exceptional-set", [&] {
        const auto members = exceptional_set(scan_bound, jobs);
        Json list = Json::array();
        bool small_n = true;
        for (const auto& q : members) {
            list.push_back(Json::array({q.n, q.m}));
            small_n = small_n && q.n >= -3 && q.n <= 3;
        }
        return ok(Json{{"scan_bound", scan_bound},
                       {"count", members.size()},
                       {"members", std::move(list)},
                       {"all_abs_n_at_most_3", small_n}});
    });
}

CommandResult cmd_random_symplectic(unsigned g, unsigned steps, std::uint64_t seed) {
    return guarded("random-symplectic", [&] {
        const IntMatrix m = random_symplectic(g, steps, seed);
        Json payload = matrix_summary(m, FormVariant::StandardBlock);
        payload["g"] = g;
        payload["steps"] = steps;
        payload["seed"] = seed;
        payload["matrix"] = to_json(m);
        return ok(std::move(payload));
    });
}

} // namespace bps::cli
