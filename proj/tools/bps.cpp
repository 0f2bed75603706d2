#include "bps/commands.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <sstream>
#include <thread>

namespace {

// "-" reads stdin, anything else is a path.
std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    return bps::read_file(path);
}

} // namespace

int main(int argc, char** argv) {
    using namespace bps;
    using namespace bps::cli;

    CLI::App app{"Exact integer symplectic matrices and bi-Perron certificates"};
    app.require_subcommand(1);

    std::string out_name = "json";
    app.add_option("--out", out_name, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    std::string form_name = "standard";
    app.add_option("--form", form_name, "Symplectic form layout")
        ->check(CLI::IsMember({"standard", "pairwise", "tridiagonal"}));
    std::string mode_name = "full-spectrum";
    app.add_option("--mode", mode_name, "Certification mode")->check(CLI::IsMember({"full-spectrum", "minimal-poly"}));
    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "Seed for random-symplectic");
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    app.add_option("--jobs", jobs, "Worker threads for grid scans")->check(CLI::PositiveNumber);
    std::optional<unsigned> max_refinement;
    app.add_option("--max-refinement", max_refinement, "Bisection budget (default BPS_MAX_REFINEMENT or 64)")
        ->check(CLI::PositiveNumber);

    std::string matrix_path;
    auto* verify = app.add_subcommand("verify-symplectic", "Check AᵀJA = J for a matrix file");
    verify->add_option("matrix", matrix_path, "Matrix file (text or JSON, '-' for stdin)")->required();
    verify->fallthrough();

    auto* charpoly_cmd = app.add_subcommand("charpoly", "Characteristic polynomial of a matrix file");
    charpoly_cmd->add_option("matrix", matrix_path, "Matrix file (text or JSON, '-' for stdin)")->required();
    charpoly_cmd->fallthrough();

    ConstructRequest construct_req;
    std::string z_path, blocks_path;
    auto* construct = app.add_subcommand("construct", "Build a family member and certify it");
    construct->add_option("--family", construct_req.family, "y or block")->required()
        ->check(CLI::IsMember({"y", "block"}));
    construct->add_option("--g", construct_req.g, "Genus");
    construct->add_option("--a", construct_req.a, "Parameter a");
    construct->add_option("--b", construct_req.b, "Parameter b");
    construct->add_option("--z", z_path, "Symmetric (g-2)x(g-2) matrix file for the lower block");
    construct->add_option("--blocks", blocks_path, "JSON array of 2x2 blocks");
    construct->fallthrough();

    std::string poly_path;
    auto* certify = app.add_subcommand("certify-biperron", "Bi-Perron certificate for a polynomial file");
    certify->add_option("poly", poly_path, "Polynomial file (text or JSON, '-' for stdin)")->required();
    certify->fallthrough();

    std::vector<std::int64_t> ks;
    auto* density = app.add_subcommand("scan-density", "Fraction of the K-box with no real roots");
    density->add_option("--k", ks, "Box half-widths")->required()->check(CLI::PositiveNumber);
    density->fallthrough();

    std::int64_t scan_bound = 50;
    auto* exceptional = app.add_subcommand("exceptional-set", "Real-root-free quartics with positive discriminant");
    exceptional->add_option("--bound", scan_bound, "Scan half-width (at least 4)");
    exceptional->fallthrough();

    unsigned rs_g = 2, rs_steps = 10;
    auto* random = app.add_subcommand("random-symplectic", "Random product of integer symplectic generators");
    random->add_option("--g", rs_g, "Genus")->check(CLI::PositiveNumber);
    random->add_option("--steps", rs_steps, "Number of generator factors");
    random->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        const CommandResult usage{Status::Error, "", Json{{"error", "usage"}, {"message", e.what()}}};
        std::cout << render(usage, OutputFormat::Json);
        return usage.exit_code();
    }

    CommandResult result;
    OutputFormat format = parse_output_format(out_name);
    try {
        const unsigned refinement = max_refinement ? *max_refinement : max_refinement_from_env();
        const FormVariant form = parse_form_variant(form_name);
        if (*verify) {
            result = cmd_verify(slurp(matrix_path), form);
        } else if (*charpoly_cmd) {
            result = cmd_charpoly(slurp(matrix_path));
        } else if (*construct) {
            construct_req.form = form;
            construct_req.max_refinement = refinement;
            if (!z_path.empty()) construct_req.z_content = slurp(z_path);
            if (!blocks_path.empty()) construct_req.blocks_content = slurp(blocks_path);
            result = cmd_construct(construct_req);
        } else if (*certify) {
            result = cmd_certify(slurp(poly_path), parse_cert_mode(mode_name), refinement);
        } else if (*density) {
            result = cmd_density(ks, jobs);
        } else if (*exceptional) {
            result = cmd_exceptional_set(scan_bound, jobs);
        } else if (*random) {
            result = cmd_random_symplectic(rs_g, rs_steps, seed);
        }
    } catch (const Error& e) {
        result = {Status::Error, app.get_subcommands().front()->get_name(),
                  Json{{"error", e.code()}, {"message", e.what()}}};
    }
    std::cout << render(result, format);
    return result.exit_code();
}
