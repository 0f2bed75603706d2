#pragma once

#include "bps/io.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bps::cli {

enum class Status { Ok, Error, Undecided };

/// Outcome of one subcommand. Exit codes: ok 0, error 1, undecided 2.
struct CommandResult {
    Status status = Status::Ok;
    std::string command;
    Json payload;

    int exit_code() const noexcept { return static_cast<int>(status); }
    Json to_json() const;
};

enum class OutputFormat { Json, Csv, Text };
OutputFormat parse_output_format(const std::string& name);

/// Renders a result for stdout. CSV is only defined for scan-density; other
/// commands fall back to JSON.
std::string render(const CommandResult& result, OutputFormat format);

/// BPS_MAX_REFINEMENT when set to a positive integer, else 64.
unsigned max_refinement_from_env();

CommandResult cmd_verify(const std::string& matrix_content, FormVariant form);
CommandResult cmd_charpoly(const std::string& matrix_content);

struct ConstructRequest {
    std::string family;  // "y" or "block"
    long g = 0;
    std::string a = "0";
    std::string b = "0";
    std::optional<std::string> z_content;
    std::optional<std::string> blocks_content;
    FormVariant form = FormVariant::StandardBlock;
    unsigned max_refinement = 64;
};
CommandResult cmd_construct(const ConstructRequest& request);

CommandResult cmd_certify(const std::string& poly_content, CertMode mode, unsigned max_refinement);
CommandResult cmd_density(const std::vector<std::int64_t>& ks, unsigned jobs);
CommandResult cmd_exceptional_set(std::int64_t scan_bound, unsigned jobs);
CommandResult cmd_random_symplectic(unsigned g, unsigned steps, std::uint64_t seed);

} // namespace bps::cli
