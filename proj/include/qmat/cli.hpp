#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qmat::cli {

// Exit codes shared by every command.
enum ExitCode : int {
    Success = 0,
    Usage = 2,
    CapacityExceeded = 3,
    ContractViolation = 4,
    NonConvergence = 5,
};

// Runs one command; reports go to out (or --out), diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

struct DatasetEntry {
    std::string name;
    std::string file;
    std::size_t d = 0;
    std::size_t vectors = 0;
    std::string sha256;
    // ok, checksum_mismatch, missing, unlisted or unreadable.
    std::string status;
};

std::string sha256_hex(const std::string& bytes);
std::string sha256_file(const std::string& path);

// Directory from --data-dir, then QMAT_DATA_DIR in the environment, then the build default.
std::string resolve_data_dir(const std::string& flag_value);

// Inventory of a dataset directory, checked against its manifest.json when present.
std::vector<DatasetEntry> dataset_list(const std::string& dir);
// Path of a named dataset, or an empty string when it is not present and intact.
std::string dataset_path(const std::string& dir, const std::string& name);
void write_manifest(const std::string& dir, const std::vector<DatasetEntry>& entries);

} // namespace qmat::cli
