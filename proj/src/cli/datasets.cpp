#include "qmat/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

#include "qmat/defect.hpp"
#include "qmat/io.hpp"

namespace qmat::cli {

namespace fs = std::filesystem;

std::string sha256_hex(const std::string& bytes)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    require(EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) == 1,
            ErrorKind::Input, "sha256: digest failed");
    std::ostringstream os;
    for (unsigned int i = 0; i < length; ++i) {
        os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    }
    return os.str();
}

std::string sha256_file(const std::string& path) { return sha256_hex(read_file(path)); }

std::string resolve_data_dir(const std::string& flag_value)
{
    if (!flag_value.empty()) {
        return flag_value;
    }
    if (const char* env = std::getenv("QMAT_DATA_DIR"); env != nullptr && *env != '\0') {
        return env;
    }
    return QMAT_DATA_DIR;
}

namespace {

DatasetEntry inspect(const fs::path& file)
{
    DatasetEntry e;
    e.file = file.filename().string();
    e.name = file.stem().string();
    try {
        e.sha256 = sha256_file(file.string());
        const auto set = defect::dataset_load(file.string());
        e.d = set.d;
        e.vectors = set.size();
        e.status = "ok";
    } catch (const Error&) {
        e.status = "unreadable";
    }
    return e;
}

} // namespace

std::vector<DatasetEntry> dataset_list(const std::string& dir)
{
    require(fs::is_directory(dir), ErrorKind::Input, "dataset_list: missing directory " + dir);
    std::vector<DatasetEntry> entries;
    std::vector<std::string> listed;
    const fs::path manifest = fs::path(dir) / "manifest.json";
    if (fs::exists(manifest)) {
        json doc;
        try {
            doc = json::parse(read_file(manifest.string()));
        } catch (const json::parse_error& e) {
            fail(ErrorKind::Input, std::string("dataset_list: malformed manifest: ") + e.what());
        }
        for (const auto& item : doc.value("datasets", json::array())) {
            DatasetEntry e;
            e.name = item.at("name").get<std::string>();
            e.file = item.at("file").get<std::string>();
            listed.push_back(e.file);
            const fs::path path = fs::path(dir) / e.file;
            if (!fs::exists(path)) {
                e.d = item.value("d", std::size_t{0});
                e.vectors = item.value("vectors", std::size_t{0});
                e.sha256 = item.value("sha256", std::string());
                e.status = "missing";
                entries.push_back(e);
                continue;
            }
            DatasetEntry found = inspect(path);
            found.name = e.name;
            if (found.status == "ok" && found.sha256 != item.value("sha256", std::string())) {
                found.status = "checksum_mismatch";
            }
            entries.push_back(found);
        }
    }
    std::vector<fs::path> extra;
    for (const auto& item : fs::directory_iterator(dir)) {
        const auto name = item.path().filename().string();
        if (item.is_regular_file() && item.path().extension() == ".json" && name != "manifest.json"
            && std::find(listed.begin(), listed.end(), name) == listed.end()) {
            extra.push_back(item.path());
        }
    }
    std::sort(extra.begin(), extra.end());
    for (const auto& path : extra) {
        DatasetEntry e = inspect(path);
        if (e.status == "ok") {
            e.status = "unlisted";
        }
        entries.push_back(e);
    }
    return entries;
}

std::string dataset_path(const std::string& dir, const std::string& name)
{
    if (!fs::is_directory(dir)) {
        return {};
    }
    for (const auto& e : dataset_list(dir)) {
        if (e.name == name && (e.status == "ok" || e.status == "unlisted")) {
            return (fs::path(dir) / e.file).string();
        }
    }
    return {};
}

void write_manifest(const std::string& dir, const std::vector<DatasetEntry>& entries)
{
    json doc;
    doc["datasets"] = json::array();
    for (const auto& e : entries) {
        doc["datasets"].push_back(
            {{"name", e.name}, {"file", e.file}, {"d", e.d}, {"vectors", e.vectors}, {"sha256", e.sha256}});
    }
    write_file((fs::path(dir) / "manifest.json").string(), doc.dump(2) + "\n");
}

} // namespace qmat::cli
