#include "stim/manifest.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "stim/errors.hpp"

namespace stim {
namespace {

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, '\t')) out.push_back(field);
    return out;
}

}  // namespace

std::vector<std::string> DatasetManifest::categories() const {
    std::set<std::string> labels;
    for (const auto& e : entries) labels.insert(e.label);
    return {labels.begin(), labels.end()};
}

std::map<std::string, std::vector<int>> DatasetManifest::by_category() const {
    std::map<std::string, std::vector<int>> out;
    for (std::size_t i = 0; i < entries.size(); ++i)
        out[entries[i].label].push_back(static_cast<int>(i));
    return out;
}

DatasetManifest load_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open manifest '" + path + "'");
    const std::filesystem::path base = std::filesystem::path(path).parent_path();

    auto resolve = [&](const std::string& p) {
        const std::filesystem::path fp(p);
        return fp.is_absolute() ? fp.string() : (base / fp).string();
    };

    DatasetManifest manifest;
    manifest.name = std::filesystem::path(path).stem().string();
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        const auto fields = split_tabs(line);
        if (fields.size() < 3)
            throw FormatError("manifest '" + path + "' line " + std::to_string(line_no) +
                              ": expected at least image, mask and label fields");
        ManifestEntry entry;
        entry.image_path = resolve(fields[0]);
        entry.mask_path = resolve(fields[1]);
        entry.label = fields[2];
        if (fields[0].empty() || fields[1].empty() || entry.label.empty())
            throw FormatError("manifest '" + path + "' line " + std::to_string(line_no) +
                              ": empty field");
        for (std::size_t i = 3; i < fields.size(); ++i) {
            const auto eq = fields[i].find('=');
            if (eq == std::string::npos)
                throw FormatError("manifest '" + path + "' line " + std::to_string(line_no) +
                                  ": metadata must be key=value");
            entry.metadata[fields[i].substr(0, eq)] = fields[i].substr(eq + 1);
        }
        manifest.entries.push_back(std::move(entry));
    }
    if (manifest.entries.empty())
        throw FormatError("manifest '" + path + "' contains no entries");
    return manifest;
}

void save_manifest(const std::string& path, const DatasetManifest& manifest) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write manifest '" + path + "'");
    for (const auto& e : manifest.entries) {
        out << e.image_path << '\t' << e.mask_path << '\t' << e.label;
        for (const auto& [k, v] : e.metadata) out << '\t' << k << '=' << v;
        out << '\n';
    }
}

}  // namespace stim
