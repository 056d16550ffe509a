#pragma once

#include <map>
#include <string>
#include <vector>

namespace stim {

struct ManifestEntry {
    std::string image_path;
    std::string mask_path;
    std::string label;
    std::map<std::string, std::string> metadata;  // e.g. year=2014 brand=acme
};

struct DatasetManifest {
    std::string name;
    std::vector<ManifestEntry> entries;

    // Sorted distinct labels.
    std::vector<std::string> categories() const;
    // Entry indices per category, manifest order, keyed by sorted label.
    std::map<std::string, std::vector<int>> by_category() const;
};

// Tab-separated, one entry per line: image path, mask path, label, then
// optional key=value metadata pairs. Relative paths resolve against the
// manifest's directory. '#' starts a comment line.
DatasetManifest load_manifest(const std::string& path);

// Paths are written as given (the generator writes them relative to `path`).
void save_manifest(const std::string& path, const DatasetManifest& manifest);

}  // namespace stim
