#pragma once
// Pattern catalog: a directory of pattern JSON files plus an index.json
// summarizing name, winding number, linking number and verdict per file.
// Re-indexing is idempotent (sorted, canonical JSON).

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "concord/io.hpp"

namespace concord {

inline std::string verdict_label(const Verdict& v) {
    if (!v.infinite_rank) return "inconclusive";
    return v.route == Route::SignatureJumps ? "infinite-rank (signature jumps)"
                                            : "infinite-rank (instanton)";
}

// Scans dir for *.json pattern files (index.json excluded), writes index.json.
// Returns the index object.
inline json catalog_index(const std::string& dir) {
    namespace fs = std::filesystem;
    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        std::string name = entry.path().filename().string();
        if (name == "index.json" || entry.path().extension() != ".json") continue;
        files.push_back(name);
    }
    std::sort(files.begin(), files.end());

    json patterns = json::array();
    json errors = json::array();
    for (const auto& f : files) {
        try {
            Pattern p = pattern_from_json(load_json_file((fs::path(dir) / f).string()));
            Verdict v = verdict(p);
            json e;
            e["file"] = f;
            e["name"] = p.name();
            e["winding_number"] = to_long(p.winding());
            e["l"] = v.linking ? json(v.linking->str()) : json(nullptr);
            e["verdict"] = verdict_label(v);
            e["mirror"] = v.mirror_used;
            patterns.push_back(std::move(e));
        } catch (const Error& err) {
            errors.push_back(json{{"file", f}, {"error", err.what()}});
        }
    }
    json index;
    index["patterns"] = std::move(patterns);
    index["errors"] = std::move(errors);

    std::ofstream out(fs::path(dir) / "index.json");
    if (!out) throw ParseError("cannot write index.json in " + dir);
    out << dump_canonical(index);
    return index;
}

}  // namespace concord
