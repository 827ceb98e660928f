#pragma once

#include <string>
#include <utility>
#include <vector>

namespace regula::embedded {

/// (file stem, contents) for every data/atlas/*.txt file, sorted by stem.
const std::vector<std::pair<std::string, std::string>>& atlas_files();

/// Contents of data/claims.json.
const std::string& claims_json();

}  // namespace regula::embedded
