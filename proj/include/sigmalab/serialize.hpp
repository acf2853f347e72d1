#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "sigmalab/bounded_real.hpp"
#include "sigmalab/changepoints.hpp"
#include "sigmalab/sigma.hpp"
#include "sigmalab/verifier.hpp"

namespace sigmalab {

// Enclosures are rendered as {"lo": "<decimal>", "hi": "<decimal>"} with
// shortest round-trip decimal strings; integers stay JSON integers.
nlohmann::json to_json(const BoundedReal& x);
nlohmann::json to_json(const SigmaCertificate& c);
nlohmann::json to_json(const CandidateBracket& b);
nlohmann::json to_json(const ChangePointRecord& r);
nlohmann::json to_json(const QuotientRow& q);
/// {"a": <input text>, "n_a", "n_env", "r"}
nlohmann::json to_json(const NaResult& r, const std::string& a_text);
nlohmann::json to_json(const verify::CheckReport& r);

/// One JSON object per line: {"index", "n_i", "sigma_at", "bits_used"}.
std::string cache_line(const ChangePointRecord& r);
ChangePointRecord parse_cache_line(const std::string& line);

/// Writes to a sibling temp file and renames it over `path`.
void write_cache(const std::filesystem::path& path, const std::vector<ChangePointRecord>& records);
/// Empty when the file does not exist; throws std::runtime_error when malformed.
std::vector<ChangePointRecord> read_cache(const std::filesystem::path& path);

}  // namespace sigmalab
