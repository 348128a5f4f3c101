#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace hyperwalk::cli {

/// Reproducibility record written next to every output file.
struct RunManifest {
  std::vector<std::string> command_line;
  std::vector<std::pair<std::string, std::string>> input_digests;  ///< path, sha256 hex
  std::optional<std::uint64_t> seed;
  std::string version;
  std::string timestamp;  ///< UTC, ISO 8601
  std::string prng;
  std::string output;
  std::string output_digest;
};

std::string sha256_hex(std::string_view bytes);
std::string sha256_file(const std::filesystem::path& path);
std::string utc_timestamp();

std::string to_json(const RunManifest& manifest);

/// Writes `<output>.manifest.json`.
std::filesystem::path write_manifest(const RunManifest& manifest);

}  // namespace hyperwalk::cli
