#include "manifest.hpp"

#include <array>
#include <cstdio>
#include <ctime>
#include <fstream>

#include <openssl/evp.h>

#include <json.hpp>

#include "hyperwalk/error.hpp"
#include "hyperwalk/io.hpp"

namespace hyperwalk::cli {

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1)
    throw Error(ErrorKind::InvalidArgument, "sha256 failed");
  std::string hex;
  hex.reserve(2 * len);
  static constexpr char kDigits[] = "0123456789abcdef";
  for (unsigned int i = 0; i < len; ++i) {
    hex += kDigits[digest[i] >> 4];
    hex += kDigits[digest[i] & 0xF];
  }
  return hex;
}

std::string sha256_file(const std::filesystem::path& path) { return sha256_hex(io::read_file(path)); }

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

std::string to_json(const RunManifest& m) {
  nlohmann::ordered_json doc;
  doc["command_line"] = m.command_line;
  auto inputs = nlohmann::ordered_json::array();
  for (const auto& [path, digest] : m.input_digests) inputs.push_back({{"path", path}, {"sha256", digest}});
  doc["inputs"] = std::move(inputs);
  doc["seed"] = m.seed ? nlohmann::ordered_json(*m.seed) : nlohmann::ordered_json(nullptr);
  doc["version"] = m.version;
  doc["timestamp"] = m.timestamp;
  doc["prng"] = m.prng;
  doc["output"] = m.output;
  doc["output_sha256"] = m.output_digest;
  return doc.dump(2) + "\n";
}

std::filesystem::path write_manifest(const RunManifest& manifest) {
  std::filesystem::path path = manifest.output + ".manifest.json";
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write '" + path.string() + "'");
  out << to_json(manifest);
  return path;
}

}  // namespace hyperwalk::cli
