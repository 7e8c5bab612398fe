#pragma once

#include <atomic>
#include <filesystem>
#include <string>

#include "cisupport/resmod/resolution.hpp"

namespace cisupport {

/// Lowercase hex SHA-256.
std::string sha256_hex(const std::string& data);

/// Text payload for a resolution over a prime field: shapes, twists and raw
/// terms, so that loading reproduces the computed value exactly.
std::string serialize_resolution(const FreeResolution& F);
FreeResolution deserialize_resolution(const std::string& payload, const QuotientRingPtr& ring);

/// Content-addressed directory of resolutions. Each file is named by the
/// hash of its key and holds
///
///   cisupport-cache v1
///   <sha256 of the payload>
///   <payload>
///
/// where the payload begins with the key itself. A file that fails any check
/// is reported on stderr and treated as a miss; the fresh result overwrites
/// it. Writes go to a temporary file renamed into place.
class FileCache : public ResolutionStore {
 public:
  explicit FileCache(std::filesystem::path dir);

  std::optional<FreeResolution> load(const std::string& key, const QuotientRingPtr& ring) override;
  void save(const std::string& key, const FreeResolution& F) override;

  std::filesystem::path path_for(const std::string& key) const;
  long hits() const { return hits_; }
  long misses() const { return misses_; }
  long corrupt() const { return corrupt_; }

 private:
  std::filesystem::path dir_;
  std::atomic<long> hits_{0}, misses_{0}, corrupt_{0}, counter_{0};
};

}  // namespace cisupport
