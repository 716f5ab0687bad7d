#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "greymop/planner/documents.hpp"

namespace greymop::planner {

std::uint64_t fnv1a64(std::string_view bytes) noexcept;

/// "<kind>-<16 hex digits>" over the canonical text.
std::string content_handle(const ModelDocument& doc);

/// Validated models under content-addressed handles. With a storage
/// directory each model is also written to <dir>/models/<handle>.json and
/// looked up there on a cache miss. Thread-safe.
class ModelStore {
 public:
  explicit ModelStore(std::optional<std::filesystem::path> directory = std::nullopt);

  std::string ingest(std::string_view text);
  std::string ingest(const ModelDocument& doc);

  /// Throws Error(UnknownHandle).
  ModelDocument get(const std::string& handle) const;
  bool contains(const std::string& handle) const;
  std::vector<std::string> handles() const;

  const std::optional<std::filesystem::path>& directory() const noexcept { return directory_; }

 private:
  std::optional<std::filesystem::path> model_path(const std::string& handle) const;

  std::optional<std::filesystem::path> directory_;
  mutable std::mutex mutex_;
  mutable std::map<std::string, ModelDocument> models_;
};

}  // namespace greymop::planner
