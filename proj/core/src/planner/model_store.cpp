#include "greymop/planner/model_store.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "greymop/error.hpp"

namespace greymop::planner {

namespace fs = std::filesystem;

std::uint64_t fnv1a64(std::string_view bytes) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string content_handle(const ModelDocument& doc) {
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx",
                static_cast<unsigned long long>(fnv1a64(canonical_text(doc))));
  return std::string(to_string(doc.kind())) + "-" + hex;
}

namespace {

bool valid_handle(const std::string& handle) {
  // Handles double as file names, so keep them to a safe alphabet.
  if (handle.empty() || handle.size() > 64) return false;
  for (char c : handle) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-';
    if (!ok) return false;
  }
  return true;
}

}  // namespace

ModelStore::ModelStore(std::optional<fs::path> directory) : directory_(std::move(directory)) {
  if (directory_) fs::create_directories(*directory_ / "models");
}

std::optional<fs::path> ModelStore::model_path(const std::string& handle) const {
  if (!directory_) return std::nullopt;
  return *directory_ / "models" / (handle + ".json");
}

std::string ModelStore::ingest(std::string_view text) { return ingest(parse_model(text)); }

std::string ModelStore::ingest(const ModelDocument& doc) {
  const std::string handle = content_handle(doc);
  std::lock_guard lock(mutex_);
  if (models_.contains(handle)) return handle;
  if (auto path = model_path(handle); path && !fs::exists(*path)) {
    const fs::path tmp = path->string() + ".tmp";
    {
      std::ofstream out(tmp, std::ios::trunc);
      out << to_json(doc).dump(2) << '\n';
      if (!out) throw Error(ErrorCode::ParameterError, "cannot write " + tmp.string());
    }
    fs::rename(tmp, *path);
  }
  models_.emplace(handle, doc);
  return handle;
}

ModelDocument ModelStore::get(const std::string& handle) const {
  std::lock_guard lock(mutex_);
  if (auto it = models_.find(handle); it != models_.end()) return it->second;
  if (valid_handle(handle)) {
    if (auto path = model_path(handle); path && fs::exists(*path)) {
      std::ifstream in(*path);
      std::stringstream buf;
      buf << in.rdbuf();
      ModelDocument doc = parse_model(buf.str());
      models_.emplace(handle, doc);
      return doc;
    }
  }
  throw Error(ErrorCode::UnknownHandle, "unknown model handle '" + handle + "'");
}

bool ModelStore::contains(const std::string& handle) const {
  try {
    get(handle);
    return true;
  } catch (const Error&) {
    return false;
  }
}

std::vector<std::string> ModelStore::handles() const {
  std::lock_guard lock(mutex_);
  std::vector<std::string> out;
  for (const auto& [h, _] : models_) out.push_back(h);
  if (directory_) {
    for (const auto& entry : fs::directory_iterator(*directory_ / "models")) {
      if (entry.path().extension() != ".json") continue;
      std::string h = entry.path().stem().string();
      if (!models_.contains(h)) out.push_back(std::move(h));
    }
  }
  return out;
}

}  // namespace greymop::planner
