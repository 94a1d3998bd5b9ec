#include "io/cache_store.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ring/error.hpp"

namespace refsev {

std::string fnv1a64_hex(const std::string& text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

namespace {

bool parse_record(const std::string& line, std::string& key, std::string& value) {
  const auto t1 = line.find('\t');
  if (t1 == std::string::npos) return false;
  const auto t2 = line.find('\t', t1 + 1);
  if (t2 == std::string::npos) return false;
  key = line.substr(0, t1);
  value = line.substr(t1 + 1, t2 - t1 - 1);
  return line.substr(t2 + 1) == fnv1a64_hex(key + '\t' + value);
}

}  // namespace

CacheStore::CacheStore(std::filesystem::path file) : file_(std::move(file)) {
  std::error_code ec;
  if (file_.has_parent_path()) std::filesystem::create_directories(file_.parent_path(), ec);
  if (!std::filesystem::exists(file_)) {
    std::ofstream out(file_, std::ios::binary);
    if (!out) fail(ErrorCode::kCache, "cannot create cache file " + file_.string());
    out << kHeader << '\n';
    return;
  }
  std::ifstream in(file_, std::ios::binary);
  if (!in) fail(ErrorCode::kCache, "cannot read cache file " + file_.string());
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string data = buf.str();
  in.close();

  const auto nl = data.find('\n');
  if (nl == std::string::npos || data.substr(0, nl) != kHeader) {
    fail(ErrorCode::kCache, "cache file " + file_.string() + " has an unsupported version header");
  }
  std::size_t pos = nl + 1;
  std::size_t good_end = pos;
  while (pos < data.size()) {
    const auto end = data.find('\n', pos);
    if (end == std::string::npos) break;
    std::string key, value;
    if (!parse_record(data.substr(pos, end - pos), key, value)) break;
    records_.emplace(std::move(key), std::move(value));
    pos = end + 1;
    good_end = pos;
  }
  if (good_end < data.size()) {
    dropped_bytes_ = data.size() - good_end;
    std::filesystem::resize_file(file_, good_end, ec);
    if (ec) fail(ErrorCode::kCache, "cannot truncate cache file " + file_.string());
  }
}

std::optional<std::filesystem::path> CacheStore::default_path() {
  const char* dir = std::getenv(kEnvVar);
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return std::filesystem::path(dir) / "chcache.v1.txt";
}

std::optional<std::string> CacheStore::get(const std::string& key) const {
  std::lock_guard lock(mu_);
  auto it = records_.find(key);
  if (it == records_.end()) return std::nullopt;
  return it->second;
}

void CacheStore::put(const std::string& key, const std::string& value) {
  if (key.find_first_of("\t\n") != std::string::npos ||
      value.find_first_of("\t\n") != std::string::npos) {
    fail(ErrorCode::kInvalidArgument, "cache keys and values must be single-field text");
  }
  std::lock_guard lock(mu_);
  auto [it, inserted] = records_.emplace(key, value);
  if (!inserted) {
    if (it->second != value) fail(ErrorCode::kCache, "conflicting cache value for " + key);
    return;
  }
  std::ofstream out(file_, std::ios::binary | std::ios::app);
  if (!out) fail(ErrorCode::kCache, "cannot append to cache file " + file_.string());
  out << key << '\t' << value << '\t' << fnv1a64_hex(key + '\t' + value) << '\n';
  out.flush();
}

std::size_t CacheStore::size() const {
  std::lock_guard lock(mu_);
  return records_.size();
}

}  // namespace refsev
