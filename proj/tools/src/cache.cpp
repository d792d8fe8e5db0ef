#include "mzv_cli/cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <chrono>
#include <ctime>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace mzv::cli {
namespace {

Method parse_method(const std::string& name) {
  for (const Method m : {Method::direct, Method::accelerated, Method::geometric, Method::quadrature, Method::symbolic}) {
    if (to_string(m) == name) return m;
  }
  throw std::runtime_error("unknown method in cache: " + name);
}

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

class FileLock {
 public:
  explicit FileLock(const std::string& path) : fd_(::open(path.c_str(), O_CREAT | O_RDWR, 0644)) {
    if (fd_ < 0) throw std::runtime_error("cannot open lock file " + path);
    if (::flock(fd_, LOCK_EX) != 0) {
      ::close(fd_);
      throw std::runtime_error("cannot lock " + path);
    }
  }
  ~FileLock() {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
  FileLock(const FileLock&) = delete;
  FileLock& operator=(const FileLock&) = delete;

 private:
  int fd_;
};

}  // namespace

std::string cache_key(const std::string& kind, const std::string& object, const std::string& method, int precision,
                      long cutoff) {
  return kind + "|" + object + "|" + method + "|" + std::to_string(precision) + "|" + std::to_string(cutoff);
}

ResultCache::ResultCache(std::string path) : path_(std::move(path)) {
  std::ifstream in(path_);
  std::string line;
  while (std::getline(in, line)) {
    // A torn or foreign line is skipped rather than poisoning the cache.
    const auto doc = nlohmann::json::parse(line, nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) continue;
    try {
      entries_[doc.at("key").get<std::string>()] = {doc.at("value").get<std::string>(),
                                                    doc.at("err").get<std::string>(),
                                                    doc.at("method").get<std::string>()};
    } catch (const nlohmann::json::exception&) {
    }
  }
}

std::optional<EvalResult> ResultCache::lookup(const std::string& key) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  try {
    return EvalResult{BigReal(it->second.value), BigReal(it->second.err), parse_method(it->second.method), 0};
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void ResultCache::store(const std::string& key, const EvalResult& result) {
  Entry entry{result.value.to_exact_string(), result.err.to_exact_string(), std::string(to_string(result.method))};
  const nlohmann::ordered_json doc{{"key", key},
                                   {"value", entry.value},
                                   {"err", entry.err},
                                   {"method", entry.method},
                                   {"timestamp", utc_now()}};
  {
    FileLock lock(path_ + ".lock");
    std::ofstream out(path_, std::ios::app);
    if (!out) throw std::runtime_error("cannot write cache file " + path_);
    out << doc.dump() << '\n';
  }
  entries_[key] = std::move(entry);
}

}  // namespace mzv::cli
