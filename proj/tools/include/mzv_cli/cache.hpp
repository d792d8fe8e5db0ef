#pragma once

#include <map>
#include <optional>
#include <string>

#include "mzv/eval_result.hpp"

namespace mzv::cli {

/// "<kind>|<object>|<method>|<precision>|<cutoff>", e.g.
/// "zeta|zetastar(2,1)|auto|192|100000".
std::string cache_key(const std::string& kind, const std::string& object, const std::string& method, int precision,
                      long cutoff);

/// Append-only JSON-lines store. The file is read once into a snapshot;
/// later entries for the same key win. Appends hold an exclusive flock on
/// "<path>.lock".
class ResultCache {
 public:
  explicit ResultCache(std::string path);

  /// Values are parsed at the working precision.
  std::optional<EvalResult> lookup(const std::string& key) const;
  void store(const std::string& key, const EvalResult& result);

  std::size_t size() const noexcept { return entries_.size(); }

 private:
  struct Entry {
    std::string value;
    std::string err;
    std::string method;
  };

  std::string path_;
  std::map<std::string, Entry> entries_;
};

}  // namespace mzv::cli
