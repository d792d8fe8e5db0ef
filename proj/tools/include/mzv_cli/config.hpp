#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace mzv::cli {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Settings {
  int prec = 192;
  long cutoff = 100000;
  std::string cache;  // empty: no cache
  int jobs = 1;
  std::string format;  // empty: command default
};

/// Values given explicitly on the command line.
struct FlagValues {
  std::optional<int> prec;
  std::optional<long> cutoff;
  std::optional<std::string> cache;
  std::optional<int> jobs;
  std::optional<std::string> format;
  std::optional<std::string> config;
};

using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;

/// Reads the process environment.
std::optional<std::string> process_env(const std::string& name);

/// key=value lines; blank lines and lines starting with '#' are skipped.
/// Throws ConfigError on unreadable files or malformed lines.
std::map<std::string, std::string> read_config_file(const std::string& path);

/// flags > MZV_* environment > config file > defaults. The config file comes
/// from --config, else MZV_CONFIG. Throws ConfigError on unknown keys or
/// values out of range.
Settings resolve_settings(const FlagValues& flags, const EnvLookup& env = process_env);

}  // namespace mzv::cli
