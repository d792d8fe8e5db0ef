#include "mzv_cli/config.hpp"

#include <cstdlib>
#include <fstream>

namespace mzv::cli {
namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

long parse_long(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (text.empty() || used != text.size()) throw ConfigError(key + ": expected an integer, got '" + text + "'");
  return v;
}

void apply(Settings& s, const std::string& key, const std::string& value) {
  if (key == "prec") {
    s.prec = static_cast<int>(parse_long(key, value));
  } else if (key == "cutoff") {
    s.cutoff = parse_long(key, value);
  } else if (key == "cache") {
    s.cache = value;
  } else if (key == "jobs") {
    s.jobs = static_cast<int>(parse_long(key, value));
  } else if (key == "format") {
    s.format = value;
  } else {
    throw ConfigError("unknown configuration key: " + key);
  }
}

void check(const Settings& s) {
  if (s.prec < 64 || s.prec > 65536) throw ConfigError("prec must lie in [64, 65536]");
  if (s.cutoff < 64 || s.cutoff > 1'000'000'000L) throw ConfigError("cutoff must lie in [64, 1e9]");
  if (s.jobs < 0 || s.jobs > 1024) throw ConfigError("jobs must lie in [0, 1024]");
  if (!s.format.empty() && s.format != "json" && s.format != "csv" && s.format != "text") {
    throw ConfigError("format must be json, csv or text");
  }
}

}  // namespace

std::optional<std::string> process_env(const std::string& name) {
  if (const char* v = std::getenv(name.c_str()); v != nullptr) return std::string(v);
  return std::nullopt;
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file: " + path);
  std::map<std::string, std::string> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(path + ":" + std::to_string(number) + ": expected key=value");
    }
    out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return out;
}

Settings resolve_settings(const FlagValues& flags, const EnvLookup& env) {
  Settings s;
  std::optional<std::string> config = flags.config;
  if (!config) config = env("MZV_CONFIG");
  if (config) {
    for (const auto& [key, value] : read_config_file(*config)) apply(s, key, value);
  }
  for (const char* key : {"prec", "cutoff", "cache", "jobs", "format"}) {
    std::string name = "MZV_";
    for (const char* c = key; *c; ++c) name += static_cast<char>(std::toupper(static_cast<unsigned char>(*c)));
    if (const auto v = env(name)) apply(s, key, *v);
  }
  if (flags.prec) s.prec = *flags.prec;
  if (flags.cutoff) s.cutoff = *flags.cutoff;
  if (flags.cache) s.cache = *flags.cache;
  if (flags.jobs) s.jobs = *flags.jobs;
  if (flags.format) s.format = *flags.format;
  check(s);
  return s;
}

}  // namespace mzv::cli
