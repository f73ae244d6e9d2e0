#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace scottlab::io {

/// KEY=VALUE run configuration with full defaulting: every key the program
/// reads lands in `resolved()` (including the defaulted ones), so the
/// manifest records the complete effective configuration.
class Config {
  public:
    Config() = default;
    static Config from_file(const std::filesystem::path& path);  // '#' comments, blank lines ok
    void set(const std::string& key, const std::string& value);

    double get_double(const std::string& key, double fallback) const;
    int get_int(const std::string& key, int fallback) const;
    std::string get_string(const std::string& key, const std::string& fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;
    std::vector<double> get_double_list(const std::string& key,
                                        const std::vector<double>& fallback) const;

    bool has(const std::string& key) const { return values_.count(key) != 0; }
    const std::map<std::string, std::string>& resolved() const { return resolved_; }
    /// keys present in the file/flags but never read (typo guard)
    std::vector<std::string> unused_keys() const;

  private:
    std::map<std::string, std::string> values_;
    mutable std::map<std::string, std::string> resolved_;
    mutable std::map<std::string, bool> touched_;
};

}  // namespace scottlab::io
