#include "scottlab/io/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "scottlab/io/csv.hpp"

namespace scottlab::io {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

Config Config::from_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open " + path.string());
    Config cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string t = trim(line);
        if (t.empty()) continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: malformed line " + std::to_string(lineno) +
                                        " in " + path.string());
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        if (key.empty())
            throw std::invalid_argument("config: empty key at line " + std::to_string(lineno));
        cfg.values_[key] = value;
    }
    return cfg;
}

void Config::set(const std::string& key, const std::string& value) { values_[key] = value; }

double Config::get_double(const std::string& key, double fallback) const {
    touched_[key] = true;
    auto it = values_.find(key);
    double v = fallback;
    if (it != values_.end()) {
        std::size_t pos = 0;
        v = std::stod(it->second, &pos);
        if (pos != it->second.size())
            throw std::invalid_argument("config: bad number for key " + key);
    }
    resolved_[key] = format_double(v);
    return v;
}

int Config::get_int(const std::string& key, int fallback) const {
    touched_[key] = true;
    auto it = values_.find(key);
    int v = fallback;
    if (it != values_.end()) {
        std::size_t pos = 0;
        v = std::stoi(it->second, &pos);
        if (pos != it->second.size()) throw std::invalid_argument("config: bad int for key " + key);
    }
    resolved_[key] = std::to_string(v);
    return v;
}

std::string Config::get_string(const std::string& key, const std::string& fallback) const {
    touched_[key] = true;
    auto it = values_.find(key);
    const std::string v = it != values_.end() ? it->second : fallback;
    resolved_[key] = v;
    return v;
}

bool Config::get_bool(const std::string& key, bool fallback) const {
    touched_[key] = true;
    auto it = values_.find(key);
    bool v = fallback;
    if (it != values_.end()) {
        if (it->second == "true" || it->second == "1")
            v = true;
        else if (it->second == "false" || it->second == "0")
            v = false;
        else
            throw std::invalid_argument("config: bad bool for key " + key);
    }
    resolved_[key] = v ? "true" : "false";
    return v;
}

std::vector<double> Config::get_double_list(const std::string& key,
                                            const std::vector<double>& fallback) const {
    touched_[key] = true;
    auto it = values_.find(key);
    std::vector<double> v;
    if (it == values_.end()) {
        v = fallback;
    } else {
        std::stringstream ss(it->second);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            v.push_back(std::stod(item));
        }
    }
    std::string repr;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) repr += ',';
        repr += format_double(v[i]);
    }
    resolved_[key] = repr;
    return v;
}

std::vector<std::string> Config::unused_keys() const {
    std::vector<std::string> out;
    for (const auto& [k, _] : values_)
        if (!touched_.count(k)) out.push_back(k);
    return out;
}

}  // namespace scottlab::io
