#include "wrench/config.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "wrench/common.hpp"

namespace wrench {

std::string trim_copy(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv_fields(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == sep) {
            out.push_back(trim_copy(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(trim_copy(cur));
    return out;
}

KvFile KvFile::parse_text(const std::string& text, const std::string& origin) {
    KvFile kv;
    kv.origin_ = origin;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim_copy(line);
        if (t.empty() || t[0] == '#') continue;
        std::size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw ParseError(origin + ":" + std::to_string(lineno) + ": expected `key = value`");
        std::string key = trim_copy(t.substr(0, eq));
        std::string value = trim_copy(t.substr(eq + 1));
        if (key.empty())
            throw ParseError(origin + ":" + std::to_string(lineno) + ": empty key");
        kv.entries_[key] = value;
    }
    return kv;
}

KvFile KvFile::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_text(ss.str(), path);
}

bool KvFile::has(const std::string& key) const { return entries_.count(key) != 0; }

std::string KvFile::get(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) throw ConfigError(origin_ + ": missing key `" + key + "`");
    return it->second;
}

std::string KvFile::get_or(const std::string& key, const std::string& dflt) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? dflt : it->second;
}

namespace {

std::int64_t to_int(const std::string& origin, const std::string& key, const std::string& v) {
    errno = 0;
    char* end = nullptr;
    long long n = std::strtoll(v.c_str(), &end, 10);
    if (errno != 0 || end == v.c_str() || *end != '\0')
        throw ConfigError(origin + ": key `" + key + "`: not an integer: `" + v + "`");
    return n;
}

double to_double(const std::string& origin, const std::string& key, const std::string& v) {
    errno = 0;
    char* end = nullptr;
    double d = std::strtod(v.c_str(), &end);
    if (errno != 0 || end == v.c_str() || *end != '\0')
        throw ConfigError(origin + ": key `" + key + "`: not a number: `" + v + "`");
    return d;
}

}  // namespace

std::int64_t KvFile::get_int(const std::string& key) const {
    return to_int(origin_, key, get(key));
}

std::int64_t KvFile::get_int_or(const std::string& key, std::int64_t dflt) const {
    if (!has(key)) return dflt;
    return get_int(key);
}

std::uint64_t KvFile::get_uint(const std::string& key) const {
    std::string v = get(key);
    errno = 0;
    char* end = nullptr;
    unsigned long long n = std::strtoull(v.c_str(), &end, 10);
    if (errno != 0 || end == v.c_str() || *end != '\0' || v.find('-') != std::string::npos)
        throw ConfigError(origin_ + ": key `" + key + "`: not an unsigned integer: `" + v + "`");
    return n;
}

std::uint64_t KvFile::get_uint_or(const std::string& key, std::uint64_t dflt) const {
    if (!has(key)) return dflt;
    return get_uint(key);
}

double KvFile::get_double(const std::string& key) const {
    return to_double(origin_, key, get(key));
}

double KvFile::get_double_or(const std::string& key, double dflt) const {
    if (!has(key)) return dflt;
    return get_double(key);
}

bool KvFile::get_bool_or(const std::string& key, bool dflt) const {
    if (!has(key)) return dflt;
    std::string v = get(key);
    std::transform(v.begin(), v.end(), v.begin(), [](unsigned char c) { return std::tolower(c); });
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    throw ConfigError(origin_ + ": key `" + key + "`: not a boolean: `" + v + "`");
}

void KvFile::set(const std::string& key, const std::string& value) { entries_[key] = value; }

void KvFile::set_int(const std::string& key, std::int64_t value) {
    entries_[key] = std::to_string(value);
}

void KvFile::set_uint(const std::string& key, std::uint64_t value) {
    entries_[key] = std::to_string(value);
}

void KvFile::set_double(const std::string& key, double value) {
    std::ostringstream ss;
    ss.precision(17);
    ss << value;
    entries_[key] = ss.str();
}

std::vector<std::string> KvFile::keys_with_prefix(const std::string& prefix) const {
    std::vector<std::string> out;
    for (auto it = entries_.lower_bound(prefix); it != entries_.end(); ++it) {
        if (it->first.compare(0, prefix.size(), prefix) != 0) break;
        out.push_back(it->first);
    }
    return out;
}

std::string KvFile::to_text() const {
    std::ostringstream ss;
    for (const auto& [k, v] : entries_) ss << k << " = " << v << "\n";
    return ss.str();
}

void KvFile::save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path);
    out << to_text();
    if (!out.flush()) throw IoError("write failed: " + path);
}

}  // namespace wrench
