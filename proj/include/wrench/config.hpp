#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace wrench {

// Flat key-value text file: one `key = value` per line, `#` comments,
// whitespace-insensitive around the separator. Used for workload specs,
// scenario definitions, run manifests, and stats sidecars.
class KvFile {
public:
    KvFile() = default;

    static KvFile parse_text(const std::string& text, const std::string& origin = "<string>");
    static KvFile load(const std::string& path);

    bool has(const std::string& key) const;
    std::string get(const std::string& key) const;                          // throws if absent
    std::string get_or(const std::string& key, const std::string& dflt) const;
    std::int64_t get_int(const std::string& key) const;
    std::int64_t get_int_or(const std::string& key, std::int64_t dflt) const;
    std::uint64_t get_uint(const std::string& key) const;
    std::uint64_t get_uint_or(const std::string& key, std::uint64_t dflt) const;
    double get_double(const std::string& key) const;
    double get_double_or(const std::string& key, double dflt) const;
    bool get_bool_or(const std::string& key, bool dflt) const;

    void set(const std::string& key, const std::string& value);
    void set_int(const std::string& key, std::int64_t value);
    void set_uint(const std::string& key, std::uint64_t value);
    void set_double(const std::string& key, double value);

    // Keys matching `prefix` + anything, in insertion-independent sorted order.
    std::vector<std::string> keys_with_prefix(const std::string& prefix) const;

    std::string to_text() const;
    void save(const std::string& path) const;

    const std::string& origin() const { return origin_; }

private:
    std::map<std::string, std::string> entries_;
    std::string origin_ = "<empty>";
};

// Splits "a,b,c" into trimmed fields. Empty input gives one empty field.
std::vector<std::string> split_csv_fields(const std::string& line, char sep = ',');

std::string trim_copy(const std::string& s);

}  // namespace wrench
