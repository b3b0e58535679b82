#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <string>

namespace wrench {

// Rounding convention for all schedule/count arithmetic: nearest, ties to even.
inline std::int64_t round_half_even(long double x) {
    long double f = std::floorl(x);
    long double frac = x - f;
    std::int64_t n = static_cast<std::int64_t>(f);
    if (frac > 0.5L) return n + 1;
    if (frac < 0.5L) return n;
    return (n % 2 == 0) ? n : n + 1;
}

// Wall clock, nanoseconds since Unix epoch. Carried in notification headers
// and latency records so cross-process latency on one host is computable.
inline std::uint64_t wall_clock_ns() {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(
               std::chrono::system_clock::now().time_since_epoch())
        .count();
}

// Monotonic clock for pacing deadlines and interval measurement.
inline std::uint64_t mono_clock_ns() {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Little-endian scalar access into byte buffers.
template <typename T>
inline void store_le(unsigned char* p, T v) {
    for (std::size_t i = 0; i < sizeof(T); ++i) p[i] = static_cast<unsigned char>(v >> (8 * i));
}

template <typename T>
inline T load_le(const unsigned char* p) {
    T v = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) v |= static_cast<T>(p[i]) << (8 * i);
    return v;
}

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wrench
