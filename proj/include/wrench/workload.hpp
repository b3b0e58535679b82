#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wrench/config.hpp"
#include "wrench/rng.hpp"

namespace wrench {

struct RateSegment {
    std::uint32_t duration_s = 0;  // >= 1
    double rate = 0.0;             // notifications per second, >= 0; 0 is a pause
};

// Time-ordered publish schedule. The effective rate of a segment is
// `rate * scale`; scale_profile() materializes a factor into the segment
// rates and leaves `scale` as an additional multiplier for callers that
// want to keep the base profile readable.
struct RateProfile {
    std::vector<RateSegment> segments;
    double scale = 1.0;

    std::uint64_t total_duration_s() const;
    double effective_rate(std::size_t segment_index) const;
    // round-half-even(duration * rate * scale) for one segment.
    std::int64_t segment_count(std::size_t segment_index) const;
};

// Parses CSV `duration_s,rate` lines; `#` starts a comment, blank lines and
// CRLF endings are accepted. Errors carry the 1-based line number.
RateProfile parse_rate_profile(const std::string& text, const std::string& origin = "<profile>");
RateProfile load_rate_profile(const std::string& path);

enum class ScaleMode {
    RateOnly,         // default: factor multiplies segment rates
    RateAndDuration,  // factor also multiplies durations (rounded, floor 1 s)
};

RateProfile scale_profile(const RateProfile& profile, double factor,
                          ScaleMode mode = ScaleMode::RateOnly);

// Ground-truth published count for a completed synthetic run:
// sum over segments of round-half-even(duration_s * rate * scale).
// Throws on overflow past 2^63-1.
std::int64_t expected_total(const RateProfile& profile);

struct SizeBucket {
    std::uint32_t lo_bytes = 0;  // inclusive
    std::uint32_t hi_bytes = 0;  // inclusive
    double weight = 0.0;
};

struct SizeModel {
    std::vector<SizeBucket> buckets;  // ascending, non-overlapping, weights sum to 1
    std::uint32_t min_bytes = 0;
    std::uint32_t max_bytes = 0;

    void validate() const;
    // Exact distribution mean: sum of weight * (lo+hi)/2.
    double mean_bytes() const;
};

struct EventTypeEntry {
    std::uint8_t type_id = 0;
    double weight = 0.0;
    std::uint16_t attr_min = 0;
    std::uint16_t attr_median = 0;
    std::uint16_t attr_max = 0;
    std::uint8_t priority = 0;  // carried in the wire header; 0 = highest
};

struct EventTypeMix {
    std::vector<EventTypeEntry> entries;  // 1..255 entries, weights sum to 1

    void validate() const;
};

struct WorkloadSpec {
    RateProfile profile;
    SizeModel size_model;
    EventTypeMix type_mix;
    std::uint32_t symbol_count = kDefaultSymbolCount;
    std::uint64_t seed = 0;

    static constexpr std::uint32_t kDefaultSymbolCount = 2'890'000;

    void validate() const;
};

// Feed defaults: tick-dominated sizes in [80, 900] B with distribution mean
// 127.6 B, eight event types, attribute counts 6..129 with median 16.
SizeModel default_size_model();
EventTypeMix default_event_type_mix();
WorkloadSpec default_workload(RateProfile profile, std::uint64_t seed);

// One sampled notification's parameters (sizes include the wire header).
struct NotificationDraw {
    std::uint8_t event_type = 0;
    std::uint8_t priority = 0;
    std::uint32_t symbol_id = 0;
    std::uint16_t attr_count = 0;
    std::uint32_t payload_size_bytes = 0;  // total notification size
};

// Deterministic sampler; independent per (spec.seed, stream) so parallel
// publisher workers stay reproducible.
class NotificationSampler {
public:
    NotificationSampler(const WorkloadSpec& spec, std::uint64_t stream_id);

    NotificationDraw next();

private:
    const WorkloadSpec& spec_;
    Rng rng_;
    std::vector<double> type_cdf_;
    std::vector<double> size_cdf_;
};

// Workload spec file: flat key-value format (see README). `profile` may be
// a path relative to the spec file's directory.
WorkloadSpec load_workload_spec(const std::string& path);
WorkloadSpec workload_spec_from_kv(const KvFile& kv, const std::string& base_dir);

}  // namespace wrench
