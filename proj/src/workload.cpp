#include "wrench/workload.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "wrench/common.hpp"

namespace wrench {

std::uint64_t RateProfile::total_duration_s() const {
    std::uint64_t total = 0;
    for (const auto& s : segments) total += s.duration_s;
    return total;
}

double RateProfile::effective_rate(std::size_t segment_index) const {
    return segments.at(segment_index).rate * scale;
}

std::int64_t RateProfile::segment_count(std::size_t segment_index) const {
    const auto& s = segments.at(segment_index);
    long double exact = static_cast<long double>(s.duration_s) *
                        static_cast<long double>(s.rate) * static_cast<long double>(scale);
    if (exact > static_cast<long double>(std::numeric_limits<std::int64_t>::max()))
        throw std::overflow_error("segment count exceeds 2^63-1");
    return round_half_even(exact);
}

RateProfile parse_rate_profile(const std::string& text, const std::string& origin) {
    RateProfile profile;
    profile.scale = 1.0;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim_copy(line);
        if (t.empty() || t[0] == '#') continue;
        auto where = [&] { return origin + ":" + std::to_string(lineno); };
        auto fields = split_csv_fields(t);
        if (fields.size() != 2)
            throw ParseError(where() + ": expected `duration_s,rate`, got `" + t + "`");
        errno = 0;
        char* end = nullptr;
        long long dur = std::strtoll(fields[0].c_str(), &end, 10);
        if (errno != 0 || end == fields[0].c_str() || *end != '\0')
            throw ParseError(where() + ": bad duration `" + fields[0] + "`");
        if (dur < 1) throw ParseError(where() + ": duration must be >= 1 s, got " + fields[0]);
        errno = 0;
        double rate = std::strtod(fields[1].c_str(), &end);
        if (errno != 0 || end == fields[1].c_str() || *end != '\0' || !std::isfinite(rate))
            throw ParseError(where() + ": bad rate `" + fields[1] + "`");
        if (rate < 0.0) throw ParseError(where() + ": rate must be >= 0, got " + fields[1]);
        profile.segments.push_back({static_cast<std::uint32_t>(dur), rate});
    }
    if (profile.segments.empty()) throw ParseError(origin + ": empty rate profile");
    return profile;
}

RateProfile load_rate_profile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open rate profile " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_rate_profile(ss.str(), path);
}

RateProfile scale_profile(const RateProfile& profile, double factor, ScaleMode mode) {
    if (!std::isfinite(factor) || factor <= 0.0)
        throw std::invalid_argument("scale factor must be finite and > 0");
    RateProfile out = profile;
    for (auto& seg : out.segments) {
        seg.rate *= factor;
        if (mode == ScaleMode::RateAndDuration) {
            std::int64_t d = round_half_even(static_cast<long double>(seg.duration_s) * factor);
            seg.duration_s = static_cast<std::uint32_t>(std::max<std::int64_t>(1, d));
        }
    }
    return out;
}

std::int64_t expected_total(const RateProfile& profile) {
    unsigned __int128 total = 0;
    for (std::size_t i = 0; i < profile.segments.size(); ++i) {
        std::int64_t c = profile.segment_count(i);
        total += static_cast<unsigned __int128>(c);
        if (total > static_cast<unsigned __int128>(std::numeric_limits<std::int64_t>::max()))
            throw std::overflow_error("expected_total exceeds 2^63-1");
    }
    return static_cast<std::int64_t>(total);
}

void SizeModel::validate() const {
    if (buckets.empty()) throw ConfigError("size model: no buckets");
    double wsum = 0.0;
    std::uint32_t prev_hi = 0;
    bool first = true;
    for (const auto& b : buckets) {
        if (b.lo_bytes > b.hi_bytes) throw ConfigError("size model: bucket lo > hi");
        if (!first && b.lo_bytes <= prev_hi)
            throw ConfigError("size model: buckets must be ascending and non-overlapping");
        if (b.weight < 0.0) throw ConfigError("size model: negative weight");
        if (b.lo_bytes < min_bytes || b.hi_bytes > max_bytes)
            throw ConfigError("size model: bucket outside [min_bytes, max_bytes]");
        wsum += b.weight;
        prev_hi = b.hi_bytes;
        first = false;
    }
    if (std::abs(wsum - 1.0) > 1e-9) throw ConfigError("size model: weights must sum to 1");
}

double SizeModel::mean_bytes() const {
    double m = 0.0;
    for (const auto& b : buckets) m += b.weight * (static_cast<double>(b.lo_bytes) + b.hi_bytes) / 2.0;
    return m;
}

void EventTypeMix::validate() const {
    if (entries.empty() || entries.size() > 255)
        throw ConfigError("type mix: need 1..255 entries");
    double wsum = 0.0;
    for (const auto& e : entries) {
        if (e.weight < 0.0) throw ConfigError("type mix: negative weight");
        if (e.attr_min < 1 || e.attr_min > e.attr_median || e.attr_median > e.attr_max)
            throw ConfigError("type mix: need 1 <= attr_min <= attr_median <= attr_max");
        wsum += e.weight;
    }
    if (std::abs(wsum - 1.0) > 1e-9) throw ConfigError("type mix: weights must sum to 1");
}

void WorkloadSpec::validate() const {
    if (profile.segments.empty()) throw ConfigError("workload: empty rate profile");
    if (profile.total_duration_s() == 0) throw ConfigError("workload: zero total duration");
    size_model.validate();
    type_mix.validate();
    if (symbol_count == 0) throw ConfigError("workload: symbol_count must be positive");
}

SizeModel default_size_model() {
    // Tick-dominated histogram over [80, 900] B; distribution mean 127.645 B.
    SizeModel m;
    m.min_bytes = 80;
    m.max_bytes = 900;
    m.buckets = {
        {80, 96, 0.47},
        {97, 128, 0.325},
        {129, 192, 0.12},
        {193, 320, 0.055},
        {321, 576, 0.02},
        {577, 900, 0.01},
    };
    m.validate();
    return m;
}

EventTypeMix default_event_type_mix() {
    EventTypeMix mix;
    // Eight types, heaviest first; shared attribute bounds 6..129, median 16.
    const double weights[8] = {0.30, 0.25, 0.15, 0.10, 0.08, 0.06, 0.04, 0.02};
    for (std::uint8_t i = 0; i < 8; ++i)
        mix.entries.push_back({i, weights[i], 6, 16, 129, 0});
    mix.validate();
    return mix;
}

WorkloadSpec default_workload(RateProfile profile, std::uint64_t seed) {
    WorkloadSpec spec;
    spec.profile = std::move(profile);
    spec.size_model = default_size_model();
    spec.type_mix = default_event_type_mix();
    spec.symbol_count = WorkloadSpec::kDefaultSymbolCount;
    spec.seed = seed;
    spec.validate();
    return spec;
}

NotificationSampler::NotificationSampler(const WorkloadSpec& spec, std::uint64_t stream_id)
    : spec_(spec), rng_(spec.seed, stream_id) {
    double acc = 0.0;
    for (const auto& e : spec.type_mix.entries) {
        acc += e.weight;
        type_cdf_.push_back(acc);
    }
    type_cdf_.back() = 1.0;
    acc = 0.0;
    for (const auto& b : spec.size_model.buckets) {
        acc += b.weight;
        size_cdf_.push_back(acc);
    }
    size_cdf_.back() = 1.0;
}

namespace {

// Discretized triangular draw over [min, max] with the mode at the median
// statistic; inverse-CDF on a uniform variate, rounded to the nearest count.
std::uint16_t sample_attr_count(Rng& rng, std::uint16_t lo, std::uint16_t mode,
                                std::uint16_t hi) {
    if (lo == hi) return lo;
    double a = lo, c = mode, b = hi;
    double u = rng.next_double();
    double fc = (c - a) / (b - a);
    double x;
    if (u < fc)
        x = a + std::sqrt(u * (b - a) * (c - a));
    else
        x = b - std::sqrt((1.0 - u) * (b - a) * (b - c));
    auto v = static_cast<std::int64_t>(std::lround(x));
    v = std::clamp<std::int64_t>(v, lo, hi);
    return static_cast<std::uint16_t>(v);
}

}  // namespace

NotificationDraw NotificationSampler::next() {
    NotificationDraw d;

    double u = rng_.next_double();
    std::size_t ti = std::upper_bound(type_cdf_.begin(), type_cdf_.end(), u) - type_cdf_.begin();
    if (ti >= type_cdf_.size()) ti = type_cdf_.size() - 1;
    const auto& type = spec_.type_mix.entries[ti];
    d.event_type = type.type_id;
    d.priority = type.priority;
    d.attr_count = sample_attr_count(rng_, type.attr_min, type.attr_median, type.attr_max);

    d.symbol_id = static_cast<std::uint32_t>(rng_.next_in(0, spec_.symbol_count - 1));

    u = rng_.next_double();
    std::size_t bi = std::upper_bound(size_cdf_.begin(), size_cdf_.end(), u) - size_cdf_.begin();
    if (bi >= size_cdf_.size()) bi = size_cdf_.size() - 1;
    const auto& bucket = spec_.size_model.buckets[bi];
    d.payload_size_bytes =
        static_cast<std::uint32_t>(rng_.next_in(bucket.lo_bytes, bucket.hi_bytes));

    return d;
}

namespace {

std::string join_path(const std::string& base_dir, const std::string& path) {
    if (path.empty() || path[0] == '/' || base_dir.empty()) return path;
    return base_dir + "/" + path;
}

}  // namespace

WorkloadSpec workload_spec_from_kv(const KvFile& kv, const std::string& base_dir) {
    WorkloadSpec spec;
    spec.profile = load_rate_profile(join_path(base_dir, kv.get("profile")));
    spec.seed = kv.get_uint_or("seed", 0);
    spec.symbol_count =
        static_cast<std::uint32_t>(kv.get_uint_or("symbol_count", WorkloadSpec::kDefaultSymbolCount));

    auto bucket_keys = kv.keys_with_prefix("size_bucket.");
    if (bucket_keys.empty()) {
        spec.size_model = default_size_model();
    } else {
        SizeModel m;
        m.min_bytes = static_cast<std::uint32_t>(kv.get_uint_or("size_min", 80));
        m.max_bytes = static_cast<std::uint32_t>(kv.get_uint_or("size_max", 31744));
        for (const auto& key : bucket_keys) {
            auto f = split_csv_fields(kv.get(key));
            if (f.size() != 3)
                throw ConfigError(kv.origin() + ": " + key + ": expected `lo,hi,weight`");
            m.buckets.push_back({static_cast<std::uint32_t>(std::stoul(f[0])),
                                 static_cast<std::uint32_t>(std::stoul(f[1])), std::stod(f[2])});
        }
        std::sort(m.buckets.begin(), m.buckets.end(),
                  [](const SizeBucket& a, const SizeBucket& b) { return a.lo_bytes < b.lo_bytes; });
        m.validate();
        spec.size_model = m;
    }

    auto type_keys = kv.keys_with_prefix("type.");
    if (type_keys.empty()) {
        spec.type_mix = default_event_type_mix();
    } else {
        EventTypeMix mix;
        for (const auto& key : type_keys) {
            auto f = split_csv_fields(kv.get(key));
            if (f.size() != 5 && f.size() != 6)
                throw ConfigError(kv.origin() + ": " + key +
                                  ": expected `id,weight,attr_min,attr_median,attr_max[,priority]`");
            EventTypeEntry e;
            e.type_id = static_cast<std::uint8_t>(std::stoul(f[0]));
            e.weight = std::stod(f[1]);
            e.attr_min = static_cast<std::uint16_t>(std::stoul(f[2]));
            e.attr_median = static_cast<std::uint16_t>(std::stoul(f[3]));
            e.attr_max = static_cast<std::uint16_t>(std::stoul(f[4]));
            e.priority = f.size() == 6 ? static_cast<std::uint8_t>(std::stoul(f[5])) : 0;
            mix.entries.push_back(e);
        }
        mix.validate();
        spec.type_mix = mix;
    }

    double scale = kv.get_double_or("scale", 1.0);
    if (scale != 1.0) spec.profile = scale_profile(spec.profile, scale);

    spec.validate();
    return spec;
}

WorkloadSpec load_workload_spec(const std::string& path) {
    KvFile kv = KvFile::load(path);
    std::string base_dir;
    std::size_t slash = path.find_last_of('/');
    if (slash != std::string::npos) base_dir = path.substr(0, slash);
    return workload_spec_from_kv(kv, base_dir);
}

}  // namespace wrench
