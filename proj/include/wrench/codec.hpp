#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace wrench {

// Wire header, 29 bytes little-endian, field order as declared:
//
//   offset  size  field
//        0     1  version      (current = 1)
//        1     1  priority     (0 = highest, 255 = lowest)
//        2     1  event_type
//        3     4  stream_id
//        7     8  sequence     (per-stream, gapless from 0 at the publisher)
//       15     8  send_ts_ns   (wall clock, ns since Unix epoch)
//       23     4  symbol_id
//       27     2  attr_count
//
// The remaining body is deterministic filler: the 8-byte little-endian
// pattern (stream_id XOR sequence) repeated, with the final filler byte
// replaced by the XOR of all preceding filler bytes. Decoding re-derives
// the filler from the header, so any in-transit corruption is detectable.
struct NotificationHeader {
    std::uint8_t version = kWireVersion;
    std::uint8_t priority = 0;
    std::uint8_t event_type = 0;
    std::uint32_t stream_id = 0;
    std::uint64_t sequence = 0;
    std::uint64_t send_ts_ns = 0;
    std::uint32_t symbol_id = 0;
    std::uint16_t attr_count = 0;

    static constexpr std::uint8_t kWireVersion = 1;

    bool operator==(const NotificationHeader&) const = default;
};

constexpr std::size_t kHeaderSize = 29;
constexpr std::size_t kMaxPayloadSize = 31744;              // 31 kB news ceiling
constexpr std::size_t kMaxNotificationSize = kHeaderSize + kMaxPayloadSize;

enum class DecodeStatus {
    Ok,
    ShortInput,       // fewer than 29 bytes
    UnknownVersion,   // version byte not recognised
    FillerCorrupt,    // body does not match the derived filler/checksum
};

const char* to_string(DecodeStatus s);

// Serializes header + filler into `out` (resized to total_size).
// total_size must be >= 29 and <= kMaxNotificationSize.
void encode_notification(const NotificationHeader& header, std::size_t total_size,
                         std::vector<unsigned char>& out);
std::vector<unsigned char> encode_notification(const NotificationHeader& header,
                                               std::size_t total_size);

struct DecodeResult {
    DecodeStatus status = DecodeStatus::Ok;
    NotificationHeader header;
    std::uint32_t payload_size = 0;  // input length - 29
};

// Full decode: header fields plus filler validation.
DecodeResult decode_notification(const unsigned char* data, std::size_t size);

// Header-only decode, no filler scan. Used on hot receive paths; corruption
// of the body is still caught by full decodes in verification tooling.
DecodeResult decode_header(const unsigned char* data, std::size_t size);

// Stream framing: 4-byte little-endian length prefix, then `length` bytes of
// notification (header + payload). length <= kMaxNotificationSize.
constexpr std::size_t kFramePrefixSize = 4;

void write_frame_prefix(unsigned char* dst, std::uint32_t body_length);
std::uint32_t read_frame_prefix(const unsigned char* src);

}  // namespace wrench
