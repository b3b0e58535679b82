#include "wrench/codec.hpp"

#include <stdexcept>

#include "wrench/common.hpp"

namespace wrench {

const char* to_string(DecodeStatus s) {
    switch (s) {
        case DecodeStatus::Ok: return "ok";
        case DecodeStatus::ShortInput: return "short-input";
        case DecodeStatus::UnknownVersion: return "unknown-version";
        case DecodeStatus::FillerCorrupt: return "filler-corrupt";
    }
    return "?";
}

void encode_notification(const NotificationHeader& header, std::size_t total_size,
                         std::vector<unsigned char>& out) {
    if (total_size < kHeaderSize)
        throw std::invalid_argument("notification size below 29-byte header");
    if (total_size > kMaxNotificationSize)
        throw std::invalid_argument("notification size above 31 kB payload ceiling");

    out.resize(total_size);
    unsigned char* p = out.data();
    p[0] = header.version;
    p[1] = header.priority;
    p[2] = header.event_type;
    store_le<std::uint32_t>(p + 3, header.stream_id);
    store_le<std::uint64_t>(p + 7, header.sequence);
    store_le<std::uint64_t>(p + 15, header.send_ts_ns);
    store_le<std::uint32_t>(p + 23, header.symbol_id);
    store_le<std::uint16_t>(p + 27, header.attr_count);

    std::size_t filler = total_size - kHeaderSize;
    if (filler == 0) return;
    unsigned char pattern[8];
    store_le<std::uint64_t>(pattern, static_cast<std::uint64_t>(header.stream_id) ^ header.sequence);
    unsigned char checksum = 0;
    unsigned char* body = p + kHeaderSize;
    for (std::size_t j = 0; j + 1 < filler; ++j) {
        body[j] = pattern[j % 8];
        checksum ^= body[j];
    }
    body[filler - 1] = checksum;
}

std::vector<unsigned char> encode_notification(const NotificationHeader& header,
                                               std::size_t total_size) {
    std::vector<unsigned char> out;
    encode_notification(header, total_size, out);
    return out;
}

DecodeResult decode_header(const unsigned char* data, std::size_t size) {
    DecodeResult r;
    if (size < kHeaderSize) {
        r.status = DecodeStatus::ShortInput;
        return r;
    }
    r.header.version = data[0];
    if (r.header.version != NotificationHeader::kWireVersion) {
        r.status = DecodeStatus::UnknownVersion;
        return r;
    }
    r.header.priority = data[1];
    r.header.event_type = data[2];
    r.header.stream_id = load_le<std::uint32_t>(data + 3);
    r.header.sequence = load_le<std::uint64_t>(data + 7);
    r.header.send_ts_ns = load_le<std::uint64_t>(data + 15);
    r.header.symbol_id = load_le<std::uint32_t>(data + 23);
    r.header.attr_count = load_le<std::uint16_t>(data + 27);
    r.payload_size = static_cast<std::uint32_t>(size - kHeaderSize);
    return r;
}

DecodeResult decode_notification(const unsigned char* data, std::size_t size) {
    DecodeResult r = decode_header(data, size);
    if (r.status != DecodeStatus::Ok) return r;

    std::size_t filler = size - kHeaderSize;
    if (filler == 0) return r;
    unsigned char pattern[8];
    store_le<std::uint64_t>(pattern,
                            static_cast<std::uint64_t>(r.header.stream_id) ^ r.header.sequence);
    const unsigned char* body = data + kHeaderSize;
    unsigned char checksum = 0;
    for (std::size_t j = 0; j + 1 < filler; ++j) {
        if (body[j] != pattern[j % 8]) {
            r.status = DecodeStatus::FillerCorrupt;
            return r;
        }
        checksum ^= body[j];
    }
    if (body[filler - 1] != checksum) r.status = DecodeStatus::FillerCorrupt;
    return r;
}

void write_frame_prefix(unsigned char* dst, std::uint32_t body_length) {
    store_le<std::uint32_t>(dst, body_length);
}

std::uint32_t read_frame_prefix(const unsigned char* src) {
    return load_le<std::uint32_t>(src);
}

}  // namespace wrench
