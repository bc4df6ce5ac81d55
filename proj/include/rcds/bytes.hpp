#pragma once

#include <cstdint>
#include <cstring>
#include <string>
#include <string_view>

namespace rcds {

// All wire integers are big-endian.

inline void put_u8(std::string& out, uint8_t v) { out.push_back(static_cast<char>(v)); }

inline void put_u16(std::string& out, uint16_t v) {
    out.push_back(static_cast<char>(v >> 8));
    out.push_back(static_cast<char>(v));
}

inline void put_u32(std::string& out, uint32_t v) {
    for (int shift = 24; shift >= 0; shift -= 8)
        out.push_back(static_cast<char>(v >> shift));
}

inline void put_u64(std::string& out, uint64_t v) {
    for (int shift = 56; shift >= 0; shift -= 8)
        out.push_back(static_cast<char>(v >> shift));
}

inline void put_i64(std::string& out, int64_t v) { put_u64(out, static_cast<uint64_t>(v)); }

// Cursor-style reader over a received payload. Throws nothing itself;
// callers check remaining() or use the ok() flag after a batch of reads.
class ByteReader {
public:
    explicit ByteReader(std::string_view data) : data_(data) {}

    size_t remaining() const { return data_.size() - pos_; }
    bool ok() const { return ok_; }

    uint8_t u8() {
        if (!need(1)) return 0;
        return static_cast<uint8_t>(data_[pos_++]);
    }

    uint16_t u16() {
        if (!need(2)) return 0;
        uint16_t v = 0;
        for (int i = 0; i < 2; ++i) v = static_cast<uint16_t>((v << 8) | static_cast<uint8_t>(data_[pos_++]));
        return v;
    }

    uint32_t u32() {
        if (!need(4)) return 0;
        uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v = (v << 8) | static_cast<uint8_t>(data_[pos_++]);
        return v;
    }

    uint64_t u64() {
        if (!need(8)) return 0;
        uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v = (v << 8) | static_cast<uint8_t>(data_[pos_++]);
        return v;
    }

    int64_t i64() { return static_cast<int64_t>(u64()); }

    std::string_view bytes(size_t n) {
        if (!need(n)) return {};
        std::string_view v = data_.substr(pos_, n);
        pos_ += n;
        return v;
    }

    std::string_view rest() {
        std::string_view v = data_.substr(pos_);
        pos_ = data_.size();
        return v;
    }

private:
    bool need(size_t n) {
        if (data_.size() - pos_ < n) {
            ok_ = false;
            pos_ = data_.size();
            return false;
        }
        return true;
    }

    std::string_view data_;
    size_t pos_ = 0;
    bool ok_ = true;
};

}  // namespace rcds
