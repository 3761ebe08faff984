#include "rfv/rfid/epc.hpp"

#include <cctype>

#include "rfv/errors.hpp"

namespace rfv::rfid {

namespace {
int hex_nibble(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw ParseError("invalid hex digit in epc");
}
}  // namespace

std::string Epc96::to_hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(24);
    for (auto b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}

Epc96 Epc96::from_hex(const std::string& hex) {
    if (hex.size() != 24) throw ParseError("epc hex must be 24 chars, got " + std::to_string(hex.size()));
    Epc96 epc;
    for (std::size_t i = 0; i < 12; ++i)
        epc.bytes[i] = static_cast<std::uint8_t>((hex_nibble(hex[2 * i]) << 4) | hex_nibble(hex[2 * i + 1]));
    return epc;
}

}  // namespace rfv::rfid
