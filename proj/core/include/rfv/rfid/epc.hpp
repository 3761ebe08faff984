#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>

namespace rfv::rfid {

/// 96-bit Electronic Product Code.
struct Epc96 {
    std::array<std::uint8_t, 12> bytes{};

    auto operator<=>(const Epc96&) const = default;

    std::string to_hex() const;
    /// Parses 24 hex chars; throws ParseError otherwise.
    static Epc96 from_hex(const std::string& hex);
};

}  // namespace rfv::rfid

template <>
struct std::hash<rfv::rfid::Epc96> {
    std::size_t operator()(const rfv::rfid::Epc96& e) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (auto b : e.bytes) {
            h ^= b;
            h *= 1099511628211ull;
        }
        return h;
    }
};
