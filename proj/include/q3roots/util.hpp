#pragma once

#include <cstdint>
#include <string>

namespace q3roots {

using u128 = unsigned __int128;

std::string u128_to_dec(u128 v);
std::string u128_to_hex(u128 v);

/// Parses a lowercase/uppercase hex string (no 0x prefix) into a u128.
/// Throws ValidationError on empty input, non-hex characters, or overflow.
u128 u128_from_hex(const std::string& s);

inline int u128_bit_length(u128 v) {
    int n = 0;
    while (v) {
        v >>= 1;
        ++n;
    }
    return n;
}

} // namespace q3roots
