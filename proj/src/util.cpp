#include "q3roots/util.hpp"

#include <algorithm>

#include "q3roots/errors.hpp"

namespace q3roots {

std::string u128_to_dec(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v) {
        s.push_back(char('0' + int(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

std::string u128_to_hex(u128 v) {
    static const char* digits = "0123456789abcdef";
    if (v == 0) return "0";
    std::string s;
    while (v) {
        s.push_back(digits[int(v & 0xf)]);
        v >>= 4;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

u128 u128_from_hex(const std::string& s) {
    if (s.empty()) throw ValidationError("empty hex string");
    if (s.size() > 32) throw ValidationError("hex string too long: " + s);
    u128 v = 0;
    for (char c : s) {
        int d;
        if (c >= '0' && c <= '9') d = c - '0';
        else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
        else throw ValidationError(std::string("invalid hex character '") + c + "' in " + s);
        v = (v << 4) | u128(d);
    }
    return v;
}

} // namespace q3roots
