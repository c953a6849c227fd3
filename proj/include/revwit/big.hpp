#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace revwit {

using Big = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Cantor pairing: pair(x,y) = (x+y)(x+y+1)/2 + y.  Bijection N^2 -> N.
inline Big cantor_pair(const Big& x, const Big& y) {
    Big s = x + y;
    return s * (s + 1) / 2 + y;
}

inline std::pair<Big, Big> cantor_unpair(const Big& n) {
    if (n < 0) throw std::invalid_argument("cantor_unpair: negative");
    // s = floor((sqrt(8n+1)-1)/2), largest s with s(s+1)/2 <= n
    Big s = boost::multiprecision::sqrt(Big(8) * n + 1);
    s = (s - 1) / 2;
    while (s * (s + 1) / 2 > n) --s;
    while ((s + 1) * (s + 2) / 2 <= n) ++s;
    Big y = n - s * (s + 1) / 2;
    Big x = s - y;
    return {x, y};
}

// Z enumerated as 0, 1, -1, 2, -2, ...
inline Big zig_value(const Big& n) {
    if (n == 0) return 0;
    Big h = (n + 1) / 2;
    return (n % 2 == 1) ? h : -h;
}

inline Big zig_index(const Big& z) {
    if (z > 0) return 2 * z - 1;
    return -2 * z;
}

// Tuple codes: bijection N -> N^m for m >= 1, nested Cantor pairs.
inline Big tuple_code(const std::vector<Big>& v) {
    if (v.empty()) throw std::invalid_argument("tuple_code: empty");
    Big acc = v.back();
    for (size_t i = v.size() - 1; i-- > 0;) acc = cantor_pair(v[i], acc);
    return acc;
}

inline std::vector<Big> tuple_decode(Big code, size_t m) {
    if (m == 0) throw std::invalid_argument("tuple_decode: m=0");
    std::vector<Big> out;
    out.reserve(m);
    while (m > 1) {
        auto [x, rest] = cantor_unpair(code);
        out.push_back(x);
        code = rest;
        --m;
    }
    out.push_back(code);
    return out;
}

// Parses a decimal integer with optional leading '-'; rejects anything else,
// including empty strings, leading zeros and "-0".
Big parse_big(const std::string& s);

std::string big_str(const Big& n);

}  // namespace revwit
