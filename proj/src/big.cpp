#include "revwit/big.hpp"

#include "revwit/element.hpp"

namespace revwit {

Big parse_big(const std::string& s) {
    size_t i = 0;
    bool neg = false;
    if (i < s.size() && s[i] == '-') {
        neg = true;
        ++i;
    }
    if (i >= s.size()) throw ParseError("integer expected: '" + s + "'");
    if (s[i] == '0' && s.size() > i + 1) throw ParseError("leading zero: '" + s + "'");
    for (size_t j = i; j < s.size(); ++j)
        if (s[j] < '0' || s[j] > '9') throw ParseError("bad digit in '" + s + "'");
    Big v(s.substr(i));
    if (neg && v == 0) throw ParseError("negative zero: '" + s + "'");
    return neg ? Big(-v) : v;
}

std::string big_str(const Big& n) { return n.str(); }

}  // namespace revwit
