#include "revwit/rational.hpp"

namespace revwit {

Rat make_rat(const Big& num, const Big& den) {
    if (den == 0) throw ParseError("zero denominator");
    Big n = num, d = den;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    return Rat(n, d);
}

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(parse_big(s));
    Big num = parse_big(s.substr(0, slash));
    std::string dpart = s.substr(slash + 1);
    if (!dpart.empty() && dpart[0] == '-') throw ParseError("denominator must be positive: '" + s + "'");
    Big den = parse_big(dpart);
    if (den == 0) throw ParseError("zero denominator: '" + s + "'");
    if (den == 1) throw ParseError("non-canonical denominator 1: '" + s + "'");
    if (boost::multiprecision::gcd(num < 0 ? Big(-num) : num, den) != 1)
        throw ParseError("fraction not reduced: '" + s + "'");
    return Rat(num, den);
}

std::string rat_str(const Rat& r) {
    Big num = numerator(r), den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Big calkin_wilf_index(const Big& num, const Big& den) {
    if (num <= 0 || den <= 0) throw std::invalid_argument("calkin_wilf_index: need positive fraction");
    Big a = num, b = den;
    std::vector<bool> bits;  // gathered leaf-to-root; left child bit 0, right bit 1
    while (!(a == 1 && b == 1)) {
        if (a < b) {
            bits.push_back(false);
            b -= a;
        } else {
            bits.push_back(true);
            a -= b;
        }
    }
    Big k = 1;
    for (size_t i = bits.size(); i-- > 0;) {
        k <<= 1;
        if (bits[i]) k += 1;
    }
    return k;
}

std::pair<Big, Big> calkin_wilf_value(Big k) {
    if (k < 1) throw std::invalid_argument("calkin_wilf_value: k >= 1");
    std::vector<bool> bits;
    while (k > 1) {
        bits.push_back((k & 1) != 0);
        k >>= 1;
    }
    Big a = 1, b = 1;
    for (size_t i = bits.size(); i-- > 0;) {
        if (bits[i])
            a += b;  // right child (a+b)/b
        else
            b += a;  // left child a/(a+b)
    }
    return {a, b};
}

Rat rat_at(const Big& n) {
    if (n < 0) throw std::invalid_argument("rat_at: negative index");
    if (n == 0) return Rat(0);
    Big k = (n + 1) / 2;
    auto [a, b] = calkin_wilf_value(k);
    Rat v = make_rat(a, b);
    return (n % 2 == 1) ? v : Rat(-v);
}

Big rat_index(const Rat& r) {
    if (r == 0) return 0;
    bool neg = r < 0;
    Rat p = neg ? Rat(-r) : r;
    Big k = calkin_wilf_index(numerator(p), denominator(p));
    return neg ? Big(2 * k) : Big(2 * k - 1);
}

}  // namespace revwit
