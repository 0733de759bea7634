#include "hfree/rational.hpp"

namespace hfree {

namespace {

long long parse_digits(const std::string& s, size_t from, size_t to) {
    if (from >= to) throw InputError("bad rational: empty number part");
    long long v = 0;
    for (size_t i = from; i < to; ++i) {
        char c = s[i];
        if (c < '0' || c > '9') throw InputError("bad rational: " + s);
        if (v > 900'000'000'000'000'000LL / 10)
            throw InputError("rational out of range: " + s);
        v = v * 10 + (c - '0');
    }
    return v;
}

}  // namespace

Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw InputError("bad rational: empty string");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        long long num = parse_digits(s, 0, slash);
        long long den = parse_digits(s, slash + 1, s.size());
        if (den == 0) throw InputError("bad rational: zero denominator");
        return Rational(num, den);
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rational(parse_digits(s, 0, s.size()));
    long long whole = dot == 0 ? 0 : parse_digits(s, 0, dot);
    long long frac = 0, den = 1;
    for (size_t i = dot + 1; i < s.size(); ++i) {
        char c = s[i];
        if (c < '0' || c > '9') throw InputError("bad rational: " + s);
        if (den > 900'000'000'000'000'000LL / 10)
            throw InputError("rational out of range: " + s);
        frac = frac * 10 + (c - '0');
        den *= 10;
    }
    return Rational(whole) + Rational(frac, den);
}

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace hfree
