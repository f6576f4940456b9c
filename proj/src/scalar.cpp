#include "braidual/scalar.hpp"

#include <cctype>

#include "braidual/error.hpp"

namespace braidual {

namespace {

bool valid_integer(std::string_view s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
    if (!valid_integer(num, true) || !valid_integer(den, false))
        throw Error(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");
    std::string n(num);
    if (n[0] == '+') n.erase(0, 1);
    mpz_class zn(n, 10), zd(std::string(den), 10);
    if (zd == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
    Scalar q(zn, zd);
    q.canonicalize();
    return q;
}

std::string to_string(const Scalar& s) { return s.get_str(); }

Scalar scalar_pow(const Scalar& base, long exponent) {
    Scalar b = base;
    if (exponent < 0) {
        b = Scalar(1) / base;
        exponent = -exponent;
    }
    Scalar r = 1;
    while (exponent > 0) {
        if (exponent & 1) r *= b;
        b *= b;
        exponent >>= 1;
    }
    return r;
}

}  // namespace braidual
