#include "ringdec/numeric.hpp"

#include <sstream>
#include <stdexcept>

namespace ringdec {

double to_double(const Rational& x) {
    return x.convert_to<double>();
}

Rational parse_rational(std::string_view text) {
    auto bad = [&] {
        return std::invalid_argument("not a rational: '" + std::string(text) + "'");
    };
    if (text.empty()) throw bad();
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rational(BigInt(std::string(text)));
        }
        BigInt num{std::string(text.substr(0, slash))};
        BigInt den{std::string(text.substr(slash + 1))};
        if (den == 0) throw bad();
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw bad();
    }
}

std::string rational_to_string(const Rational& x) {
    std::ostringstream out;
    out << x;
    return out.str();
}

std::optional<long> exact_log2(const Rational& x) {
    if (x <= 0) return std::nullopt;
    const BigInt num = numerator(x);
    const BigInt den = denominator(x);
    auto is_pow2 = [](const BigInt& v) { return v > 0 && (v & (v - 1)) == 0; };
    if (!is_pow2(num) || !is_pow2(den)) return std::nullopt;
    const long kn = static_cast<long>(boost::multiprecision::msb(num));
    const long kd = static_cast<long>(boost::multiprecision::msb(den));
    return kn - kd;
}

}  // namespace ringdec
