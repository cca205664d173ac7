#include "mclam/angle.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cstdint>

#include <stdexcept>

namespace mclam {

Angle Angle::make(BigInt num, BigInt den) {
    if (den == 0) {
        throw std::invalid_argument("Angle: zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    num %= den;
    if (num < 0) {
        num += den;
    }
    BigInt g = boost::multiprecision::gcd(num, den);
    return Angle(num / g, den / g);
}

Angle Angle::doubled() const {
    return make(num_ * 2, den_);
}

std::pair<Angle, Angle> Angle::halved() const {
    return {make(num_, den_ * 2), make(num_ + den_, den_ * 2)};
}

Angle Angle::antipode() const {
    return make(num_ * 2 + den_, den_ * 2);
}

namespace {

inline std::strong_ordering ordering_of(bool less, bool greater) {
    if (less) return std::strong_ordering::less;
    if (greater) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

inline bool fits_u64(const BigInt& x) {
    return x <= BigInt(UINT64_MAX);
}

}  // namespace

std::strong_ordering Angle::operator<=>(const Angle& other) const {
    if (den_ == other.den_) {
        return ordering_of(num_ < other.num_, num_ > other.num_);
    }
    // Values are canonical, so everything here is non-negative; cross
    // multiplication fits 128 bits whenever the parts fit 64.
    if (fits_u64(num_) && fits_u64(den_) && fits_u64(other.num_) && fits_u64(other.den_)) {
        unsigned __int128 lhs = static_cast<unsigned __int128>(num_.convert_to<std::uint64_t>()) *
                                other.den_.convert_to<std::uint64_t>();
        unsigned __int128 rhs =
            static_cast<unsigned __int128>(other.num_.convert_to<std::uint64_t>()) *
            den_.convert_to<std::uint64_t>();
        return ordering_of(lhs < rhs, lhs > rhs);
    }
    BigInt lhs = num_ * other.den_;
    BigInt rhs = other.num_ * den_;
    return ordering_of(lhs < rhs, lhs > rhs);
}

std::string Angle::str() const {
    return num_.str() + "/" + den_.str();
}

Angle Angle::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos || slash == 0 || slash + 1 == text.size()) {
        throw std::invalid_argument("Angle: expected \"num/den\", got \"" + std::string(text) + "\"");
    }
    auto is_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s) {
            if (c < '0' || c > '9') return false;
        }
        return true;
    };
    std::string_view num_part = text.substr(0, slash);
    std::string_view den_part = text.substr(slash + 1);
    if (!is_int(num_part) || !is_int(den_part)) {
        throw std::invalid_argument("Angle: expected \"num/den\", got \"" + std::string(text) + "\"");
    }
    return make(BigInt(std::string(num_part)), BigInt(std::string(den_part)));
}

bool in_open_arc(const Angle& x, const Angle& a, const Angle& b) {
    if (a == b) {
        throw std::invalid_argument("in_open_arc: arc endpoints coincide");
    }
    if (a < b) {
        return a < x && x < b;
    }
    return x > a || x < b;  // arc wraps through 0
}

}  // namespace mclam
