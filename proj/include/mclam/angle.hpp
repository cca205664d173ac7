#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <string_view>
#include <utility>

namespace mclam {

using BigInt = boost::multiprecision::cpp_int;

/// An external angle on the circle S^1 = R/Z, stored as a reduced rational
/// in [0,1). Denominators are arbitrary precision, so repeated halving never
/// overflows. Angles are immutable values.
class Angle {
public:
    /// The angle 0/1.
    Angle() : num_(0), den_(1) {}

    /// Canonical reduced representative of num/den mod 1.
    /// Throws std::invalid_argument if den == 0.
    static Angle make(BigInt num, BigInt den);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    /// 2t mod 1.
    Angle doubled() const;

    /// The two preimages under doubling: (t/2, (t+1)/2). Both double back to
    /// t and the two results differ by exactly 1/2.
    std::pair<Angle, Angle> halved() const;

    /// t + 1/2 mod 1 (180 degree rotation).
    Angle antipode() const;

    bool operator==(const Angle& other) const {
        return num_ == other.num_ && den_ == other.den_;
    }
    std::strong_ordering operator<=>(const Angle& other) const;

    /// Text form "num/den", reduced.
    std::string str() const;

    /// Parses the "num/den" text form. Throws std::invalid_argument on
    /// malformed input or zero denominator.
    static Angle parse(std::string_view text);

private:
    Angle(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {}

    BigInt num_;
    BigInt den_;
};

/// True iff x lies strictly inside the counterclockwise open arc from a to b.
/// Throws std::invalid_argument if a == b (the arc would be ill-defined).
bool in_open_arc(const Angle& x, const Angle& a, const Angle& b);

}  // namespace mclam
