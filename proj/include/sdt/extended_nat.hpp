#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sdt {

/// Natural number extended with a single infinite value. Infinity compares
/// greater than every finite value; addition saturates.
class ExtendedNat {
public:
    constexpr ExtendedNat() : v_(0) {}

    static constexpr ExtendedNat finite(std::uint32_t v) {
        ExtendedNat e;
        e.v_ = v;
        return e;
    }

    static constexpr ExtendedNat infinity() {
        ExtendedNat e;
        e.v_ = kInf;
        return e;
    }

    constexpr bool is_finite() const { return v_ != kInf; }
    constexpr bool is_infinite() const { return v_ == kInf; }

    constexpr std::uint32_t value() const {
        if (v_ == kInf)
            throw std::logic_error("value() on infinite ExtendedNat");
        return v_;
    }

    friend constexpr auto operator<=>(ExtendedNat a, ExtendedNat b) = default;

    friend constexpr ExtendedNat operator+(ExtendedNat a, ExtendedNat b) {
        if (a.is_infinite() || b.is_infinite())
            return infinity();
        return finite(a.v_ + b.v_);
    }

    std::string to_string() const {
        return is_infinite() ? std::string("inf") : std::to_string(v_);
    }

private:
    static constexpr std::uint32_t kInf = 0xffffffffu;
    std::uint32_t v_;
};

}  // namespace sdt
