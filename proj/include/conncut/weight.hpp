#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <string>

namespace conncut {

/// Exact nonnegative weight: a 64-bit magnitude or the distinguished
/// value Infinite. Infinite compares greater than every finite value and
/// is absorbing under addition. Inputs are validated at load so that the
/// sum of all finite weights stays below kMaxFiniteSum; addition still
/// saturates defensively.
class Weight {
public:
    static constexpr uint64_t kMaxFiniteSum = uint64_t(1) << 62;

    constexpr Weight() = default;
    constexpr explicit Weight(uint64_t v) : v_(v) {}

    static constexpr Weight infinite() { return Weight(kInf, 0); }
    static constexpr Weight zero() { return Weight(0); }

    constexpr bool is_infinite() const { return v_ == kInf; }
    constexpr bool is_zero() const { return v_ == 0; }
    constexpr uint64_t value() const { return v_; }  // meaningful only when finite

    friend constexpr Weight operator+(Weight a, Weight b) {
        if (a.is_infinite() || b.is_infinite()) return infinite();
        uint64_t r = a.v_ + b.v_;
        if (r < a.v_) return infinite();  // saturate on overflow
        return Weight(r);
    }
    Weight& operator+=(Weight o) { return *this = *this + o; }

    friend constexpr auto operator<=>(Weight a, Weight b) { return a.v_ <=> b.v_; }
    friend constexpr bool operator==(Weight a, Weight b) { return a.v_ == b.v_; }

    std::string str() const { return is_infinite() ? "inf" : std::to_string(v_); }

private:
    static constexpr uint64_t kInf = std::numeric_limits<uint64_t>::max();
    constexpr Weight(uint64_t v, int) : v_(v) {}
    uint64_t v_ = 0;
};

/// Residual capacity cap - flow, where flow may be negative (net push in
/// the paired direction). Infinite capacities have infinite residual.
inline Weight residual(Weight cap, int64_t flow) {
    if (cap.is_infinite()) return Weight::infinite();
    return Weight(cap.value() - static_cast<uint64_t>(flow));
}

}  // namespace conncut
