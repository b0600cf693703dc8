#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace dim {

// Every rule that can force or seed a color assignment. `seed` marks
// assignments made by the search driver (or by API users), not by a rule.
enum class Rule : std::uint8_t {
    p1,
    p2,
    p3,
    p4,
    p5,
    p6,
    p7,
    p8,
    p9,
    b1,
    b2,
    b3a,
    b3b_i,
    b3b_ii,
    b3b_iii,
    b3b_fallback,
    seed,
};

inline constexpr std::size_t rule_count = 17;

constexpr std::string_view rule_name(Rule r)
{
    constexpr std::string_view names[rule_count] = {
        "P1", "P2", "P3", "P4", "P5", "P6", "P7", "P8", "P9",
        "B1", "B2", "B3a", "B3b-i", "B3b-ii", "B3b-iii", "B3b-fallback",
        "seed"};
    return names[static_cast<std::size_t>(r)];
}

struct RuleFirings {
    std::array<std::uint64_t, rule_count> fired{};

    void bump(Rule r) { ++fired[static_cast<std::size_t>(r)]; }
    std::uint64_t operator[](Rule r) const { return fired[static_cast<std::size_t>(r)]; }

    RuleFirings& operator+=(const RuleFirings& o)
    {
        for (std::size_t i = 0; i < rule_count; ++i)
            fired[i] += o.fired[i];
        return *this;
    }

    bool operator==(const RuleFirings&) const = default;
};

} // namespace dim
