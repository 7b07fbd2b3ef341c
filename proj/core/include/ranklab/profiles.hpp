#ifndef RANKLAB_PROFILES_HPP
#define RANKLAB_PROFILES_HPP

#include <optional>
#include <string>
#include <vector>

#include "ranklab/ibe.hpp"

namespace ranklab {

/// Named parameter sets. Desk profiles are sized so every pipeline runs in
/// seconds; the table profiles carry published parameter rows for the
/// validators and counters only (their fields are too large to attack here).
struct Profile {
    enum class Kind { Ranksign, Rsl, RankIbe, HammingIbe, Check };

    std::string name;
    Kind kind;
    std::string description;
    bool solve_scale = true; // false: validators/counters only

    LrpcParams sgn{};          // Ranksign / Check
    RslParams rsl{};           // Rsl
    RankIbeParams rank_ibe{};  // RankIbe
    HammingIbeParams hamming{}; // HammingIbe

    // constraint-check inputs (may exceed the arithmetic field cap)
    struct CheckParams {
        unsigned a = 0, m = 0;
        unsigned n_sgn = 0, k_sgn = 0, n_dec = 0, k_dec = 0;
        unsigned w_sgn = 0, w_dec = 0;
    };
    std::optional<CheckParams> check;
};

const std::vector<Profile>& builtin_profiles();
std::optional<Profile> find_profile(const std::string& name);

} // namespace ranklab

#endif
