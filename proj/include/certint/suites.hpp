#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "certint/funcmodel.hpp"
#include "certint/prng.hpp"

namespace certint {

/// Seeded random step function on [0,1]: up to max_breakpoints distinct
/// interior breakpoints, piece values in [-10, 10], occasional explicit
/// breakpoint values.
FuncModelPtr random_step_function(SplitMix64& rng, std::size_t max_breakpoints = 50);

/// Same shape but every piece value is zero; breakpoints carry nonzero
/// spikes, which are null for integration.
FuncModelPtr random_zero_step_function(SplitMix64& rng, std::size_t max_breakpoints = 50);

/// Equal-width probe cells covering I.
std::vector<Interval> grid_cells(const Interval& I, std::size_t count);

/// The first `count` kept intervals of the set's deepest stage; inside them
/// the depth-limited model can certify no zero derivative.
std::vector<Interval> kept_cover_probe_cells(const FatCantorSet& set, std::size_t count);

namespace suites {

struct SuiteItem {
    std::string name;
    bool pass = false;
    std::string details;
};

struct SuiteResult {
    std::string name;
    std::vector<SuiteItem> items;
    bool all_pass() const;
};

inline constexpr std::uint64_t kDefaultSeed = 20240601;

std::vector<std::string> names();

/// Runs one named verification bundle. Unknown names throw ParseError.
SuiteResult run(const std::string& name, std::uint64_t seed = kDefaultSeed,
                std::size_t family_size = 100);

} // namespace suites

} // namespace certint
