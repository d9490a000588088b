#pragma once

#include <cstdint>

namespace indshell {

/// Selects between an OpenMP kernel and its serial reference. Both return
/// identical decisions and certificates; only node accounting may differ.
enum class Execution { Serial, Parallel };

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// kDefaultBudget, or INDSHELL_BUDGET from the environment when set.
std::uint64_t default_budget();

/// Worker count OpenMP would use (1 when built without OpenMP).
int worker_count();

}  // namespace indshell
