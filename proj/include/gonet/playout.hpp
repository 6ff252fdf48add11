#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gonet/board.hpp"

namespace gonet {

// Synthetic self-play policies with deliberately different local statistics.
// Test instruments, not go engines: UniformRandom spreads moves evenly,
// GreedyCapture chases captures, which shifts the pattern statistics enough
// for the two sources to be distinguishable downstream.
enum class PolicyKind : uint8_t { UniformRandom, GreedyCapture };

const char* policy_name(PolicyKind k);
PolicyKind policy_from_name(std::string_view name);  // throws std::invalid_argument

struct PlayoutPolicy {
  PolicyKind kind = PolicyKind::UniformRandom;
  int max_moves = 250;
  uint64_t seed = 0;
};

// One deterministic self-play game from the given seed. Moves are uniform
// over empty non-eye-filling points (GreedyCapture first takes an available
// capture, smallest row-major point on ties); a side with no candidate
// passes; the game ends after two consecutive passes or max_moves actions.
GameRecord generate_game(const PlayoutPolicy& policy, uint64_t game_seed,
                         std::string source_id);

// Game g uses seed policy.seed + g, so databases are reproducible and
// per-game generation is order-independent.
std::vector<GameRecord> generate_games(const PlayoutPolicy& policy, int n_games);

}  // namespace gonet
