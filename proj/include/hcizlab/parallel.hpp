#pragma once

// Minimal fork-join helpers. Work is split into a fixed list of tasks whose
// results are stored by task index, so reductions never depend on the number
// of threads.

#include <cstddef>
#include <cstdint>
#include <functional>

namespace hcizlab {

/// Worker count: explicit override if set, else HCIZ_THREADS, else 1.
int thread_count();
void set_thread_count(int threads);

/// Runs body(i) for i in [0, tasks) on up to thread_count() threads.
/// Exceptions from any task are rethrown (the first by task index).
void parallel_for(std::size_t tasks, const std::function<void(std::size_t)>& body);

/// SplitMix64 step, used to derive independent seeds for substreams.
std::uint64_t splitmix64(std::uint64_t& state);
/// Seed of substream `stream` under master seed `seed`.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace hcizlab
