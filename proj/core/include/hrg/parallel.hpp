#pragma once

#include <cstddef>
#include <functional>
#include <optional>

namespace hrg {

/// Worker count: the explicit request if given, else $HRG_THREADS, else hardware
/// concurrency (at least 1).
unsigned resolve_threads(std::optional<unsigned> requested = std::nullopt);

/// Runs body(i) for i in [0, count) on up to `threads` workers. Tasks are claimed in
/// index order; the first exception thrown is rethrown after all workers stop.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

}  // namespace hrg
