#pragma once

#include <cstddef>
#include <functional>

namespace okakit {

/// Worker count: OKAKIT_THREADS when set to a positive integer, otherwise the
/// hardware concurrency.
std::size_t thread_budget();

/// Runs body(i) for i in [0, count) on up to thread_budget() threads. The
/// first exception thrown by any body is rethrown after all workers join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace okakit
