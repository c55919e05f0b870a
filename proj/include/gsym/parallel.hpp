#pragma once

#include <cstddef>
#include <functional>

namespace gsym {

/// Worker cap for parallel loops; 1 (the default) runs everything inline.
int worker_count();
void set_worker_count(int workers);

/// Runs f(0..count-1); iterations must write disjoint state. Results are
/// deterministic regardless of the worker count.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& f);

} // namespace gsym
