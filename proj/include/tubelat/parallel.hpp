#pragma once

#include <cstddef>
#include <functional>

namespace tubelat {

// Worker count: TUBELAT_THREADS when set to a positive integer, else the hardware concurrency.
int thread_count();

// Runs body(i) for i in [0, count). Each index is handled exactly once; the
// result must not depend on which thread runs which index.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace tubelat
