#pragma once

#include <cstddef>
#include <functional>

namespace flatsurf {

// Worker count used by census-style fan-outs. Defaults to the hardware
// parallelism; the CLI --jobs flag overrides it. Results never depend on
// the worker count: callers write into index-addressed slots and merge in
// index order.
unsigned default_jobs();
void set_default_jobs(unsigned jobs);

// Runs f(i) for i in [0, n), split over worker threads. Exceptions from
// workers are collected and the first one rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f);

}  // namespace flatsurf
