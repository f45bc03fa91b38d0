#pragma once

#include <functional>

namespace kg {

// Worker count used by the evaluators; results never depend on it.
void set_thread_count(int n);
int thread_count();

// Runs body(i) for i in [0, n), statically partitioned over the workers.
void parallel_for(int n, const std::function<void(int)>& body);

}  // namespace kg
