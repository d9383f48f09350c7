#pragma once

#include <functional>

namespace polyhardy {

// Worker threads used for data-parallel loops over quadrature targets.
// 0 picks the hardware concurrency; 1 forces serial execution.  Each index is
// computed independently with a fixed-order inner reduction, so results are
// identical for every thread count.
void set_worker_threads(int n);
int worker_threads();

void parallel_for(int count, const std::function<void(int)>& fn);

}  // namespace polyhardy
