#include "bmcover/parallel.hpp"

#include <atomic>

namespace bmcover {

namespace {
std::atomic<int> g_jobs{0};
}

void set_sweep_jobs(int jobs) { g_jobs.store(jobs < 0 ? 0 : jobs); }

int sweep_jobs() { return g_jobs.load(); }

} // namespace bmcover
