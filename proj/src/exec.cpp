#include "polyzeta/exec.hpp"

#include <omp.h>

namespace polyzeta {
namespace {
int g_default_workers = 0;
}

void set_worker_count(int workers) {
  if (g_default_workers == 0) g_default_workers = omp_get_max_threads();
  omp_set_num_threads(workers > 0 ? workers : g_default_workers);
}

int worker_count() { return omp_get_max_threads(); }

}  // namespace polyzeta
