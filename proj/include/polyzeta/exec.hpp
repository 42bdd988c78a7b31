#pragma once

namespace polyzeta {

// Selects the OpenMP kernel or its serial reference. Both produce
// bit-identical results: parallel kernels only evaluate independent items,
// and every reduction runs serially in index order.
enum class Exec { Serial, Parallel };

// Worker count used by Exec::Parallel kernels; 0 restores the OpenMP default.
void set_worker_count(int workers);
int worker_count();

}  // namespace polyzeta
