#pragma once

namespace gpid {

/// Worker count for OpenMP kernels: GPID_THREADS when set to a positive
/// integer, otherwise the OpenMP default.
int worker_count();

}  // namespace gpid
