#pragma once

namespace isolab {

/// Worker count used by the OpenMP kernels (1 when built without OpenMP).
int thread_count();
/// Sets the worker count for subsequent kernels; values < 1 are ignored.
void set_thread_count(int threads);

}  // namespace isolab
