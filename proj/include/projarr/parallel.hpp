#pragma once

namespace projarr {

/// Selects between the OpenMP kernel and its serial reference.
/// Both produce identical results; the serial path is what the tests compare against.
enum class ExecutionMode { Serial, Parallel };

/// Caps OpenMP threads for subsequent parallel kernels (0 keeps the runtime default).
void set_thread_count(int threads);
int thread_count();

}  // namespace projarr
