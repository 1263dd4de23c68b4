#pragma once

// Execution policy for the data-parallel kernels. Every kernel has a serial
// reference path; the OpenMP path must produce exactly the same values.

namespace sbern {

enum class Exec { serial, parallel };

/// Caps OpenMP workers; n <= 0 restores the runtime default.
void set_threads(int n);
int max_threads();

}  // namespace sbern
