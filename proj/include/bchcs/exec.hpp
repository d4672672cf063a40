#ifndef BCHCS_EXEC_HPP
#define BCHCS_EXEC_HPP

namespace bchcs {

/// Kernel execution policy. `serial` is the reference path kept for testing
/// and benchmarking; `parallel` uses OpenMP when compiled in and must produce
/// identical results.
enum class Exec { serial, parallel };

}  // namespace bchcs

#endif
