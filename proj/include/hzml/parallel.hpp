#pragma once

#include <cmath>
#include <cstddef>
#include <exception>
#include <vector>

namespace hzml {

/// Worker count for the data-parallel kernels. Results never depend on it.
struct Execution {
  int workers = 1;

  static Execution serial() { return {1}; }
  /// Reads HZML_WORKERS, falling back to 1.
  static Execution from_env();
};

/// Evaluates fn(i) for i in [0, n) into a vector, in parallel when exec.workers > 1.
/// An exception from any index is rethrown after the loop; the lowest failing
/// index wins so the reported error is independent of scheduling.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, const Execution& exec, Fn&& fn) {
  std::vector<T> out(n);
  std::vector<std::exception_ptr> errors(n);
  const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 4) num_threads(exec.workers) if (exec.workers > 1)
  for (long long i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    try {
      out[idx] = fn(idx);
    } catch (...) {
      errors[idx] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

/// Neumaier compensated accumulator.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace hzml
