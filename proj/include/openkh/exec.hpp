#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

namespace openkh {

// serial is the reference path; tests compare the two
enum class Exec { serial, parallel };

void set_thread_count(int n);
int thread_count();

// OpenMP loop that carries the first exception out of the parallel region
template <class F>
void parallel_for(size_t count, Exec exec, F&& f, int chunk = 16) {
  std::exception_ptr err;
  std::mutex mu;
#pragma omp parallel for schedule(dynamic, chunk) if (exec == Exec::parallel)
  for (size_t i = 0; i < count; ++i) {
    try {
      f(i);
    } catch (...) {
      std::lock_guard<std::mutex> g(mu);
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
}

}  // namespace openkh
