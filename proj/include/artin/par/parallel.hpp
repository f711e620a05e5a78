#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace artin::par {

// Every parallel loop in the library has a serial twin. The serial path is the
// reference the tests compare against; the OpenMP path is taken only when the
// caller asks for it or more than one thread has been configured.
enum class Exec { serial, openmp };

void set_threads(int n);
int threads();
Exec default_exec();

template <class F>
void for_each_index(std::size_t n, F&& body, Exec exec = default_exec()) {
  if (exec == Exec::openmp) {
    const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t i = 0; i < count; ++i) body(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < n; ++i) body(i);
  }
}

// out[a * n + b] = f(a, b)
void fill_table(std::size_t n, const std::function<std::uint16_t(std::size_t, std::size_t)>& f,
                std::vector<std::uint16_t>& out, Exec exec);

}  // namespace artin::par
