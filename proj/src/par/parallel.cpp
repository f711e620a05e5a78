#include "artin/par/parallel.hpp"

#include <omp.h>

#include <atomic>

namespace artin::par {

namespace {
std::atomic<int> g_threads{1};
}

void set_threads(int n) {
  g_threads = n < 1 ? 1 : n;
  omp_set_num_threads(g_threads);
}

int threads() { return g_threads; }

Exec default_exec() { return g_threads > 1 ? Exec::openmp : Exec::serial; }

void fill_table(std::size_t n, const std::function<std::uint16_t(std::size_t, std::size_t)>& f,
                std::vector<std::uint16_t>& out, Exec exec) {
  out.assign(n * n, 0);
  for_each_index(
      n,
      [&](std::size_t a) {
        std::uint16_t* row = out.data() + a * n;
        for (std::size_t b = 0; b < n; ++b) row[b] = f(a, b);
      },
      exec);
}

}  // namespace artin::par
