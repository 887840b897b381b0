// Timing comparison of the OpenMP kernels against their serial
// references. Usage: eiscycle_bench [N ...] (default 7 9)

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "eiscycle/kernels.hpp"

using namespace eis;
namespace chrono = std::chrono;

namespace {

template <class Fn>
double time_ms(Fn&& fn) {
  auto t0 = chrono::steady_clock::now();
  fn();
  return chrono::duration<double, std::milli>(chrono::steady_clock::now() - t0).count();
}

void bench_level(int N) {
  LevelContext ctx(N);
  printf("N=%d (group %d, cusps %d, threads %d)\n", N, ctx.group_size(),
         ctx.cusp_count(), omp_get_max_threads());

  double t_ser = time_ms([&] { f_fourier_table_serial(ctx); });
  double t_par = time_ms([&] { f_fourier_table_parallel(ctx); });
  printf("  fourier table    serial %8.1f ms   parallel %8.1f ms   speedup %.2fx\n",
         t_ser, t_par, t_ser / t_par);

  t_ser = time_ms([&] { eisenstein_cycles_serial(ctx); });
  t_par = time_ms([&] { eisenstein_cycles_parallel(ctx); });
  printf("  cycle assembly   serial %8.1f ms   parallel %8.1f ms   speedup %.2fx\n",
         t_ser, t_par, t_ser / t_par);

  t_ser = time_ms([&] { f_consistency_sweep(ctx, false); });
  t_par = time_ms([&] { f_consistency_sweep(ctx, true); });
  printf("  consistency sweep serial %7.1f ms   parallel %8.1f ms   speedup %.2fx\n",
         t_ser, t_par, t_ser / t_par);
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> levels;
  for (int i = 1; i < argc; ++i) levels.push_back(atoi(argv[i]));
  if (levels.empty()) levels = {7, 9};
  for (int N : levels) bench_level(N);
  return 0;
}
