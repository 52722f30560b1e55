// Times the OpenMP scan kernel against the serial reference and checks the
// outputs agree record for record.

#include <chrono>
#include <cstdio>
#include <thread>

#include "nlgames/scan.hpp"

using namespace nlgames;

namespace {

template <typename Fn>
double time_ms(Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

int main() {
  const int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

  std::vector<ScanRecord> serial, parallel;
  const double t_serial = time_ms([&] { serial = scan_serial(GameFilter::All); });
  const double t_parallel = time_ms([&] { parallel = scan(GameFilter::All, threads); });

  std::printf("scan of 65536 games\n");
  std::printf("  serial reference : %8.2f ms\n", t_serial);
  std::printf("  openmp x%-3d      : %8.2f ms  (%.2fx)\n", threads, t_parallel,
              t_serial / t_parallel);
  if (serial != parallel) {
    std::printf("MISMATCH between serial and parallel records\n");
    return 1;
  }
  std::printf("  records identical: yes\n");

  // The numeric optimizer is the heavier per-game kernel; compare on a slice.
  std::vector<GameTable> games = enumerate_games(GameFilter::AdmissibleOnly);
  games.resize(2000);
  std::vector<double> values_serial(games.size()), values_parallel(games.size());
  const double n_serial = time_ms([&] {
    for (size_t i = 0; i < games.size(); ++i)
      values_serial[i] = numeric_family_max(games[i], 60, 1e-10).value;
  });
  const double n_parallel = time_ms([&] {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
    for (long i = 0; i < static_cast<long>(games.size()); ++i)
      values_parallel[i] = numeric_family_max(games[i], 60, 1e-10).value;
  });
  std::printf("numeric family max on %zu games (grid 60)\n", games.size());
  std::printf("  serial           : %8.2f ms\n", n_serial);
  std::printf("  openmp x%-3d      : %8.2f ms  (%.2fx)\n", threads, n_parallel,
              n_serial / n_parallel);
  if (values_serial != values_parallel) {
    std::printf("MISMATCH between serial and parallel numeric values\n");
    return 1;
  }
  std::printf("  values identical : yes\n");
  return 0;
}
