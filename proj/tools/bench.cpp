#include <chrono>
#include <cstdio>
#include <functional>
#include <vector>

#include <CLI11.hpp>

#include "jackchar/jack.hpp"
#include "jackchar/parallel.hpp"

namespace {

double timed_ms(const std::function<void()>& fn) {
  auto start = std::chrono::steady_clock::now();
  fn();
  auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Timing of serial vs parallel character table construction"};
  int min_size = 4;
  int max_size = 10;
  int jobs = 0;
  app.add_option("--min", min_size, "Smallest table size")->check(CLI::PositiveNumber);
  app.add_option("--max", max_size, "Largest table size")->check(CLI::PositiveNumber);
  app.add_option("--jobs", jobs, "Parallel worker count (0 = all cores)")
      ->check(CLI::NonNegativeNumber);
  CLI11_PARSE(app, argc, argv);

  jackchar::set_job_count(jobs);
  std::printf("openmp: %s\n", jackchar::built_with_openmp() ? "enabled" : "not built in");

  for (int n = min_size; n <= max_size; ++n) {
    std::vector<std::vector<jackchar::AlphaPoly>> serial;
    std::vector<std::vector<jackchar::AlphaPoly>> parallel;
    double serial_ms = timed_ms([&] { serial = jackchar::JackTable::build_table(n, false); });
    double parallel_ms = timed_ms([&] { parallel = jackchar::JackTable::build_table(n, true); });
    bool identical = serial == parallel;
    std::printf("size %2d: %4zu diagrams, serial %9.1f ms, parallel %9.1f ms, speedup %5.2fx, %s\n",
                n, serial.size(), serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0,
                identical ? "tables identical" : "TABLE MISMATCH");
    if (!identical) return 1;
  }
  return 0;
}
