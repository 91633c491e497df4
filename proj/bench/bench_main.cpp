// Benchmark: OpenMP-parallel kernels against their serial references.
//
// Each row times the serial reference and the parallel kernel on the same
// input (best of `reps` runs), verifies the outputs are identical, and
// reports the speedup.  The process exits nonzero if any pair disagrees, so
// the benchmark doubles as an end-to-end consistency check.
//
// Usage: polydiff_bench [reps]   (default 3)

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "polydiff/boseck.hpp"
#include "polydiff/modrep.hpp"

using namespace polydiff;

namespace {

double seconds_best(int reps, const std::function<void()>& body) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    body();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
  }
  return best;
}

bool tables_equal(const BoseckTable& a, const BoseckTable& b) {
  return a.nu == b.nu && a.gamma == b.gamma && a.delta == b.delta &&
         a.width == b.width && a.g_top == b.g_top;
}

bool rows_equal(const std::vector<OracleRow>& a,
                const std::vector<OracleRow>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].j != b[i].j || a[i].covariant_oracle != b[i].covariant_oracle ||
        a[i].covariant_closed != b[i].covariant_closed ||
        a[i].fixed_dim != b[i].fixed_dim)
      return false;
  return true;
}

/// Wide elementary abelian 2^16-cover: 65536 table columns over six places.
ExtensionSpec wide_elab() {
  ElabSpec s;
  s.group = GroupParams{Int(2), 16};
  for (long phi : {1000001L, 2000003L, 4000007L, 8000009L, 16000001L,
                   32000003L})
    s.places.push_back(ElabPlace{Int(phi)});
  return s;
}

struct Row {
  std::string name;
  double serial = 0.0;
  double parallel = 0.0;
  bool identical = false;
};

} // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::max(1, std::atoi(argv[1])) : 3;
  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::printf("reps: %d, OpenMP threads: %d\n\n", reps, threads);

  std::vector<Row> rows;

  {
    Row r;
    r.name = "boseck table (elab, q = 65536, s = 6, m = 2)";
    const ExtensionSpec spec = wide_elab();
    BoseckTable ser, par;
    r.serial = seconds_best(reps, [&] { ser = boseck_table_serial(spec, 2); });
    r.parallel = seconds_best(reps, [&] { par = boseck_table(spec, 2); });
    r.identical = tables_equal(ser, par);
    rows.push_back(std::move(r));
  }

  for (const auto& [p, n] : {std::pair<unsigned long, unsigned>{2, 6},
                             std::pair<unsigned long, unsigned>{3, 4}}) {
    Row r;
    unsigned long q = 1;
    for (unsigned i = 0; i < n; ++i) q *= p;
    r.name = "rank oracle sweep (p = " + std::to_string(p) +
             ", q = " + std::to_string(q) + ")";
    std::vector<OracleRow> ser, par;
    r.serial = seconds_best(reps, [&] { ser = oracle_sweep_serial(p, n); });
    r.parallel = seconds_best(reps, [&] { par = oracle_sweep(p, n); });
    r.identical = rows_equal(ser, par);
    rows.push_back(std::move(r));
  }

  std::printf("%-46s %10s %10s %8s  %s\n", "kernel", "serial", "parallel",
              "speedup", "outputs");
  bool all_ok = true;
  for (const auto& r : rows) {
    std::printf("%-46s %8.1f ms %8.1f ms %7.2fx  %s\n", r.name.c_str(),
                r.serial * 1e3, r.parallel * 1e3,
                r.parallel > 0 ? r.serial / r.parallel : 0.0,
                r.identical ? "identical" : "MISMATCH");
    all_ok = all_ok && r.identical;
  }
  if (!all_ok) {
    std::fprintf(stderr, "\nerror: kernel outputs disagree\n");
    return 1;
  }
  return 0;
}
