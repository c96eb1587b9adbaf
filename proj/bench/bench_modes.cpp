// Compares the serial reference kernels against the OpenMP paths and checks
// that both produce identical results. Not part of ctest; run manually:
//   ./build/bench/bench_modes [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "covercount/connectivity.hpp"
#include "covercount/fermat.hpp"
#include "covercount/io.hpp"
#include "covercount/parallel.hpp"

using namespace covercount;
using Clock = std::chrono::steady_clock;

namespace {

template <class F>
double time_ms(int repeats, F&& body) {
  const auto t0 = Clock::now();
  for (int r = 0; r < repeats; ++r) body();
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count() / repeats;
}

void row(const char* name, double serial_ms, double omp_ms, bool equal) {
  std::printf("%-34s %10.2f %10.2f %8.2fx   %s\n", name, serial_ms, omp_ms, serial_ms / omp_ms,
              equal ? "identical" : "MISMATCH");
}

} // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::atoi(argv[1]) : 5;
  std::printf("covercount mode benchmark (%d repeats, max %d threads)\n", repeats,
              par::max_threads());
  std::printf("%-34s %10s %10s %9s\n", "kernel", "serial ms", "openmp ms", "speedup");

  // dense form product at a degree well past desk scale
  {
    Rng rng(1);
    poly::TrivariateForm f(24), g(24);
    for (auto& c : f.coefficients()) c = rng.next_unit_disk();
    for (auto& c : g.coefficients()) c = rng.next_unit_disk();
    poly::TrivariateForm out_s, out_p;
    const double ms_s =
        time_ms(repeats, [&] { out_s = poly::multiply(f, g, par::ExecMode::Serial); });
    const double ms_p =
        time_ms(repeats, [&] { out_p = poly::multiply(f, g, par::ExecMode::OpenMP); });
    bool equal = out_s.term_count() == out_p.term_count();
    for (std::size_t i = 0; equal && i < out_s.term_count(); ++i)
      equal = out_s.coefficients()[i] == out_p.coefficients()[i];
    row("form multiply, degree 24 x 24", ms_s, ms_p, equal);
  }

  // batch of root-finding problems (the per-root sweep is the kernel)
  {
    Rng rng(2);
    std::vector<poly::UnivariatePoly> polys;
    for (int k = 0; k < 64; ++k) {
      std::vector<cplx> coef(41);
      for (auto& c : coef) c = rng.next_unit_disk();
      coef.back() += 2.0;
      polys.emplace_back(coef);
    }
    std::vector<std::vector<cplx>> roots_s(polys.size()), roots_p(polys.size());
    poly::RootFindOptions so, po;
    so.mode = par::ExecMode::Serial;
    po.mode = par::ExecMode::OpenMP;
    const double ms_s = time_ms(repeats, [&] {
      for (std::size_t i = 0; i < polys.size(); ++i) roots_s[i] = poly::find_roots(polys[i], so);
    });
    const double ms_p = time_ms(repeats, [&] {
      for (std::size_t i = 0; i < polys.size(); ++i) roots_p[i] = poly::find_roots(polys[i], po);
    });
    bool equal = true;
    for (std::size_t i = 0; equal && i < polys.size(); ++i)
      for (std::size_t j = 0; equal && j < roots_s[i].size(); ++j)
        equal = roots_s[i][j] == roots_p[i][j];
    row("aberth sweep, 64 x degree 40", ms_s, ms_p, equal);
  }

  // the full engine across the acceptance matrix (jobs are the kernel)
  {
    std::vector<conn::Arrangement> arrs;
    for (const auto& [b, mu] :
         std::vector<std::pair<int, int>>{{4, 2}, {4, 4}, {6, 2}, {6, 3}, {6, 6}, {12, 3}}) {
      const auto cfg = fermat::ArtalFamilyConfig::make(b, mu, 7);
      std::vector<geom::ProjectiveLine> lines;
      for (const auto& idx : cfg.line_triple) lines.push_back(fermat::tangent_line(idx));
      arrs.push_back(conn::Arrangement{
          mono::WeightedBranchDivisor(b, {{fermat::artal_branch_curve(cfg), 1}}), lines, {}});
    }
    std::string dump_s, dump_p;
    conn::EngineOptions so, po;
    so.seed = po.seed = 7;
    so.mode = par::ExecMode::Serial;
    po.mode = par::ExecMode::OpenMP;
    const double ms_s = time_ms(repeats, [&] {
      dump_s.clear();
      for (const auto& arr : arrs) dump_s += io::report_to_json(conn::cross_check(arr, so)).dump();
    });
    const double ms_p = time_ms(repeats, [&] {
      dump_p.clear();
      for (const auto& arr : arrs) dump_p += io::report_to_json(conn::cross_check(arr, po)).dump();
    });
    row("engine, 6 arrangements", ms_s, ms_p, dump_s == dump_p);
  }
  return 0;
}
