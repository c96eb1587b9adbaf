#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "covercount/io.hpp"
#include "covercount/parallel.hpp"
#include "test_util.hpp"

using namespace covercount;
using testutil::artal_arrangement;

// The OpenMP kernels must reproduce the serial reference bit for bit: every
// parallel index writes only its own slot and no floating-point reduction
// order changes.

TEST_CASE("parallel_for covers every index exactly once") {
  std::vector<int> hits(1000, 0);
  par::parallel_for(hits.size(), par::ExecMode::OpenMP, [&](std::size_t i) { hits[i] += 1; });
  for (int h : hits) CHECK(h == 1);
}

TEST_CASE("form multiplication: serial and OpenMP agree bitwise") {
  Rng rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    poly::TrivariateForm f(6), g(6);
    for (auto& c : f.coefficients()) c = rng.next_unit_disk();
    for (auto& c : g.coefficients()) c = rng.next_unit_disk();
    const auto serial = poly::multiply(f, g, par::ExecMode::Serial);
    const auto parallel = poly::multiply(f, g, par::ExecMode::OpenMP);
    REQUIRE(serial.term_count() == parallel.term_count());
    for (std::size_t i = 0; i < serial.term_count(); ++i)
      CHECK(serial.coefficients()[i] == parallel.coefficients()[i]);
  }
}

TEST_CASE("root finding: serial and OpenMP agree bitwise") {
  Rng rng(8);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<cplx> coef(13);
    for (auto& c : coef) c = rng.next_unit_disk();
    coef.back() += 2.0;
    const poly::UnivariatePoly q(coef);
    poly::RootFindOptions serial_opt, parallel_opt;
    serial_opt.mode = par::ExecMode::Serial;
    parallel_opt.mode = par::ExecMode::OpenMP;
    const auto a = poly::find_roots(q, serial_opt);
    const auto b = poly::find_roots(q, parallel_opt);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
  }
}

TEST_CASE("the whole engine: serial and OpenMP reports are identical") {
  for (const auto& [b, mu] : std::vector<std::pair<int, int>>{{4, 2}, {6, 3}}) {
    const auto arr = artal_arrangement(b, mu, 2);
    conn::EngineOptions serial_opt, parallel_opt;
    serial_opt.seed = parallel_opt.seed = 2;
    serial_opt.mode = par::ExecMode::Serial;
    parallel_opt.mode = par::ExecMode::OpenMP;
    const auto rep_s = conn::cross_check(arr, serial_opt);
    const auto rep_p = conn::cross_check(arr, parallel_opt);
    CHECK(io::report_to_json(rep_s).dump() == io::report_to_json(rep_p).dump());
  }
}
