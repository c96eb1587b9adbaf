#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "covercount/exact.hpp"
#include "test_util.hpp"

using namespace covercount;
using namespace covercount::exact;

TEST_CASE("carnot congruence examples") {
  CHECK(carnot_exists({3, {1, 1, 3}, 3}));
  CHECK(!carnot_exists({2, {1, 1, 2}, 1}));
  // d = mu always passes
  for (int mu = 2; mu <= 6; ++mu)
    for (int j1 = 1; j1 <= mu; ++j1) CHECK(carnot_exists({mu, {j1, 1, mu}, mu}));
}

TEST_CASE("carnot is monotone along divisibility of d") {
  for (int mu = 2; mu <= 8; ++mu)
    for (int d = 1; d <= 16; ++d)
      for (int mult = 2; d * mult <= 16; ++mult)
        for (int j1 = 1; j1 <= mu; ++j1)
          for (int j2 = 1; j2 <= mu; ++j2)
            for (int j3 = 1; j3 <= mu; ++j3)
              if (carnot_exists({mu, {j1, j2, j3}, d}))
                CHECK(carnot_exists({mu, {j1, j2, j3}, d * mult}));
}

TEST_CASE("predicted connected number reproduces nu over the whole desk range") {
  for (long long b = 3; b <= 12; ++b) {
    for (long long mu = 2; mu <= b; ++mu) {
      if (b % mu != 0) continue;
      const auto rep = predicted_connected_number(b, mu);
      CHECK(rep.lambda == b / mu);
      CHECK(b % rep.lambda == 0); // c divides the cover degree
      CHECK(rep.nu == b / mu);
      // witnesses cover every divisor and lambda is the best passing one
      for (const auto& w : rep.witnesses) {
        CHECK(b % w.lambda == 0);
        if (w.carnot) CHECK(w.lambda <= rep.lambda);
      }
    }
  }
}

TEST_CASE("degree-3 collinear and generic triples") {
  CHECK(predicted_connected_number(3, 3, {1, 1, 1}).lambda == 3);
  CHECK(predicted_connected_number(3, 3, {1, 1, 3}).lambda == 1);
  CHECK(predicted_connected_number(4, 2).lambda == 2);
  CHECK(predicted_connected_number(6, 3).lambda == 2);
}

TEST_CASE("divisor errors") {
  CHECK(testutil::thrown_code([] { predicted_connected_number(6, 4); }) == errc::not_a_divisor);
  CHECK(testutil::thrown_code([] { predicted_connected_number(6, 1); }) == errc::config_invalid);
}

TEST_CASE("zariski certificates") {
  const auto z4 = zariski_certificate(4);
  REQUIRE(z4.entries.size() == 2);
  CHECK(z4.entries[0].mu == 2);
  CHECK(z4.entries[0].predicted_c == 2);
  CHECK(z4.entries[1].mu == 4);
  CHECK(z4.entries[1].predicted_c == 1);
  CHECK(z4.distinct);

  const auto z6 = zariski_certificate(6);
  REQUIRE(z6.entries.size() == 3);
  CHECK(z6.entries[0].predicted_c == 3);
  CHECK(z6.entries[1].predicted_c == 2);
  CHECK(z6.entries[2].predicted_c == 1);
  CHECK(z6.distinct);

  const auto z5 = zariski_certificate(5);
  REQUIRE(z5.entries.size() == 1);
  CHECK(z5.entries[0].mu == 5);
  CHECK(z5.entries[0].predicted_c == 1);
}

TEST_CASE("interpolation oracle examples") {
  // the line through the three collinear tangency points
  CHECK(contact_divisor_oracle({3, {1, 1, 1}, 1}));
  // no line with triple contact for the generic triple
  CHECK(!contact_divisor_oracle({3, {1, 1, 3}, 1}));
  // d = mu instance
  CHECK(contact_divisor_oracle({2, {1, 1, 2}, 2}));
}

TEST_CASE("oracle agrees with the congruence exhaustively") {
  int ambiguous = 0;
  for (int mu = 2; mu <= 4; ++mu)
    for (int d = 1; d <= 4; ++d)
      for (int j1 = 1; j1 <= mu; ++j1)
        for (int j2 = 1; j2 <= mu; ++j2)
          for (int j3 = 1; j3 <= mu; ++j3) {
            const CarnotQuery q{mu, {j1, j2, j3}, d};
            bool oracle = false;
            try {
              oracle = contact_divisor_oracle(q);
            } catch (const Error& e) {
              REQUIRE(e.code() == errc::numerical_rank_ambiguous);
              ++ambiguous;
              continue;
            }
            CHECK(oracle == carnot_exists(q));
          }
  CHECK(ambiguous == 0);
}

TEST_CASE("oracle rejects out-of-scale queries") {
  CHECK(testutil::thrown_code([] { contact_divisor_oracle({8, {1, 1, 1}, 1}); }) ==
        errc::config_invalid);
}
