#pragma once

#include <array>
#include <vector>

#include "covercount/common.hpp"

namespace covercount::exact {

// Carnot-criterion query: does a degree-d divisor meet the three tangent
// lines L_{i,j_i} of the degree-mu Fermat curve exactly at their tangency
// points, with full multiplicity d?
struct CarnotQuery {
  int mu = 2;
  std::array<int, 3> j{1, 1, 1}; // each in 1..mu
  int d = 1;
};

void check_query(const CarnotQuery& q);

// True iff 2d*(2j1+2j2+2j3-3) == 0 (mod 2mu). Integer arithmetic only.
bool carnot_exists(const CarnotQuery& q);

struct DivisorWitness {
  long long lambda = 0; // candidate divisor of b
  long long d = 0;      // b / lambda
  bool carnot = false;
};

struct PredictionReport {
  long long b = 0;
  long long mu = 0;
  long long nu = 0;              // b / mu
  std::array<int, 3> j{1, 1, 1}; // tangency indices per family
  long long lambda = 0;          // predicted connected number
  std::vector<DivisorWitness> witnesses;
};

// Predicted connected number of the three tangent lines for the cyclic cover
// of degree b branched at the Artal curve: the maximal divisor lambda of b
// whose complementary degree d = b/lambda passes the Carnot criterion.
PredictionReport predicted_connected_number(long long b, long long mu,
                                            std::array<int, 3> j_triple);
// With the standard triple (1, 1, mu).
PredictionReport predicted_connected_number(long long b, long long mu);

struct ZariskiEntry {
  long long mu = 0;
  long long predicted_c = 0;
};

struct ZariskiCertificate {
  long long b = 0;
  std::vector<ZariskiEntry> entries; // one per divisor mu >= 2 of b
  bool distinct = false;             // all predicted c values pairwise distinct
};

ZariskiCertificate zariski_certificate(long long b);

struct OracleOptions {
  double rank_tol = tol::rank_eps;
  std::uint64_t seed = 0;
};

// Brute-force answer to the same question as carnot_exists, independent of
// the congruence: sets up the interpolation problem for degree-d forms with
// d-fold contact at the three tangency points and decides solvability by SVD
// rank. Throws NumericalRankAmbiguous when a singular value falls within 10x
// of the threshold.
bool contact_divisor_oracle(const CarnotQuery& q, const OracleOptions& opt = {});

} // namespace covercount::exact
