#ifndef GALOIS_TESTS_FIXTURES_HPP
#define GALOIS_TESTS_FIXTURES_HPP

// Worked-example generators typed in directly (alpha powers expanded with the
// oracle), so tests of the engine do not go through the embedded case data.

#include <cstdint>
#include <vector>

#include "galois/galois.hpp"
#include "oracles.hpp"

namespace fx {

using galois::PrimeModulus;
using galois::ProjectiveMatrix;
using galois::ProjectivePoint;
using galois::Subgroup;

struct Field
{
  std::int64_t p;
  std::int64_t alpha;

  std::int64_t a(std::int64_t k) const { return oracle::power(alpha, oracle::mod(k, p - 1), p); }
  ProjectiveMatrix m(std::int64_t x, std::int64_t y, std::int64_t z, std::int64_t w) const
  {
    return galois::normalize(galois::RawMatrix{x, y, z, w}, PrimeModulus(p));
  }
  ProjectivePoint pt(std::int64_t k) const { return ProjectivePoint(1, a(k), PrimeModulus(p)); }
  ProjectivePoint inf() const { return ProjectivePoint::infinity(PrimeModulus(p)); }
  ProjectivePoint origin() const { return ProjectivePoint(1, 0, PrimeModulus(p)); }
  Subgroup group(const std::vector<ProjectiveMatrix>& gens) const
  {
    return galois::generate_closure(PrimeModulus(p), gens);
  }
};

inline const Field f11{11, 2};
inline const Field f23{23, 5};
inline const Field f59{59, 2};

// p = 11
inline ProjectiveMatrix sigma11() { return f11.m(0, f11.a(1), 1, 0); }
inline ProjectiveMatrix tau11() { return f11.m(1, f11.a(1), -1, -1); }
inline ProjectiveMatrix eta11() { return f11.m(f11.a(1), f11.a(4), 1, f11.a(2)); }
inline ProjectiveMatrix xi11() { return f11.m(f11.a(1), 1, 1, 0); }
inline ProjectiveMatrix sigmap11() { return f11.m(0, f11.a(3), 1, 0); }
inline ProjectiveMatrix taup11() { return f11.m(f11.a(2), 1, f11.a(2), f11.a(4)); }
inline ProjectiveMatrix iota11() { return f11.m(f11.a(1), 0, 0, 1); }
inline Subgroup g1_11() { return f11.group({sigma11(), tau11(), eta11()}); }
inline Subgroup g2_11() { return f11.group({xi11()}); }
inline Subgroup g3_11() { return f11.group({sigmap11(), taup11()}); }

// p = 23
inline ProjectiveMatrix sigma23() { return f23.m(0, 1, f23.a(7), 0); }
inline ProjectiveMatrix tau23() { return f23.m(f23.a(12), f23.a(7), 1, f23.a(3)); }
inline ProjectiveMatrix eta23() { return f23.m(1, f23.a(10), f23.a(6), f23.a(15)); }
inline ProjectiveMatrix xi23() { return f23.m(0, -1, -1, 1); }
inline ProjectiveMatrix sigmap23() { return f23.m(0, f23.a(10), f23.a(9), 0); }
inline ProjectiveMatrix taup23() { return f23.m(f23.a(15), f23.a(1), -1, f23.a(7)); }
inline ProjectiveMatrix iota23() { return f23.m(f23.a(7), 0, 0, 1); }
inline Subgroup g1_23() { return f23.group({sigma23(), tau23(), eta23()}); }
inline Subgroup g2_23() { return f23.group({xi23()}); }
inline Subgroup g3_23() { return f23.group({sigmap23(), taup23()}); }

/// O_1..O_4 and T_1, T_2 as alpha exponents; -1 stands for (0:1), -2 for (1:0).
inline std::vector<std::vector<ProjectivePoint>> blocks23(const std::vector<std::vector<int>>& spec)
{
  std::vector<std::vector<ProjectivePoint>> out;
  for (const auto& b : spec) {
    std::vector<ProjectivePoint> block;
    for (int k : b)
      block.push_back(k == -1 ? f23.inf() : k == -2 ? f23.origin() : f23.pt(k));
    out.push_back(block);
  }
  return out;
}

inline galois::Partition o_blocks23()
{
  return {PrimeModulus(23), blocks23({{-1, 1, 3, 6, 7, 18},
                                      {-2, 8, 9, 12, 14, 19},
                                      {0, 2, 4, 10, 17, 21},
                                      {5, 11, 13, 15, 16, 20}})};
}

inline galois::Partition t_blocks23()
{
  return {PrimeModulus(23), blocks23({{-1, 18, 3, 11, 4, 9, 0, 21, 13, 16, 17, 15},
                                      {-2, 8, 6, 7, 10, 2, 1, 14, 19, 12, 20, 5}})};
}

// p = 59
inline ProjectiveMatrix sigma59() { return f59.m(-f59.a(26), 1, f59.a(27), f59.a(26)); }
inline ProjectiveMatrix tau59() { return f59.m(1, f59.a(1), f59.a(6), f59.a(34)); }
inline ProjectiveMatrix xi59() { return f59.m(1, 1, f59.a(12), 0); }
inline ProjectiveMatrix sigmap59() { return f59.m(0, f59.a(2), f59.a(-1), 0); }
inline ProjectiveMatrix taup59() { return f59.m(f59.a(2), f59.a(3), -1, -1); }
inline ProjectiveMatrix iota59() { return f59.m(1, f59.a(30), 0, -f59.a(15)); }
inline Subgroup g1_59() { return f59.group({sigma59(), tau59()}); }
inline Subgroup g2_59() { return f59.group({xi59()}); }
inline Subgroup g3_59() { return f59.group({sigmap59(), taup59()}); }

/// Element orders tallied through the permutation oracle.
inline std::map<std::uint64_t, std::uint64_t> oracle_order_tally(const Subgroup& g)
{
  std::vector<oracle::Perm> gens;
  for (const auto& m : g.generators())
    gens.push_back(oracle::perm_of(m));
  std::map<std::uint64_t, std::uint64_t> out;
  for (const auto& x : oracle::closure(gens))
    ++out[static_cast<std::uint64_t>(oracle::perm_order(x))];
  return out;
}

} // namespace fx

#endif
