#ifndef GALOIS_CRITERION_HPP
#define GALOIS_CRITERION_HPP

#include <optional>
#include <string>
#include <vector>

#include "group.hpp"

namespace galois {

// Failure labels, stable because they appear in certificate JSON.
inline constexpr const char* kFailNotDifferent = "groups not different";
inline constexpr const char* kFailOrdersDiffer = "group orders differ";
inline constexpr const char* kFailIntersection = "intersection not trivial";
inline constexpr const char* kFailOrbitNotRegular = "orbit length differs from group order";
inline constexpr const char* kFailOrbitsDiffer = "orbits differ";

/// Evidence that (G1, G2, Q) satisfies (or violates) the two-Galois-point criterion:
/// (a) G1 and G2 meet trivially; (b) G1Q = G2Q with length |G1| = |G2|.
struct PairCertificate
{
  PrimeModulus p{2};
  std::vector<ProjectiveMatrix> g1;
  std::vector<ProjectiveMatrix> g2;
  GroupKind kind1 = GroupKind::other(0);
  GroupKind kind2 = GroupKind::other(0);
  std::uint64_t degree = 0;
  ProjectivePoint base_point = ProjectivePoint::infinity(PrimeModulus{2});
  std::uint64_t intersection_size = 0;
  std::vector<ProjectivePoint> orbit1;
  std::vector<ProjectivePoint> orbit2;
  bool orbit_equal = false;
  bool passed = false;
  std::vector<std::string> failures;
  // Number of base points the verdict covers: 1, or p + 1 for the all-points sweep.
  std::size_t base_points_checked = 1;

  std::uint64_t orbit_length() const noexcept { return orbit1.size(); }
};

namespace detail {

// The parts of a certificate that do not depend on the base point.
inline PairCertificate certificate_skeleton(const Subgroup& g1, const Subgroup& g2)
{
  PairCertificate cert;
  cert.p = g1.modulus();
  cert.g1 = g1.generators();
  cert.g2 = g2.generators();
  cert.kind1 = recognize(g1);
  cert.kind2 = recognize(g2);
  cert.degree = g1.order();
  cert.intersection_size = intersect(g1, g2).order();
  return cert;
}

inline PairCertificate complete_at(PairCertificate cert, const Subgroup& g1, const Subgroup& g2,
                                   const ProjectivePoint& q)
{
  cert.base_point = q;
  cert.orbit1 = orbit(g1, q);
  cert.orbit2 = orbit(g2, q);
  cert.orbit_equal = cert.orbit1 == cert.orbit2;

  if (g1 == g2)
    cert.failures.emplace_back(kFailNotDifferent);
  if (g1.order() != g2.order())
    cert.failures.emplace_back(kFailOrdersDiffer);
  if (cert.intersection_size != 1)
    cert.failures.emplace_back(kFailIntersection);
  if (cert.orbit1.size() != cert.degree || cert.orbit2.size() != g2.order())
    cert.failures.emplace_back(kFailOrbitNotRegular);
  if (!cert.orbit_equal)
    cert.failures.emplace_back(kFailOrbitsDiffer);
  cert.passed = cert.failures.empty();
  return cert;
}

} // namespace detail

/// Evaluates every condition (no short-circuit) so all violations are listed.
inline PairCertificate check_pair(const Subgroup& g1, const Subgroup& g2, const ProjectivePoint& q)
{
  if (g1.modulus() != g2.modulus() || g1.modulus() != q.modulus())
    throw ModulusMismatch("check_pair inputs over different fields");
  return detail::complete_at(detail::certificate_skeleton(g1, g2), g1, g2, q);
}

/// Quantifies check_pair over every Q in P^1(F_p). On success the returned
/// certificate is the one at (0:1); otherwise it is the first failing one.
inline PairCertificate check_pair_all_basepoints(const Subgroup& g1, const Subgroup& g2)
{
  if (g1.modulus() != g2.modulus())
    throw ModulusMismatch("check_pair_all_basepoints inputs over different fields");
  const auto points = enumerate_points(g1.modulus());
  const auto skeleton = detail::certificate_skeleton(g1, g2);
  std::optional<PairCertificate> first;
  for (const auto& q : points) {
    auto cert = detail::complete_at(skeleton, g1, g2, q);
    if (!cert.passed) {
      cert.base_points_checked = points.size();
      return cert;
    }
    if (!first)
      first = std::move(cert);
  }
  first->base_points_checked = points.size();
  return *first;
}

} // namespace galois

#endif
