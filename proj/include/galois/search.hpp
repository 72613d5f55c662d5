#ifndef GALOIS_SEARCH_HPP
#define GALOIS_SEARCH_HPP

#include <algorithm>
#include <cstdint>
#include <future>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "criterion.hpp"
#include "errors.hpp"
#include "group.hpp"
#include "projective.hpp"

namespace galois {

enum class SearchStrategy { Scaling, Random, ExhaustiveCyclic };

inline std::string strategy_name(SearchStrategy s)
{
  switch (s) {
  case SearchStrategy::Scaling: return "scaling";
  case SearchStrategy::Random: return "random";
  case SearchStrategy::ExhaustiveCyclic: break;
  }
  return "exhaustive-cyclic";
}

inline std::optional<SearchStrategy> parse_strategy(const std::string& s)
{
  if (s == "scaling")
    return SearchStrategy::Scaling;
  if (s == "random")
    return SearchStrategy::Random;
  if (s == "exhaustive-cyclic")
    return SearchStrategy::ExhaustiveCyclic;
  return std::nullopt;
}

/// Validated on construction (InvalidConfig).
///
/// limit counts first-group samples: every strategy draws G1 from
/// (seed, index) and pairs it with a second group chosen by the strategy.
struct SearchConfig
{
  PrimeModulus p;
  GroupKind kind1;
  GroupKind kind2;
  SearchStrategy strategy;
  std::uint64_t seed;
  std::uint64_t limit;
  unsigned jobs;

  SearchConfig(PrimeModulus p_, GroupKind k1, GroupKind k2, SearchStrategy s, std::uint64_t seed_,
               std::uint64_t limit_, unsigned jobs_ = 1)
      : p(p_), kind1(k1), kind2(k2), strategy(s), seed(seed_), limit(limit_), jobs(jobs_)
  {
    if (limit == 0)
      throw InvalidConfig("limit must be at least 1");
    if (jobs == 0)
      throw InvalidConfig("jobs must be at least 1");
    if (kind1.order() != kind2.order())
      throw InvalidConfig("kinds " + kind1.name() + " and " + kind2.name() + " have different orders");
    if (kind1.family() == GroupKind::Family::Other || kind2.family() == GroupKind::Family::Other)
      throw InvalidConfig("search targets must be cyclic, dihedral, A4, S4 or A5");
    if (s == SearchStrategy::Scaling && !(kind1 == kind2))
      throw InvalidConfig("scaling search conjugates G1, so kind2 must equal kind1");
    if (s == SearchStrategy::ExhaustiveCyclic && kind2.family() != GroupKind::Family::Cyclic)
      throw InvalidConfig("exhaustive-cyclic search needs a cyclic kind2");
  }
};

struct SearchOutcome
{
  std::optional<PairCertificate> certificate;
  /// Sample index that produced the certificate.
  std::optional<std::uint64_t> index;
  std::uint64_t samples = 0;
  std::uint64_t skipped = 0;
};

/// c in 2..p-1 with diag(c,1) conjugating G to a group meeting G trivially;
/// when |G| = p + 1 and G is transitive the pair must also pass at (0:1).
inline std::vector<std::int64_t> find_scaling_conjugates(const Subgroup& g)
{
  if (g.order() < 2)
    throw InvalidConfig("find_scaling_conjugates needs a nontrivial group");
  const PrimeModulus p = g.modulus();
  const bool regular = g.order() == static_cast<std::size_t>(p.value()) + 1 && is_transitive(g);
  std::vector<std::int64_t> out;
  for (std::int64_t c = 2; c < static_cast<std::int64_t>(p.value()); ++c) {
    const auto h = conjugate(g, ProjectiveMatrix(RawMatrix{c, 0, 0, 1}, p));
    if (intersect(g, h).order() != 1)
      continue;
    if (regular && !check_pair(g, h, ProjectivePoint::infinity(p)).passed)
      continue;
    out.push_back(c);
  }
  return out;
}

/// First element of order p + 1 in enumerate_matrices order, closed up.
inline Subgroup find_cyclic_regular(PrimeModulus p)
{
  const std::uint64_t n = static_cast<std::uint64_t>(p.value()) + 1;
  for (const auto& m : enumerate_matrices(p)) {
    if (element_order(m) == n)
      return generate_closure(p, {m}, n);
  }
  throw NotFound("no element of order " + std::to_string(n) + " in PGL(2, F_" + std::to_string(p.value()) + ")");
}

/// Distinct cyclic subgroups of order n, each given by its least generator.
inline std::vector<ProjectiveMatrix> cyclic_subgroup_generators(PrimeModulus p, std::uint64_t n)
{
  std::vector<ProjectiveMatrix> out;
  for (const auto& m : enumerate_matrices(p)) {
    if (element_order(m) != n)
      continue;
    bool least = true;
    for (std::uint64_t k = 2; k < n && least; ++k)
      if (std::gcd(k, n) == 1 && power(m, static_cast<std::int64_t>(k)) < m)
        least = false;
    if (least)
      out.push_back(m);
  }
  return out;
}

namespace detail {

inline std::mt19937_64 candidate_rng(std::uint64_t seed, std::uint64_t index)
{
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

// Plain modular reduction keeps draws identical across standard libraries.
inline ProjectiveMatrix random_matrix(std::mt19937_64& rng, PrimeModulus p)
{
  const auto q = static_cast<std::uint64_t>(p.value());
  for (;;) {
    auto draw = [&] { return static_cast<std::int64_t>(rng() % q); };
    const std::int64_t a = draw(), b = draw(), c = draw(), d = draw();
    if (Fp(a * d - b * c, p).is_zero())
      continue;
    return {RawMatrix{a, b, c, d}, p};
  }
}

inline constexpr int kDrawsPerElement = 20000;

inline std::optional<ProjectiveMatrix> random_of_order(std::mt19937_64& rng, PrimeModulus p, std::uint64_t k)
{
  for (int i = 0; i < kDrawsPerElement; ++i) {
    auto m = random_matrix(rng, p);
    if (element_order(m) == k)
      return m;
  }
  return std::nullopt;
}

/// Generator orders (x, y) and the order of xy: any group with such a
/// generating pair is a quotient of the triangle group (2,2,n/2), (2,3,3),
/// (2,3,4) or (2,3,5), i.e. of D_n, A4, S4 or A5. Cyclic kinds use one generator.
struct Shape
{
  std::vector<std::uint64_t> orders;
  std::uint64_t product_order = 0;
};

inline Shape generator_shape(const GroupKind& k)
{
  switch (k.family()) {
  case GroupKind::Family::Cyclic: return {{k.order()}, 0};
  case GroupKind::Family::Dihedral: return {{2, 2}, k.order() / 2};
  case GroupKind::Family::Alt4: return {{2, 3}, 3};
  case GroupKind::Family::Sym4: return {{2, 3}, 4};
  case GroupKind::Family::Alt5: return {{2, 3}, 5};
  case GroupKind::Family::Other: break;
  }
  return {};
}

/// A subgroup of the requested kind, or nullopt when the draw misses.
inline std::optional<Subgroup> sample_subgroup(std::mt19937_64& rng, PrimeModulus p, const GroupKind& kind)
{
  const auto shape = generator_shape(kind);
  std::vector<ProjectiveMatrix> gens;
  auto x = random_of_order(rng, p, shape.orders[0]);
  if (!x)
    return std::nullopt;
  gens.push_back(*x);
  if (shape.orders.size() == 2) {
    std::optional<ProjectiveMatrix> y;
    for (int i = 0; i < kDrawsPerElement && !y; ++i) {
      auto m = random_matrix(rng, p);
      if (element_order(m) == shape.orders[1] && element_order(compose(*x, m)) == shape.product_order)
        y = m;
    }
    if (!y)
      return std::nullopt;
    gens.push_back(*y);
  }
  try {
    auto g = generate_closure(p, gens, static_cast<std::size_t>(kind.order()));
    if (!(recognize(g) == kind))
      return std::nullopt;
    return g;
  } catch (const ClosureCapExceeded&) {
    return std::nullopt;
  }
}

struct CandidateResult
{
  std::optional<PairCertificate> certificate;
  bool skipped = false;
};

inline CandidateResult evaluate_candidate(const SearchConfig& cfg, std::uint64_t index,
                                          const std::vector<ProjectiveMatrix>& cyclics)
{
  auto rng = candidate_rng(cfg.seed, index);
  auto g1 = sample_subgroup(rng, cfg.p, cfg.kind1);
  if (!g1)
    return {std::nullopt, true};
  switch (cfg.strategy) {
  case SearchStrategy::Random: {
    auto g2 = sample_subgroup(rng, cfg.p, cfg.kind2);
    if (!g2)
      return {std::nullopt, true};
    if (intersect(*g1, *g2).order() != 1)
      return {};
    auto cert = check_pair_all_basepoints(*g1, *g2);
    if (cert.passed)
      return {std::move(cert), false};
    return {};
  }
  case SearchStrategy::Scaling: {
    for (auto c : find_scaling_conjugates(*g1)) {
      auto h = conjugate(*g1, ProjectiveMatrix(RawMatrix{c, 0, 0, 1}, cfg.p));
      auto cert = check_pair_all_basepoints(*g1, h);
      if (cert.passed)
        return {std::move(cert), false};
    }
    return {};
  }
  case SearchStrategy::ExhaustiveCyclic: {
    for (const auto& x : cyclics) {
      auto h = generate_closure(cfg.p, {x}, static_cast<std::size_t>(cfg.kind2.order()));
      if (intersect(*g1, h).order() != 1)
        continue;
      auto cert = check_pair_all_basepoints(*g1, h);
      if (cert.passed)
        return {std::move(cert), false};
    }
    return {};
  }
  }
  return {};
}

} // namespace detail

/// Runs cfg.strategy over sample indices 0..limit-1, evaluated in batches of
/// cfg.jobs; the smallest passing index wins, so the outcome is independent
/// of scheduling.
inline SearchOutcome run_search(const SearchConfig& cfg)
{
  std::vector<ProjectiveMatrix> cyclics;
  if (cfg.strategy == SearchStrategy::ExhaustiveCyclic)
    cyclics = cyclic_subgroup_generators(cfg.p, cfg.kind2.order());

  SearchOutcome out;
  for (std::uint64_t start = 0; start < cfg.limit; start += cfg.jobs) {
    const std::uint64_t end = std::min<std::uint64_t>(cfg.limit, start + cfg.jobs);
    std::vector<detail::CandidateResult> results;
    if (cfg.jobs == 1) {
      results.push_back(detail::evaluate_candidate(cfg, start, cyclics));
    } else {
      std::vector<std::future<detail::CandidateResult>> futs;
      for (std::uint64_t i = start; i < end; ++i)
        futs.push_back(std::async(std::launch::async,
                                  [&cfg, &cyclics, i] { return detail::evaluate_candidate(cfg, i, cyclics); }));
      for (auto& f : futs)
        results.push_back(f.get());
    }
    for (std::uint64_t i = start; i < end; ++i) {
      auto& r = results[i - start];
      ++out.samples;
      if (r.skipped)
        ++out.skipped;
      if (r.certificate) {
        out.certificate = std::move(r.certificate);
        out.index = i;
        return out;
      }
    }
  }
  return out;
}

/// The random strategy alone: first passing certificate, or nullopt after limit samples.
inline std::optional<PairCertificate> random_pair_search(const SearchConfig& cfg)
{
  if (cfg.strategy != SearchStrategy::Random)
    throw InvalidConfig("random_pair_search needs strategy random");
  return run_search(cfg).certificate;
}

} // namespace galois

#endif
