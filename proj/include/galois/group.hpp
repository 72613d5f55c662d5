#ifndef GALOIS_GROUP_HPP
#define GALOIS_GROUP_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "projective.hpp"

namespace galois {

inline constexpr std::size_t kDefaultClosureCap = 600;

/// |PGL(2, F_p)| = p^3 - p.
inline std::uint64_t pgl_order(PrimeModulus p)
{
  std::uint64_t q = p.value();
  return q * q * q - q;
}

/// A finite subgroup of PGL(2, F_p) with its elements fully enumerated.
///
/// Elements are kept sorted by canonical entries, so iteration order (and
/// everything derived from it) is deterministic.
class Subgroup
{
public:
  PrimeModulus modulus() const noexcept { return modulus_; }
  const std::vector<ProjectiveMatrix>& generators() const noexcept { return generators_; }
  const std::vector<ProjectiveMatrix>& elements() const noexcept { return elements_; }
  std::size_t order() const noexcept { return elements_.size(); }
  bool is_trivial() const noexcept { return elements_.size() == 1; }

  bool contains(const ProjectiveMatrix& m) const
  {
    return std::binary_search(elements_.begin(), elements_.end(), m);
  }

  friend bool operator==(const Subgroup& x, const Subgroup& y)
  {
    return x.modulus_ == y.modulus_ && x.elements_ == y.elements_;
  }

  /// Wraps an element set already known to be closed. Used by intersect/conjugate/stabilizer.
  static Subgroup from_closed_set(PrimeModulus p, std::vector<ProjectiveMatrix> gens,
                                  std::vector<ProjectiveMatrix> elems)
  {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    Subgroup g(p);
    g.generators_ = std::move(gens);
    g.elements_ = std::move(elems);
    return g;
  }

  static Subgroup trivial(PrimeModulus p)
  {
    auto id = ProjectiveMatrix::identity(p);
    return from_closed_set(p, {id}, {id});
  }

private:
  explicit Subgroup(PrimeModulus p) : modulus_(p) {}

  PrimeModulus modulus_;
  std::vector<ProjectiveMatrix> generators_;
  std::vector<ProjectiveMatrix> elements_;
};

/// Breadth-first closure of gens under composition.
inline Subgroup generate_closure(PrimeModulus p, const std::vector<ProjectiveMatrix>& gens,
                                 std::size_t cap = kDefaultClosureCap)
{
  if (gens.empty())
    throw Error("generate_closure needs at least one generator");
  if (cap == 0)
    throw Error("generate_closure needs cap >= 1");
  for (const auto& g : gens) {
    if (g.modulus() != p)
      throw ModulusMismatch("generator " + g.str() + " is not over F_" + std::to_string(p.value()));
  }

  auto id = ProjectiveMatrix::identity(p);
  std::unordered_set<ProjectiveMatrix> seen{id};
  std::vector<ProjectiveMatrix> frontier{id};
  while (!frontier.empty()) {
    std::vector<ProjectiveMatrix> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        auto y = compose(x, g);
        if (seen.insert(y).second) {
          if (seen.size() > cap)
            throw ClosureCapExceeded("closure exceeds " + std::to_string(cap) + " elements");
          next.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }
  return Subgroup::from_closed_set(p, gens, {seen.begin(), seen.end()});
}

/// Isomorphism type of a subgroup, named by order (Dihedral(12) has 12 elements).
class GroupKind
{
public:
  enum class Family { Cyclic, Dihedral, Alt4, Sym4, Alt5, Other };

  static GroupKind cyclic(std::uint64_t n) { return {Family::Cyclic, n}; }
  static GroupKind dihedral(std::uint64_t n) { return {Family::Dihedral, n}; }
  static GroupKind alt4() { return {Family::Alt4, 12}; }
  static GroupKind sym4() { return {Family::Sym4, 24}; }
  static GroupKind alt5() { return {Family::Alt5, 60}; }
  static GroupKind other(std::uint64_t n) { return {Family::Other, n}; }

  Family family() const noexcept { return family_; }
  std::uint64_t order() const noexcept { return order_; }

  /// Flag spelling: A4, S4, A5, C<n>, D<n>; Other(n) for everything else.
  std::string name() const
  {
    switch (family_) {
    case Family::Cyclic: return "C" + std::to_string(order_);
    case Family::Dihedral: return "D" + std::to_string(order_);
    case Family::Alt4: return "A4";
    case Family::Sym4: return "S4";
    case Family::Alt5: return "A5";
    case Family::Other: break;
    }
    return "Other(" + std::to_string(order_) + ")";
  }

  /// Inverse of name() for the flag spellings; nullopt when unrecognized.
  static std::optional<GroupKind> parse(const std::string& s)
  {
    if (s == "A4")
      return alt4();
    if (s == "S4")
      return sym4();
    if (s == "A5")
      return alt5();
    if (s.size() >= 2 && (s[0] == 'C' || s[0] == 'D')) {
      std::uint64_t n = 0;
      for (std::size_t i = 1; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9' || n > 1'000'000'000)
          return std::nullopt;
        n = n * 10 + static_cast<std::uint64_t>(s[i] - '0');
      }
      if (s[0] == 'C' && n >= 1)
        return cyclic(n);
      if (s[0] == 'D' && n >= 4 && n % 2 == 0)
        return dihedral(n);
    }
    if (s.rfind("Other(", 0) == 0 && s.back() == ')') {
      try {
        return other(std::stoull(s.substr(6, s.size() - 7)));
      } catch (const std::exception&) {
        return std::nullopt;
      }
    }
    return std::nullopt;
  }

  friend bool operator==(const GroupKind&, const GroupKind&) = default;

private:
  GroupKind(Family f, std::uint64_t n) : family_(f), order_(n) {}

  Family family_;
  std::uint64_t order_;
};

/// Element order -> number of elements with that order.
inline std::map<std::uint64_t, std::uint64_t> order_multiset(const Subgroup& g)
{
  std::map<std::uint64_t, std::uint64_t> counts;
  for (const auto& m : g.elements())
    ++counts[element_order(m)];
  return counts;
}

namespace detail {

inline bool dihedral_witness(const Subgroup& g, const std::vector<std::uint64_t>& orders)
{
  const std::uint64_t n = g.order();
  if (n < 4 || n % 2 != 0)
    return false;
  const auto& el = g.elements();
  for (std::size_t i = 0; i < el.size(); ++i) {
    if (orders[i] != n / 2)
      continue;
    const auto& r = el[i];
    const auto r_inv = inverse(r);
    std::vector<ProjectiveMatrix> rotations;
    rotations.reserve(n / 2);
    auto x = ProjectiveMatrix::identity(g.modulus());
    for (std::uint64_t k = 0; k < n / 2; ++k) {
      rotations.push_back(x);
      x = compose(x, r);
    }
    std::sort(rotations.begin(), rotations.end());
    for (std::size_t j = 0; j < el.size(); ++j) {
      if (orders[j] != 2 || std::binary_search(rotations.begin(), rotations.end(), el[j]))
        continue;
      const auto& s = el[j];
      if (compose(compose(s, r), inverse(s)) == r_inv)
        return true;
    }
  }
  return false;
}

} // namespace detail

/// Cyclic, then dihedral by structure; A4/S4/A5 by order statistics.
///
/// Among subgroups of PGL(2, q) of these orders the statistics identify the
/// type; anything else is reported as Other(|G|).
inline GroupKind recognize(const Subgroup& g)
{
  const std::uint64_t n = g.order();
  std::vector<std::uint64_t> orders;
  orders.reserve(n);
  for (const auto& m : g.elements())
    orders.push_back(element_order(m));

  if (std::find(orders.begin(), orders.end(), n) != orders.end())
    return GroupKind::cyclic(n);
  if (detail::dihedral_witness(g, orders))
    return GroupKind::dihedral(n);

  std::map<std::uint64_t, std::uint64_t> stats;
  for (auto o : orders)
    ++stats[o];
  using Stats = std::map<std::uint64_t, std::uint64_t>;
  if (n == 12 && stats == Stats{{1, 1}, {2, 3}, {3, 8}})
    return GroupKind::alt4();
  if (n == 24 && stats == Stats{{1, 1}, {2, 9}, {3, 8}, {4, 6}})
    return GroupKind::sym4();
  if (n == 60 && stats == Stats{{1, 1}, {2, 15}, {3, 20}, {5, 24}})
    return GroupKind::alt5();
  return GroupKind::other(n);
}

inline Subgroup intersect(const Subgroup& g, const Subgroup& h)
{
  if (g.modulus() != h.modulus())
    throw ModulusMismatch("intersect over different fields");
  std::vector<ProjectiveMatrix> common;
  std::set_intersection(g.elements().begin(), g.elements().end(), h.elements().begin(),
                        h.elements().end(), std::back_inserter(common));
  std::vector<ProjectiveMatrix> gens;
  for (const auto& m : common) {
    if (!m.is_identity())
      gens.push_back(m);
  }
  if (gens.empty())
    gens.push_back(ProjectiveMatrix::identity(g.modulus()));
  return Subgroup::from_closed_set(g.modulus(), std::move(gens), std::move(common));
}

/// {C^-1 A C : A in G}. Under the row action this is the transformation
/// conjugate c o g o c^-1, where c is the map represented by C.
inline Subgroup conjugate(const Subgroup& g, const ProjectiveMatrix& c)
{
  if (g.modulus() != c.modulus())
    throw ModulusMismatch("conjugate over different fields");
  const auto c_inv = inverse(c);
  auto conj = [&](const ProjectiveMatrix& a) { return compose(compose(c_inv, a), c); };
  std::vector<ProjectiveMatrix> gens, elems;
  for (const auto& a : g.generators())
    gens.push_back(conj(a));
  for (const auto& a : g.elements())
    elems.push_back(conj(a));
  return Subgroup::from_closed_set(g.modulus(), std::move(gens), std::move(elems));
}

/// Sorted, duplicate-free.
inline std::vector<ProjectivePoint> orbit(const Subgroup& g, const ProjectivePoint& q)
{
  if (g.modulus() != q.modulus())
    throw ModulusMismatch("orbit over different fields");
  std::vector<ProjectivePoint> out;
  out.reserve(g.order());
  for (const auto& a : g.elements())
    out.push_back(apply(q, a));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline Subgroup stabilizer(const Subgroup& g, const ProjectivePoint& q)
{
  if (g.modulus() != q.modulus())
    throw ModulusMismatch("stabilizer over different fields");
  std::vector<ProjectiveMatrix> fix;
  for (const auto& a : g.elements()) {
    if (apply(q, a) == q)
      fix.push_back(a);
  }
  std::vector<ProjectiveMatrix> gens;
  for (const auto& a : fix) {
    if (!a.is_identity())
      gens.push_back(a);
  }
  if (gens.empty())
    gens.push_back(ProjectiveMatrix::identity(g.modulus()));
  return Subgroup::from_closed_set(g.modulus(), std::move(gens), std::move(fix));
}

inline bool is_transitive(const Subgroup& g)
{
  return orbit(g, ProjectivePoint::infinity(g.modulus())).size() == g.modulus().value() + 1u;
}

/// Disjoint blocks covering P^1(F_p). Each block is stored sorted.
class Partition
{
public:
  Partition(PrimeModulus p, std::vector<std::vector<ProjectivePoint>> blocks)
      : modulus_(p), blocks_(std::move(blocks)), owner_(p.value() + 1, kNone)
  {
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      auto& b = blocks_[i];
      if (b.empty())
        throw InvalidPartition("block " + std::to_string(i + 1) + " is empty");
      std::sort(b.begin(), b.end());
      for (const auto& q : b) {
        if (q.modulus() != p)
          throw ModulusMismatch("partition point over a different field");
        if (owner_[q.index()] != kNone)
          throw InvalidPartition("point " + to_string(q) + " lies in two blocks");
        owner_[q.index()] = i;
      }
    }
    for (const auto& q : enumerate_points(p)) {
      if (owner_[q.index()] == kNone)
        throw InvalidPartition("point " + to_string(q) + " is not covered");
    }
  }

  PrimeModulus modulus() const noexcept { return modulus_; }
  const std::vector<std::vector<ProjectivePoint>>& blocks() const noexcept { return blocks_; }
  std::size_t size() const noexcept { return blocks_.size(); }
  std::size_t block_of(const ProjectivePoint& q) const { return owner_.at(q.index()); }

private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  static std::string to_string(const ProjectivePoint& q)
  {
    return "(" + std::to_string(q.s().value()) + ":" + std::to_string(q.t().value()) + ")";
  }

  PrimeModulus modulus_;
  std::vector<std::vector<ProjectivePoint>> blocks_;
  std::vector<std::size_t> owner_;
};

/// perm[i] = j when A maps block i onto block j (0-based).
inline std::vector<std::size_t> block_action(const ProjectiveMatrix& a, const Partition& part)
{
  if (a.modulus() != part.modulus())
    throw ModulusMismatch("block_action over different fields");
  std::vector<std::size_t> perm(part.size());
  for (std::size_t i = 0; i < part.size(); ++i) {
    const auto& block = part.blocks()[i];
    const std::size_t target = part.block_of(apply(block.front(), a));
    if (part.blocks()[target].size() != block.size())
      throw NotBlockPreserving(a.str() + " maps block " + std::to_string(i + 1) +
                               " into a block of different size");
    for (const auto& q : block) {
      if (part.block_of(apply(q, a)) != target)
        throw NotBlockPreserving(a.str() + " splits block " + std::to_string(i + 1));
    }
    perm[i] = target;
  }
  return perm;
}

inline bool is_faithful_on_blocks(const Subgroup& g, const Partition& part)
{
  std::vector<std::size_t> id(part.size());
  for (std::size_t i = 0; i < id.size(); ++i)
    id[i] = i;
  bool faithful = true;
  // Every element is visited so that a non-invariant partition always raises.
  for (const auto& a : g.elements()) {
    if (block_action(a, part) == id && !a.is_identity())
      faithful = false;
  }
  return faithful;
}

} // namespace galois

#endif
