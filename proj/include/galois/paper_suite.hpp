#ifndef GALOIS_PAPER_SUITE_HPP
#define GALOIS_PAPER_SUITE_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "criterion.hpp"
#include "errors.hpp"
#include "group.hpp"
#include "prime_field.hpp"
#include "projective.hpp"

namespace galois {

/// The three worked characteristics.
inline const std::vector<std::int64_t>& paper_primes()
{
  static const std::vector<std::int64_t> ps{11, 23, 59};
  return ps;
}

/// Printed data for one pair (p, label), label in a|b|c.
struct PaperCase
{
  PrimeModulus p;
  char label;
  Fp alpha;
  std::vector<ProjectiveMatrix> g1_generators;
  std::vector<ProjectiveMatrix> g2_generators;
  GroupKind kind1;
  GroupKind kind2;
  /// Every named matrix of the section: sigma, tau, eta, mu, xi, sigma', tau', iota.
  std::map<std::string, ProjectiveMatrix> matrices;
  ProjectiveMatrix conjugator;
  /// O- and T-blocks; empty except at p = 23.
  std::vector<std::vector<ProjectivePoint>> o_blocks;
  std::vector<std::vector<ProjectivePoint>> t_blocks;
  /// Printed element lists, keyed "g1-order2", "g1-order3", "g4-order2", "g4-order3" (p = 11 only).
  /// Kept raw: one printed entry is singular.
  std::map<std::string, std::vector<RawMatrix>> element_lists;
};

namespace detail {

struct SectionData
{
  PrimeModulus p;
  Fp alpha;
  std::map<std::string, ProjectiveMatrix> m;
  std::vector<std::string> g1_names;
  GroupKind g1_kind;
  GroupKind g3_kind;
  std::vector<std::vector<ProjectivePoint>> o_blocks, t_blocks;
  std::map<std::string, std::vector<RawMatrix>> lists;

  Fp a(std::int64_t k) const { return alpha.pow(k); }
  Fp n(std::int64_t v) const { return Fp(v, p); }
  ProjectiveMatrix mat(Fp x, Fp y, Fp z, Fp w) const { return {x, y, z, w}; }
  ProjectiveMatrix mat(std::int64_t x, std::int64_t y, std::int64_t z, std::int64_t w) const
  {
    return {RawMatrix{x, y, z, w}, p};
  }
  /// (1 : alpha^k)
  ProjectivePoint pt(std::int64_t k) const { return ProjectivePoint::affine(a(k)); }
  ProjectivePoint inf() const { return ProjectivePoint::infinity(p); }
  ProjectivePoint origin() const { return ProjectivePoint::affine(n(0)); }
  std::vector<ProjectivePoint> pts(std::initializer_list<std::int64_t> ks) const
  {
    std::vector<ProjectivePoint> r;
    for (auto k : ks)
      r.push_back(pt(k));
    return r;
  }
  const ProjectiveMatrix& operator[](const std::string& k) const { return m.at(k); }
};

inline SectionData section11()
{
  PrimeModulus p(11);
  SectionData s{p, primitive_element(p), {}, {"sigma", "tau", "eta"}, GroupKind::alt4(),
                GroupKind::dihedral(12), {}, {}, {}};
  auto a = [&](std::int64_t k) { return s.a(k); };
  auto n = [&](std::int64_t v) { return s.n(v); };
  s.m.emplace("sigma", s.mat(n(0), a(1), n(1), n(0)));
  s.m.emplace("tau", s.mat(n(1), a(1), n(-1), n(-1)));
  s.m.emplace("eta", s.mat(a(1), a(4), n(1), a(2)));
  s.m.emplace("xi", s.mat(a(1), n(1), n(1), n(0)));
  s.m.emplace("sigma'", s.mat(n(0), a(3), n(1), n(0)));
  s.m.emplace("tau'", s.mat(a(2), n(1), a(2), a(4)));
  s.m.emplace("iota", s.mat(a(1), n(0), n(0), n(1)));
  s.lists["g1-order2"] = {RawMatrix{0, 2, 1, 0}, RawMatrix{10, 9, 1, 1}, RawMatrix{9, 9, 1, 2}};
  s.lists["g1-order3"] = {RawMatrix{2, 5, 1, 4}, RawMatrix{7, 5, 1, 9},  RawMatrix{4, 1, 1, 6}, RawMatrix{3, 4, 1, 10},
                          RawMatrix{1, 4, 1, 8}, RawMatrix{8, 3, 1, 5}, RawMatrix{6, 3, 1, 3}, RawMatrix{5, 4, 1, 7}};
  s.lists["g4-order2"] = {RawMatrix{0, 6, 1, 0}, RawMatrix{5, 5, 1, 6}, RawMatrix{10, 5, 1, 1}};
  s.lists["g4-order3"] = {RawMatrix{1, 4, 1, 2}, RawMatrix{9, 4, 1, 10}, RawMatrix{2, 3, 1, 3}, RawMatrix{7, 1, 1, 5},
                          RawMatrix{6, 2, 1, 4}, RawMatrix{4, 9, 1, 8},  RawMatrix{3, 9, 1, 7}, RawMatrix{8, 3, 1, 9}};
  return s;
}

inline SectionData section23()
{
  PrimeModulus p(23);
  SectionData s{p, primitive_element(p), {}, {"sigma", "tau", "eta", "mu"}, GroupKind::sym4(),
                GroupKind::dihedral(24), {}, {}, {}};
  auto a = [&](std::int64_t k) { return s.a(k); };
  auto n = [&](std::int64_t v) { return s.n(v); };
  s.m.emplace("sigma", s.mat(n(0), n(1), a(7), n(0)));
  s.m.emplace("tau", s.mat(a(12), a(7), n(1), a(3)));
  s.m.emplace("eta", s.mat(n(1), a(10), a(6), a(15)));
  s.m.emplace("mu", s.mat(n(-1), n(1), -a(7), n(1)));
  s.m.emplace("xi", s.mat(n(0), n(-1), n(-1), n(1)));
  s.m.emplace("sigma'", s.mat(n(0), a(10), a(9), n(0)));
  s.m.emplace("tau'", s.mat(a(15), a(1), n(-1), a(7)));
  s.m.emplace("iota", s.mat(a(7), n(0), n(0), n(1)));

  auto with = [](std::vector<ProjectivePoint> v, ProjectivePoint q) {
    v.insert(v.begin(), q);
    return v;
  };
  s.o_blocks = {with(s.pts({1, 3, 6, 7, 18}), s.inf()), with(s.pts({8, 9, 12, 14, 19}), s.origin()),
                with(s.pts({2, 4, 10, 17, 21}), s.pt(0)), s.pts({5, 11, 13, 15, 16, 20})};
  s.t_blocks = {with(s.pts({18, 3, 11, 4, 9, 0, 21, 13, 16, 17, 15}), s.inf()),
                with(s.pts({8, 6, 7, 10, 2, 1, 14, 19, 12, 20, 5}), s.origin())};
  return s;
}

inline SectionData section59()
{
  PrimeModulus p(59);
  SectionData s{p, primitive_element(p), {}, {"sigma", "tau"}, GroupKind::alt5(), GroupKind::dihedral(60),
                {}, {}, {}};
  auto a = [&](std::int64_t k) { return s.a(k); };
  auto n = [&](std::int64_t v) { return s.n(v); };
  s.m.emplace("sigma", s.mat(-a(26), n(1), a(27), a(26)));
  s.m.emplace("tau", s.mat(n(1), a(1), a(6), a(34)));
  s.m.emplace("xi", s.mat(n(1), n(1), a(12), n(0)));
  s.m.emplace("sigma'", s.mat(n(0), a(2), a(-1), n(0)));
  s.m.emplace("tau'", s.mat(a(2), a(3), n(-1), n(-1)));
  s.m.emplace("iota", s.mat(n(1), a(30), n(0), -a(15)));
  return s;
}

inline SectionData section(std::int64_t p)
{
  switch (p) {
  case 11:
    return section11();
  case 23:
    return section23();
  case 59:
    return section59();
  default:
    throw UnknownCase("no worked example for p = " + std::to_string(p));
  }
}

inline std::vector<ProjectiveMatrix> named(const SectionData& s, const std::vector<std::string>& names)
{
  std::vector<ProjectiveMatrix> r;
  for (const auto& k : names)
    r.push_back(s[k]);
  return r;
}

inline std::vector<ProjectiveMatrix> conjugated_generators(const SectionData& s)
{
  const auto& c = s["iota"];
  std::vector<ProjectiveMatrix> r;
  for (const auto& g : named(s, s.g1_names))
    r.push_back(compose(compose(inverse(c), g), c));
  return r;
}

} // namespace detail

inline PaperCase load_case(std::int64_t p, char label)
{
  if (label != 'a' && label != 'b' && label != 'c')
    throw UnknownCase(std::string("no case '") + label + "'");
  const auto s = detail::section(p);
  const std::uint64_t order = s.g1_kind.order();
  PaperCase c{s.p, label, s.alpha, detail::named(s, s.g1_names), {}, s.g1_kind, s.g1_kind,
              s.m, s["iota"], s.o_blocks, s.t_blocks, s.lists};
  switch (label) {
  case 'a':
    c.g2_generators = {s["xi"]};
    c.kind2 = GroupKind::cyclic(order);
    break;
  case 'b':
    c.g2_generators = {s["sigma'"], s["tau'"]};
    c.kind2 = s.g3_kind;
    break;
  default:
    c.g2_generators = detail::conjugated_generators(s);
    break;
  }
  return c;
}

struct ReportItem
{
  std::string id;
  std::string claim;
  bool pass;
  std::string detail;
  /// Pair labels the item supports, e.g. "abc" for statements about G1 alone.
  std::string cases;
};

struct Report
{
  std::int64_t p = 0;
  std::vector<ReportItem> items;

  bool passed() const
  {
    return std::all_of(items.begin(), items.end(), [](const ReportItem& i) { return i.pass; });
  }

  std::size_t pass_count() const
  {
    return static_cast<std::size_t>(
        std::count_if(items.begin(), items.end(), [](const ReportItem& i) { return i.pass; }));
  }

  const ReportItem* find(const std::string& id) const
  {
    for (const auto& i : items)
      if (i.id == id)
        return &i;
    return nullptr;
  }

  std::string text() const
  {
    std::ostringstream os;
    for (const auto& i : items) {
      os << (i.pass ? "PASS " : "FAIL ") << i.id << ": " << i.claim;
      if (!i.pass && !i.detail.empty())
        os << " [" << i.detail << "]";
      os << '\n';
    }
    os << "p=" << p << ": " << pass_count() << "/" << items.size() << " items pass"
       << (passed() ? "" : ", report FAILED") << '\n';
    return os.str();
  }
};

namespace detail {

class ReportBuilder
{
public:
  ReportBuilder(const SectionData& s, std::optional<char> only) : s_(s), only_(only)
  {
    rep_.p = static_cast<std::int64_t>(s.p.value());
    const auto q = static_cast<std::int64_t>(s.p.value());
    for (std::int64_t k = 0; k + 1 < q; ++k)
      log_[s.alpha.pow(k).value()] = k;
  }

  void add(std::string id, std::string claim, const std::string& cases, bool pass, std::string detail = {})
  {
    if (only_ && cases.find(*only_) == std::string::npos)
      return;
    rep_.items.push_back({std::move(id), std::move(claim), pass, std::move(detail), cases});
  }

  void order(const std::string& id, const std::string& name, std::uint64_t expected, const std::string& cases)
  {
    const auto got = element_order(s_[name]);
    add(id, name + " has order " + std::to_string(expected), cases, got == expected,
        "order " + std::to_string(got));
  }

  void similar(const std::string& id, const std::string& claim, const ProjectiveMatrix& lhs,
               const ProjectiveMatrix& rhs, const std::string& cases)
  {
    add(id, claim, cases, lhs == rhs, "lhs " + lhs.str() + ", rhs " + rhs.str());
  }

  void kind(const std::string& id, const std::string& claim, const Subgroup& g, const GroupKind& expected,
            const std::string& cases)
  {
    const auto got = recognize(g);
    add(id, claim, cases, got == expected, "recognized " + got.name());
  }

  void transitive(const std::string& id, const std::string& claim, const Subgroup& g, const std::string& cases)
  {
    const auto len = orbit(g, s_.inf()).size();
    add(id, claim, cases, is_transitive(g), "orbit of (0:1) has " + std::to_string(len) + " points");
  }

  void trivial_meet(const std::string& id, const std::string& claim, const Subgroup& g, const Subgroup& h,
                    const std::string& cases)
  {
    const auto sz = intersect(g, h).order();
    add(id, claim, cases, sz == 1, "intersection order " + std::to_string(sz));
  }

  void pair(const std::string& id, const std::string& claim, const Subgroup& g, const Subgroup& h,
            const std::string& cases)
  {
    const auto cert = check_pair_all_basepoints(g, h);
    std::string why;
    for (const auto& f : cert.failures)
      why += (why.empty() ? "" : "; ") + f;
    add(id, claim, cases, cert.passed, why);
  }

  void point(const std::string& id, const std::string& claim, const ProjectivePoint& got,
             const ProjectivePoint& expected, const std::string& cases)
  {
    add(id, claim, cases, got == expected, "got " + name(got));
  }

  std::string name(const ProjectivePoint& q) const
  {
    if (q.is_infinity())
      return "(0:1)";
    if (q.t().is_zero())
      return "(1:0)";
    return "(1:a^" + std::to_string(log_.at(q.t().value())) + ")";
  }

  std::string names(const std::vector<ProjectivePoint>& v) const
  {
    std::string r = "{";
    for (std::size_t i = 0; i < v.size(); ++i)
      r += (i ? "," : "") + name(v[i]);
    return r + "}";
  }

  Report take() { return std::move(rep_); }

private:
  const SectionData& s_;
  std::optional<char> only_;
  Report rep_;
  std::map<std::uint64_t, std::int64_t> log_;
};

inline std::set<ProjectivePoint> as_set(const std::vector<ProjectivePoint>& v) { return {v.begin(), v.end()}; }

inline std::set<ProjectivePoint> image(const std::vector<ProjectivePoint>& v, const ProjectiveMatrix& g)
{
  std::set<ProjectivePoint> r;
  for (const auto& q : v)
    r.insert(apply(q, g));
  return r;
}

inline std::vector<ProjectivePoint> meet(const std::set<ProjectivePoint>& x, const std::set<ProjectivePoint>& y)
{
  std::vector<ProjectivePoint> r;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(r));
  return r;
}

inline std::set<ProjectiveMatrix> of_order(const Subgroup& g, std::uint64_t k)
{
  std::set<ProjectiveMatrix> r;
  for (const auto& x : g.elements())
    if (element_order(x) == k)
      r.insert(x);
  return r;
}

// Printed list versus the true set of elements of that order; lists the
// printed entries that are not group elements of the stated order.
inline void list_item(ReportBuilder& b, const std::string& id, const std::string& claim,
                      const std::vector<RawMatrix>& printed, const Subgroup& g, std::uint64_t k,
                      const std::string& cases)
{
  const auto actual = of_order(g, k);
  std::set<ProjectiveMatrix> listed;
  std::string detail;
  bool all_invertible = true;
  for (const auto& r : printed) {
    try {
      ProjectiveMatrix x(r, g.modulus());
      listed.insert(x);
      if (!actual.count(x))
        detail += (detail.empty() ? "" : ", ") + x.str() + " is not an element of that order";
    } catch (const SingularMatrix&) {
      all_invertible = false;
      detail += (detail.empty() ? "" : ", ") + std::string("[[") + std::to_string(r.a) + "," + std::to_string(r.b) +
                "],[" + std::to_string(r.c) + "," + std::to_string(r.d) + "]] is singular";
    }
  }
  for (const auto& x : actual)
    if (!listed.count(x))
      detail += (detail.empty() ? "" : ", ") + std::string("missing ") + x.str();
  b.add(id, claim, cases, all_invertible && listed == actual && listed.size() == printed.size(), detail);
}

inline ProjectiveMatrix product(std::initializer_list<ProjectiveMatrix> ms)
{
  auto it = ms.begin();
  ProjectiveMatrix acc = *it;
  for (++it; it != ms.end(); ++it)
    acc = compose(acc, *it);
  return acc;
}

inline void verify11(const SectionData& s, ReportBuilder& b)
{
  const auto &sg = s["sigma"], &ta = s["tau"], &et = s["eta"], &xi = s["xi"];
  const auto &sp = s["sigma'"], &tp = s["tau'"];
  const auto p = s.p;

  b.add("alpha", "alpha = 2 is the least primitive element mod 11", "abc", s.alpha.value() == 2,
        "alpha = " + std::to_string(s.alpha.value()));
  b.order("sigma-order", "sigma", 2, "abc");
  b.order("tau-order", "tau", 2, "abc");
  b.order("eta-order", "eta", 3, "abc");
  b.similar("sigma-tau-commute", "A_sigma A_tau ~ A_tau A_sigma", compose(sg, ta), compose(ta, sg), "abc");
  b.similar("eta-conj-sigma", "A_eta^-1 A_sigma A_eta ~ A_tau", product({inverse(et), sg, et}), ta, "abc");
  b.similar("eta-conj-tau", "A_eta^-1 A_tau A_eta ~ A_sigma A_tau", product({inverse(et), ta, et}),
            compose(sg, ta), "abc");

  const auto g1 = generate_closure(p, named(s, s.g1_names));
  b.kind("g1-kind", "G1 = <sigma, tau, eta> is A4", g1, GroupKind::alt4(), "abc");
  list_item(b, "g1-order2-list", "the printed three matrices are exactly the order-2 elements of G1",
            s.lists.at("g1-order2"), g1, 2, "abc");
  list_item(b, "g1-order3-list", "the printed eight matrices are exactly the order-3 elements of G1",
            s.lists.at("g1-order3"), g1, 3, "abc");
  b.add("g1-order3-count", "G1 has exactly eight elements of order 3", "abc", of_order(g1, 3).size() == 8,
        std::to_string(of_order(g1, 3).size()) + " found");
  b.transitive("g1-transitive", "G1 is transitive on the 12 points", g1, "abc");

  b.order("xi-order", "xi", 12, "a");
  const auto g2 = generate_closure(p, {xi});
  b.kind("g2-kind", "G2 = <xi> is cyclic of order 12", g2, GroupKind::cyclic(12), "a");
  b.transitive("g2-transitive", "G2 is transitive on the 12 points", g2, "a");
  b.similar("xi6-class", "A_xi^6 ~ [[1,1],[1,10]]", power(xi, 6), s.mat(1, 1, 1, 10), "a");
  b.similar("xi4-class", "A_xi^4 ~ [[7,1],[1,5]]", power(xi, 4), s.mat(7, 1, 1, 5), "a");
  b.add("xi6-not-in-g1", "xi^6 is not in G1", "a", !g1.contains(power(xi, 6)));
  b.add("xi4-not-in-g1", "xi^4 is not in G1", "a", !g1.contains(power(xi, 4)));
  b.trivial_meet("g1-g2-meet", "G1 and G2 meet trivially", g1, g2, "a");
  b.pair("pair-a", "(G1, G2) satisfies the two-point criterion", g1, g2, "a");

  b.order("sigma'-order", "sigma'", 2, "b");
  b.order("tau'-order", "tau'", 6, "b");
  b.similar("dihedral-relation", "A_sigma'^-1 A_tau' A_sigma' ~ A_tau'^-1", product({inverse(sp), tp, sp}),
            inverse(tp), "b");
  const auto g3 = generate_closure(p, {sp, tp});
  b.kind("g3-kind", "G3 = <sigma', tau'> is D12", g3, GroupKind::dihedral(12), "b");
  b.transitive("g3-transitive", "G3 is transitive on the 12 points", g3, "b");
  const auto t2 = power(tp, 2), t3 = power(tp, 3);
  b.similar("tau'2-class", "A_tau'^2 ~ [[3,3],[1,6]]", t2, s.mat(3, 3, 1, 6), "b");
  b.add("tau'2-not-in-g1", "tau'^2 is not in G1", "b", !g1.contains(t2));
  b.similar("tau'3-class", "A_tau'^3 ~ [[4,3],[1,7]]", t3, s.mat(4, 3, 1, 7), "b");
  const auto st = compose(sg, ta);
  struct Prod
  {
    std::string id, claim;
    ProjectiveMatrix lhs, rhs;
  };
  const std::vector<Prod> prods{
      {"sigma-tau'3", "A_sigma A_tau'^3 ~ [[6,9],[1,9]]", compose(sg, t3), s.mat(6, 9, 1, 9)},
      {"tau'3-sigma", "A_tau'^3 A_sigma ~ [[2,9],[1,5]]", compose(t3, sg), s.mat(2, 9, 1, 5)},
      {"tau-tau'3", "A_tau A_tau'^3 ~ [[1,1],[1,2]]", compose(ta, t3), s.mat(1, 1, 1, 2)},
      {"tau'3-tau", "A_tau'^3 A_tau ~ [[9,1],[1,10]]", compose(t3, ta), s.mat(9, 1, 1, 10)},
      {"sigmatau-tau'3", "A_sigma A_tau A_tau'^3 ~ [[2,4],[1,1]]", compose(st, t3), s.mat(2, 4, 1, 1)},
      {"tau'3-sigmatau", "A_tau'^3 A_sigma A_tau ~ [[10,4],[1,9]]", compose(t3, st), s.mat(10, 4, 1, 9)},
  };
  for (const auto& x : prods)
    b.similar(x.id, x.claim, x.lhs, x.rhs, "b");
  b.add("sigma-tau'3-differ", "A_sigma A_tau'^3 and A_tau'^3 A_sigma differ", "b",
        compose(sg, t3) != compose(t3, sg));
  b.add("tau-tau'3-differ", "A_tau A_tau'^3 and A_tau'^3 A_tau differ", "b", compose(ta, t3) != compose(t3, ta));
  b.add("sigmatau-tau'3-differ", "A_sigma A_tau A_tau'^3 and A_tau'^3 A_sigma A_tau differ", "b",
        compose(st, t3) != compose(t3, st));
  b.trivial_meet("g1-g3-meet", "G1 and G3 meet trivially", g1, g3, "b");
  b.pair("pair-b", "(G1, G3) satisfies the two-point criterion", g1, g3, "b");

  const auto g4 = conjugate(g1, s["iota"]);
  b.similar("iota-matrix", "A_iota = diag(alpha, 1)", s["iota"], s.mat(2, 0, 0, 1), "c");
  list_item(b, "g4-order2-list", "the printed three matrices are exactly the order-2 elements of G4",
            s.lists.at("g4-order2"), g4, 2, "c");
  list_item(b, "g4-order3-list", "the printed eight matrices are exactly the order-3 elements of G4",
            s.lists.at("g4-order3"), g4, 3, "c");
  b.add("g4-order3-count", "G4 has exactly eight elements of order 3", "c", of_order(g4, 3).size() == 8);
  b.kind("g4-kind", "G4 is A4", g4, GroupKind::alt4(), "c");
  b.trivial_meet("g1-g4-meet", "G1 and G4 meet trivially", g1, g4, "c");
  b.pair("pair-c", "(G1, G4) satisfies the two-point criterion", g1, g4, "c");
}

inline void verify23(const SectionData& s, ReportBuilder& b)
{
  const auto &sg = s["sigma"], &ta = s["tau"], &et = s["eta"], &mu = s["mu"], &xi = s["xi"];
  const auto &sp = s["sigma'"], &tp = s["tau'"], &io = s["iota"];
  const auto p = s.p;

  b.add("alpha", "alpha = 5 is the least primitive element mod 23", "abc", s.alpha.value() == 5,
        "alpha = " + std::to_string(s.alpha.value()));
  b.order("sigma-order", "sigma", 2, "abc");
  b.order("mu-order", "mu", 2, "abc");
  b.order("tau-order", "tau", 3, "abc");
  b.order("eta-order", "eta", 4, "abc");
  b.similar("mu-eta-squared", "A_mu ~ A_eta^2", mu, compose(et, et), "abc");
  b.similar("sigma-mu-commute", "A_sigma A_mu ~ A_mu A_sigma", compose(sg, mu), compose(mu, sg), "abc");
  b.similar("tau-conj-sigma", "A_tau^-1 A_sigma A_tau ~ A_mu", product({inverse(ta), sg, ta}), mu, "abc");
  b.similar("tau-conj-mu", "A_tau^-1 A_mu A_tau ~ A_sigma A_mu", product({inverse(ta), mu, ta}),
            compose(sg, mu), "abc");
  b.similar("eta-conj-sigma", "A_eta^-1 A_sigma A_eta ~ A_sigma A_mu", product({inverse(et), sg, et}),
            compose(sg, mu), "abc");
  b.similar("eta-conj-mu", "A_eta^-1 A_mu A_eta ~ A_mu", product({inverse(et), mu, et}), mu, "abc");
  b.similar("eta-conj-tau", "A_eta^-1 A_tau A_eta ~ A_sigma A_mu A_tau^2", product({inverse(et), ta, et}),
            product({sg, mu, ta, ta}), "abc");
  b.similar("eta-conj-tau2", "A_eta^-1 A_tau^2 A_eta ~ A_mu A_tau", product({inverse(et), ta, ta, et}),
            compose(mu, ta), "abc");
  b.kind("a4-subgroup", "<sigma, mu, tau> is A4", generate_closure(p, {sg, mu, ta}), GroupKind::alt4(), "abc");
  const auto g1 = generate_closure(p, named(s, s.g1_names));
  b.kind("g1-kind", "G1 = <sigma, tau, eta, mu> is S4", g1, GroupKind::sym4(), "abc");
  b.transitive("g1-transitive", "G1 is transitive on the 24 points", g1, "abc");

  std::optional<Partition> o;
  try {
    o.emplace(p, s.o_blocks);
  } catch (const InvalidPartition& e) {
    b.add("o-partition", "O1..O4 partition the 24 points", "abc", false, e.what());
  }
  if (o) {
    bool sizes = std::all_of(s.o_blocks.begin(), s.o_blocks.end(), [](const auto& v) { return v.size() == 6; });
    b.add("o-partition", "O1..O4 partition the 24 points into blocks of six", "abc", sizes);
    struct BlockClaim
    {
      std::string name;
      std::vector<std::size_t> perm;
      std::string text;
    };
    const std::vector<BlockClaim> claims{
        {"sigma", {1, 0, 3, 2}, "sigma swaps O1<->O2 and O3<->O4"},
        {"tau", {0, 2, 3, 1}, "tau fixes O1 and cycles O2->O3->O4->O2"},
        {"eta", {1, 2, 3, 0}, "eta cycles O1->O2->O3->O4->O1"},
    };
    for (const auto& c : claims) {
      std::string detail;
      bool ok = false;
      try {
        ok = block_action(s[c.name], *o) == c.perm;
      } catch (const NotBlockPreserving& e) {
        detail = e.what();
      }
      b.add(c.name + "-on-o", c.text, "abc", ok, detail);
    }
    b.add("g1-faithful-on-o", "G1 acts faithfully on {O1..O4}", "abc", is_faithful_on_blocks(g1, *o));
  }

  b.order("xi-order", "xi", 24, "a");
  const auto g2 = generate_closure(p, {xi});
  b.kind("g2-kind", "G2 = <xi> is cyclic of order 24", g2, GroupKind::cyclic(24), "a");
  b.transitive("g2-transitive", "G2 is transitive on the 24 points", g2, "a");
  const auto x12 = power(xi, 12), x8 = power(xi, 8);
  b.similar("xi12-class", "A_xi^12 ~ [[-1,-3],[-3,1]]", x12, s.mat(-1, -3, -3, 1), "a");
  b.similar("xi8-class", "A_xi^8 ~ [[13,2],[2,11]]", x8, s.mat(13, 2, 2, 11), "a");
  b.point("xi12-at-infinity", "xi^12 (0:1) = (1:a^17)", apply(s.inf(), x12), s.pt(17), "a");
  b.point("xi8-at-infinity", "xi^8 (0:1) = (1:a^7)", apply(s.inf(), x8), s.pt(7), "a");
  b.point("xi12-at-a", "xi^12 (1:a) = (1:a^5)", apply(s.pt(1), x12), s.pt(5), "a");
  b.point("xi8-at-a3", "xi^8 (1:a^3) = (1:a^16)", apply(s.pt(3), x8), s.pt(16), "a");
  if (o) {
    // Two points of one block sent to different blocks: the element cannot lie in G1.
    auto splits = [&](const ProjectiveMatrix& g, const ProjectivePoint& u, const ProjectivePoint& v) {
      return o->block_of(u) == o->block_of(v) && o->block_of(apply(u, g)) != o->block_of(apply(v, g));
    };
    b.add("xi12-splits-o1", "xi^12 sends (0:1) and (1:a) of O1 into different blocks", "a",
          splits(x12, s.inf(), s.pt(1)),
          "images " + b.name(apply(s.inf(), x12)) + ", " + b.name(apply(s.pt(1), x12)));
    b.add("xi8-splits-o1", "xi^8 sends (0:1) and (1:a^3) of O1 into different blocks", "a",
          splits(x8, s.inf(), s.pt(3)));
  }
  b.add("xi12-not-in-g1", "xi^12 is not in G1", "a", !g1.contains(x12));
  b.add("xi8-not-in-g1", "xi^8 is not in G1", "a", !g1.contains(x8));
  b.trivial_meet("g1-g2-meet", "G1 and G2 meet trivially", g1, g2, "a");
  b.pair("pair-a", "(G1, G2) satisfies the two-point criterion", g1, g2, "a");

  b.order("sigma'-order", "sigma'", 2, "b");
  b.order("tau'-order", "tau'", 12, "b");
  b.similar("dihedral-relation", "A_sigma'^-1 A_tau' A_sigma' ~ A_tau'^-1", product({inverse(sp), tp, sp}),
            inverse(tp), "b");
  const auto g3 = generate_closure(p, {sp, tp});
  b.kind("g3-kind", "G3 = <sigma', tau'> is D24", g3, GroupKind::dihedral(24), "b");
  b.transitive("g3-transitive", "G3 is transitive on the 24 points", g3, "b");
  std::optional<Partition> t;
  try {
    t.emplace(p, s.t_blocks);
    bool sizes = s.t_blocks[0].size() == 12 && s.t_blocks[1].size() == 12;
    b.add("t-partition", "T1, T2 partition the 24 points into blocks of twelve", "b", sizes);
  } catch (const InvalidPartition& e) {
    b.add("t-partition", "T1, T2 partition the 24 points into blocks of twelve", "b", false, e.what());
  }
  if (t) {
    auto perm = [&](const ProjectiveMatrix& g) {
      try {
        return block_action(g, *t);
      } catch (const NotBlockPreserving&) {
        return std::vector<std::size_t>{};
      }
    };
    b.add("sigma'-on-t", "sigma' swaps T1 and T2", "b", perm(sp) == std::vector<std::size_t>{1, 0});
    b.add("tau'-on-t", "tau' fixes T1 and T2", "b", perm(tp) == std::vector<std::size_t>{0, 1});
  }
  if (o && t) {
    const auto& T = s.t_blocks;
    const auto& O = s.o_blocks;
    // Printed cells O_i cap T_j as exponent lists; -1 marks (0:1), -2 marks (1:0).
    const std::vector<std::vector<std::vector<std::int64_t>>> printed{
        {{-1, 3, 18}, {1, 6, 7}},
        {{9}, {-2, 8, 12, 14, 19}},
        {{0, 4, 17, 21}, {2, 10}},
        {{5, 20}, {11, 13, 15, 16}},
    };
    auto decode = [&](const std::vector<std::int64_t>& ks) {
      std::vector<ProjectivePoint> r;
      for (auto k : ks)
        r.push_back(k == -1 ? s.inf() : k == -2 ? s.origin() : s.pt(k));
      return r;
    };
    int singletons = 0;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        const auto cell = meet(as_set(O[i]), as_set(T[j]));
        const auto want = decode(printed[i][j]);
        if (cell.size() == 1)
          ++singletons;
        const std::string tag = "O" + std::to_string(i + 1) + "-T" + std::to_string(j + 1);
        const std::string cap = "O" + std::to_string(i + 1) + " cap T" + std::to_string(j + 1);
        b.add(tag + "-cardinality", "|" + cap + "| = " + std::to_string(want.size()), "b",
              cell.size() == want.size(), "actual " + std::to_string(cell.size()));
        b.add(tag + "-points", cap + " = " + b.names(want), "b", as_set(cell) == as_set(want),
              "actual " + b.names(cell));
      }
    const auto o2t1 = meet(as_set(O[1]), as_set(T[0]));
    b.add("o2-t1-point", "O2 cap T1 = {(1:a^9)}", "b", o2t1 == std::vector<ProjectivePoint>{s.pt(9)},
          "actual " + b.names(o2t1));
    b.add("o2-t1-unique-singleton", "O2 cap T1 is the only one-point cell", "b",
          singletons == 1 && o2t1.size() == 1);
  }
  b.trivial_meet("g1-g3-meet", "G1 and G3 meet trivially", g1, g3, "b");
  b.pair("pair-b", "(G1, G3) satisfies the two-point criterion", g1, g3, "b");

  b.similar("iota-matrix", "A_iota = diag(a^7, 1)", io, s.mat(s.a(7), s.n(0), s.n(0), s.n(1)), "c");
  const auto g4 = conjugate(g1, io);
  b.kind("g4-kind", "G4 is S4", g4, GroupKind::sym4(), "c");
  if (o) {
    const auto& O = s.o_blocks;
    const std::vector<std::vector<ProjectivePoint>> printed{
        {s.inf(), s.pt(16), s.pt(18), s.pt(21), s.pt(0), s.pt(11)},
        {s.origin(), s.pt(1), s.pt(2), s.pt(5), s.pt(7), s.pt(12)},
        s.pts({15, 17, 19, 3, 10, 14}),
        s.pts({20, 4, 6, 8, 9, 13}),
    };
    std::vector<std::set<ProjectivePoint>> img;
    for (std::size_t j = 0; j < 4; ++j) {
      img.push_back(image(O[j], io));
      const auto id = "iota-o" + std::to_string(j + 1);
      b.add(id, "iota(O" + std::to_string(j + 1) + ") is as printed", "c", img[j] == as_set(printed[j]),
            "actual " + b.names({img[j].begin(), img[j].end()}));
    }
    int empties = 0;
    bool o2_io1_empty = false;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        if (meet(as_set(O[i]), img[j]).empty()) {
          ++empties;
          o2_io1_empty = o2_io1_empty || (i == 1 && j == 0);
        }
    b.add("o2-iota-o1-empty", "O2 cap iota(O1) is empty and is the only empty cell", "c",
          o2_io1_empty && empties == 1, std::to_string(empties) + " empty cells");
    std::set<ProjectivePoint> o134 = as_set(O[0]);
    o134.insert(O[2].begin(), O[2].end());
    o134.insert(O[3].begin(), O[3].end());
    b.add("iota-o1-in-o134", "iota(O1) lies in O1 cup O3 cup O4", "c",
          std::includes(o134.begin(), o134.end(), img[0].begin(), img[0].end()));

    // Matrix identities used to rule out small elements of G1 cap G4.
    const auto g0 = product({et, sg, et, et});
    const std::vector<std::pair<std::string, bool>> ids{
        {"A_sigma ~ [[0,1],[17,0]]", sg == s.mat(0, 1, 17, 0)},
        {"A_tau^2 ~ [[-4,-7],[5,2]]", compose(ta, ta) == s.mat(-4, -7, 5, 2)},
        {"A_tau ~ [[-5,-6],[1,10]]", ta == s.mat(-5, -6, 1, 10)},
        {"A_eta ~ [[1,9],[8,-4]]", et == s.mat(1, 9, 8, -4)},
        {"A_eta^2 ~ [[4,-4],[-1,-4]]", compose(et, et) == s.mat(4, -4, -1, -4)},
    };
    for (std::size_t k = 0; k < ids.size(); ++k)
      b.add("printed-form-" + std::to_string(k + 1), ids[k].first, "c", ids[k].second);

    struct Gamma
    {
      std::string id, text;
      ProjectiveMatrix m, printed;
      std::uint64_t order;
      ProjectivePoint u, u_img, v, v_img;
      std::size_t u_blk, v_blk;
    };
    const std::vector<Gamma> gammas{
        {"gamma-3", "A_sigma A_tau^2 A_sigma ~ [[11,5],[1,1]]", product({sg, ta, ta, sg}), s.mat(11, 5, 1, 1), 3,
         s.origin(), s.pt(14), s.pt(2), s.pt(5), 2, 1},
        {"gamma-o1", "A_tau A_eta A_sigma A_tau^2 ~ [[-10,1],[6,10]]", product({ta, et, sg, ta, ta}),
         s.mat(-10, 1, 6, 10), 2, s.inf(), s.pt(7), s.pt(0), s.pt(16), 1, 0},
        {"gamma-o4", "A_eta A_sigma A_eta^2 ~ [[-10,5],[-4,10]]", g0, s.mat(-10, 5, -4, 10), 2, s.inf(),
         s.pt(10), s.pt(0), s.pt(7), 2, 1},
        {"gamma-o3", "A_tau^2 A_gamma0 A_tau ~ [[7,3],[-10,-7]]", product({ta, ta, g0, ta}), s.mat(7, 3, -10, -7),
         2, s.inf(), s.pt(16), s.pt(0), s.pt(10), 0, 2},
    };
    for (const auto& gm : gammas) {
      b.similar(gm.id, gm.text, gm.m, gm.printed, "c");
      b.add(gm.id + "-order", gm.id + " has order " + std::to_string(gm.order), "c",
            element_order(gm.m) == gm.order);
      b.add(gm.id + "-in-g1", gm.id + " lies in G1", "c", g1.contains(gm.m));
      const auto ui = apply(gm.u, gm.m), vi = apply(gm.v, gm.m);
      b.point(gm.id + "-eval-1", gm.id + " " + b.name(gm.u) + " = " + b.name(gm.u_img), ui, gm.u_img, "c");
      b.point(gm.id + "-eval-2", gm.id + " " + b.name(gm.v) + " = " + b.name(gm.v_img), vi, gm.v_img, "c");
      b.add(gm.id + "-blocks",
            gm.id + " images lie in iota(O" + std::to_string(gm.u_blk + 1) + ") and iota(O" +
                std::to_string(gm.v_blk + 1) + ")",
            "c", img[gm.u_blk].count(ui) == 1 && img[gm.v_blk].count(vi) == 1);
    }
  }
  b.trivial_meet("g1-g4-meet", "G1 and G4 meet trivially", g1, g4, "c");
  b.pair("pair-c", "(G1, G4) satisfies the two-point criterion", g1, g4, "c");
}

inline void verify59(const SectionData& s, ReportBuilder& b)
{
  const auto &xi = s["xi"], &sp = s["sigma'"], &tp = s["tau'"];
  const auto p = s.p;
  b.add("alpha", "alpha = 2 is the least primitive element mod 59", "abc", s.alpha.value() == 2,
        "alpha = " + std::to_string(s.alpha.value()));
  b.order("sigma-order", "sigma", 2, "abc");
  b.order("tau-order", "tau", 3, "abc");
  const auto g1 = generate_closure(p, named(s, s.g1_names));
  b.kind("g1-kind", "G1 = <sigma, tau> is A5", g1, GroupKind::alt5(), "abc");
  b.transitive("g1-transitive", "G1 is transitive on the 60 points", g1, "abc");

  b.order("xi-order", "xi", 60, "a");
  const auto g2 = generate_closure(p, {xi});
  b.kind("g2-kind", "G2 = <xi> is cyclic of order 60", g2, GroupKind::cyclic(60), "a");
  b.transitive("g2-transitive", "G2 is transitive on the 60 points", g2, "a");
  b.trivial_meet("g1-g2-meet", "G1 and G2 meet trivially", g1, g2, "a");
  b.pair("pair-a", "(G1, G2) satisfies the two-point criterion", g1, g2, "a");

  b.order("sigma'-order", "sigma'", 2, "b");
  b.order("tau'-order", "tau'", 30, "b");
  b.similar("dihedral-relation", "A_sigma'^-1 A_tau' A_sigma' ~ A_tau'^-1", product({inverse(sp), tp, sp}),
            inverse(tp), "b");
  const auto g3 = generate_closure(p, {sp, tp});
  b.kind("g3-kind", "G3 = <sigma', tau'> is D60", g3, GroupKind::dihedral(60), "b");
  b.transitive("g3-transitive", "G3 is transitive on the 60 points", g3, "b");
  b.trivial_meet("g1-g3-meet", "G1 and G3 meet trivially", g1, g3, "b");
  b.pair("pair-b", "(G1, G3) satisfies the two-point criterion", g1, g3, "b");

  const auto g4 = conjugate(g1, s["iota"]);
  b.kind("g4-kind", "G4 is A5", g4, GroupKind::alt5(), "c");
  b.trivial_meet("g1-g4-meet", "G1 and G4 meet trivially", g1, g4, "c");
  b.pair("pair-c", "(G1, G4) satisfies the two-point criterion", g1, g4, "c");
}

} // namespace detail

/// Re-checks every printed claim for the worked example at p. With `only`,
/// keeps the items bearing on that pair label.
inline Report verify_section(std::int64_t p, std::optional<char> only = std::nullopt)
{
  if (only && *only != 'a' && *only != 'b' && *only != 'c')
    throw UnknownCase(std::string("no case '") + *only + "'");
  const auto s = detail::section(p);
  detail::ReportBuilder b(s, only);
  if (p == 11)
    detail::verify11(s, b);
  else if (p == 23)
    detail::verify23(s, b);
  else
    detail::verify59(s, b);
  return b.take();
}

} // namespace galois

#endif
