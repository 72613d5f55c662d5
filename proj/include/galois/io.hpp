#ifndef GALOIS_IO_HPP
#define GALOIS_IO_HPP

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "criterion.hpp"
#include "errors.hpp"
#include "paper_suite.hpp"
#include "projective.hpp"
#include "quotient.hpp"

namespace galois {

using json = nlohmann::json;

inline json to_json(const ProjectiveMatrix& m)
{
  return json::array({json::array({m.a().value(), m.b().value()}), json::array({m.c().value(), m.d().value()})});
}

inline json to_json(const ProjectivePoint& q) { return json::array({q.s().value(), q.t().value()}); }

inline json to_json(const Polynomial& f)
{
  json out = json::array();
  for (const auto& c : f.coefficients())
    out.push_back(c.value());
  return out;
}

inline json to_json(const PairCertificate& c)
{
  json g1 = json::array(), g2 = json::array(), failures = json::array();
  for (const auto& m : c.g1)
    g1.push_back(to_json(m));
  for (const auto& m : c.g2)
    g2.push_back(to_json(m));
  for (const auto& f : c.failures)
    failures.push_back(f);
  return json{{"p", c.p.value()},
              {"g1", g1},
              {"g2", g2},
              {"kind1", c.kind1.name()},
              {"kind2", c.kind2.name()},
              {"degree", c.degree},
              {"base_point", to_json(c.base_point)},
              {"intersection_size", c.intersection_size},
              {"orbit_equal", c.orbit_equal},
              {"orbit_length", c.orbit_length()},
              {"verdict", c.passed ? "pass" : "fail"},
              {"failures", failures}};
}

inline json to_json(const CurveParametrization& c)
{
  return json{{"p", c.a.field().value()},
              {"degree", c.degree},
              {"A", to_json(c.a)},
              {"B", to_json(c.b)},
              {"D", to_json(c.d)}};
}

inline json to_json(const Report& r)
{
  json items = json::array();
  for (const auto& i : r.items)
    items.push_back(json{{"id", i.id}, {"claim", i.claim}, {"pass", i.pass}});
  return json{{"p", r.p}, {"items", items}, {"pass", r.passed()}};
}

/// Parsed pair document. base_point defaults to (0:1).
struct PairDocument
{
  PrimeModulus p{2};
  std::vector<ProjectiveMatrix> g1;
  std::vector<ProjectiveMatrix> g2;
  ProjectivePoint base_point = ProjectivePoint::infinity(PrimeModulus{2});
};

namespace detail {

inline std::int64_t integer_at(const json& v, const std::string& where)
{
  if (!v.is_number_integer())
    throw InputError(where + ": expected an integer");
  return v.get<std::int64_t>();
}

inline ProjectiveMatrix matrix_at(const json& v, PrimeModulus p, const std::string& where)
{
  if (!v.is_array() || v.size() != 2 || !v[0].is_array() || !v[1].is_array() || v[0].size() != 2 ||
      v[1].size() != 2)
    throw InputError(where + ": expected a 2x2 array [[a,b],[c,d]]");
  RawMatrix raw{integer_at(v[0][0], where + "[0][0]"), integer_at(v[0][1], where + "[0][1]"),
                integer_at(v[1][0], where + "[1][0]"), integer_at(v[1][1], where + "[1][1]")};
  try {
    return {raw, p};
  } catch (const SingularMatrix&) {
    throw InputError(where + ": matrix is singular mod " + std::to_string(p.value()));
  }
}

// Accepts {"generators": [...]} as well as a bare list, the certificate form.
inline std::vector<ProjectiveMatrix> generators_at(const json& doc, const std::string& key, PrimeModulus p)
{
  if (!doc.contains(key))
    throw InputError("missing field \"" + key + "\"");
  const json* list = &doc[key];
  std::string where = key;
  if (list->is_object()) {
    if (!list->contains("generators"))
      throw InputError(key + ": missing field \"generators\"");
    list = &(*list)["generators"];
    where += ".generators";
  }
  if (!list->is_array() || list->empty())
    throw InputError(where + ": expected a nonempty list of matrices");
  std::vector<ProjectiveMatrix> out;
  for (std::size_t i = 0; i < list->size(); ++i)
    out.push_back(matrix_at((*list)[i], p, where + "[" + std::to_string(i) + "]"));
  return out;
}

} // namespace detail

/// Pair document or certificate JSON. Entries may be negative; they are
/// reduced mod p. Errors carry the offending field or the parser position.
inline PairDocument parse_pair_document(const std::string& text)
{
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object())
    throw InputError("top level must be an object");
  if (!doc.contains("p"))
    throw InputError("missing field \"p\"");
  const auto pv = detail::integer_at(doc["p"], "p");
  std::optional<PrimeModulus> p;
  try {
    p.emplace(pv);
  } catch (const NotPrime& e) {
    throw InputError(std::string("p: ") + e.what());
  }
  PairDocument out{*p, detail::generators_at(doc, "g1", *p), detail::generators_at(doc, "g2", *p),
                   ProjectivePoint::infinity(*p)};
  if (doc.contains("base_point")) {
    const auto& b = doc["base_point"];
    if (!b.is_array() || b.size() != 2)
      throw InputError("base_point: expected [s, t]");
    try {
      out.base_point = ProjectivePoint(detail::integer_at(b[0], "base_point[0]"),
                                       detail::integer_at(b[1], "base_point[1]"), *p);
    } catch (const SingularMatrix&) {
      throw InputError("base_point: (0:0) is not a point");
    }
  }
  return out;
}

inline std::string read_file(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Reads a curve JSON back into a parametrization.
inline CurveParametrization parse_curve(const std::string& text)
{
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  for (const char* k : {"p", "degree", "A", "B", "D"})
    if (!doc.is_object() || !doc.contains(k))
      throw InputError(std::string("missing field \"") + k + "\"");
  const PrimeModulus p(detail::integer_at(doc["p"], "p"));
  auto poly = [&](const char* k) {
    const auto& arr = doc[k];
    if (!arr.is_array())
      throw InputError(std::string(k) + ": expected a coefficient list");
    std::vector<Fp> c;
    for (std::size_t i = 0; i < arr.size(); ++i)
      c.emplace_back(detail::integer_at(arr[i], std::string(k) + "[" + std::to_string(i) + "]"), p);
    return Polynomial(p, std::move(c));
  };
  return {poly("A"), poly("B"), poly("D"),
          static_cast<std::uint64_t>(detail::integer_at(doc["degree"], "degree"))};
}

} // namespace galois

#endif
