#ifndef GALOIS_PROJECTIVE_HPP
#define GALOIS_PROJECTIVE_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

#include "prime_field.hpp"

namespace galois {

/// A point (s:t) of P^1(F_p), stored canonically: (1:t) or (0:1).
///
/// The affine coordinate of (1:t) is t; (0:1) is the point at infinity.
class ProjectivePoint
{
public:
  ProjectivePoint(Fp s, Fp t) : s_(s), t_(t)
  {
    if (s.modulus() != t.modulus())
      throw ModulusMismatch("point coordinates over different fields");
    if (s.is_zero() && t.is_zero())
      throw SingularMatrix("(0:0) is not a projective point");
    if (s.is_zero()) {
      t_ = t.modulus().one();
    } else {
      t_ = t / s;
      s_ = s.modulus().one();
    }
  }

  ProjectivePoint(std::int64_t s, std::int64_t t, PrimeModulus p)
      : ProjectivePoint(Fp(s, p), Fp(t, p))
  {
  }

  static ProjectivePoint infinity(PrimeModulus p) { return {p.zero(), p.one()}; }
  static ProjectivePoint affine(Fp t) { return {t.modulus().one(), t}; }

  Fp s() const noexcept { return s_; }
  Fp t() const noexcept { return t_; }
  PrimeModulus modulus() const noexcept { return s_.modulus(); }
  bool is_infinity() const noexcept { return s_.is_zero(); }

  /// Position in enumerate_points order: (0:1) is 0, (1:t) is t + 1.
  std::uint32_t index() const noexcept { return is_infinity() ? 0 : t_.value() + 1; }

  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
  friend std::strong_ordering operator<=>(const ProjectivePoint& a, const ProjectivePoint& b) noexcept
  {
    return a.index() <=> b.index();
  }

  friend std::ostream& operator<<(std::ostream& os, const ProjectivePoint& q)
  {
    return os << '(' << q.s_ << ':' << q.t_ << ')';
  }

private:
  Fp s_;
  Fp t_;
};

/// A 2x2 matrix over F_p before projective normalization.
struct RawMatrix
{
  std::int64_t a, b, c, d;
};

/// A PGL(2, F_p) class [[a,b],[c,d]] in canonical form: the first nonzero
/// entry in reading order is 1, so A ~ B iff the stored entries agree.
class ProjectiveMatrix
{
public:
  ProjectiveMatrix(Fp a, Fp b, Fp c, Fp d) : e_{a, b, c, d}
  {
    auto m = a.modulus();
    if (b.modulus() != m || c.modulus() != m || d.modulus() != m)
      throw ModulusMismatch("matrix entries over different fields");
    if ((a * d - b * c).is_zero())
      throw SingularMatrix(entries_string(a, b, c, d) + " has determinant 0 mod " +
                           std::to_string(m.value()));
    for (const Fp& x : e_) {
      if (!x.is_zero()) {
        Fp scale = x.inverse();
        for (Fp& y : e_)
          y *= scale;
        break;
      }
    }
  }

  ProjectiveMatrix(RawMatrix m, PrimeModulus p)
      : ProjectiveMatrix(Fp(m.a, p), Fp(m.b, p), Fp(m.c, p), Fp(m.d, p))
  {
  }

  static ProjectiveMatrix identity(PrimeModulus p) { return {p.one(), p.zero(), p.zero(), p.one()}; }

  Fp a() const noexcept { return e_[0]; }
  Fp b() const noexcept { return e_[1]; }
  Fp c() const noexcept { return e_[2]; }
  Fp d() const noexcept { return e_[3]; }
  PrimeModulus modulus() const noexcept { return e_[0].modulus(); }
  const std::array<Fp, 4>& entries() const noexcept { return e_; }

  bool is_identity() const { return *this == identity(modulus()); }

  friend bool operator==(const ProjectiveMatrix&, const ProjectiveMatrix&) = default;
  friend std::strong_ordering operator<=>(const ProjectiveMatrix& x, const ProjectiveMatrix& y) noexcept
  {
    for (std::size_t i = 0; i < 4; ++i) {
      if (auto c = x.e_[i] <=> y.e_[i]; c != 0)
        return c;
    }
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const ProjectiveMatrix& m)
  {
    return os << entries_string(m.a(), m.b(), m.c(), m.d());
  }

  std::string str() const { return entries_string(a(), b(), c(), d()); }

private:
  static std::string entries_string(Fp a, Fp b, Fp c, Fp d)
  {
    auto s = [](Fp x) { return std::to_string(x.value()); };
    return "[[" + s(a) + "," + s(b) + "],[" + s(c) + "," + s(d) + "]]";
  }

  std::array<Fp, 4> e_;
};

inline ProjectiveMatrix normalize(RawMatrix m, PrimeModulus p) { return {m, p}; }

/// Canonical form of the product A*B. Under the row action this is "A first, then B".
inline ProjectiveMatrix compose(const ProjectiveMatrix& x, const ProjectiveMatrix& y)
{
  if (x.modulus() != y.modulus())
    throw ModulusMismatch("compose over different fields");
  return {x.a() * y.a() + x.b() * y.c(), x.a() * y.b() + x.b() * y.d(),
          x.c() * y.a() + x.d() * y.c(), x.c() * y.b() + x.d() * y.d()};
}

/// Adjugate; equal to the inverse up to the determinant scalar.
inline ProjectiveMatrix inverse(const ProjectiveMatrix& m) { return {m.d(), -m.b(), -m.c(), m.a()}; }

inline ProjectiveMatrix power(const ProjectiveMatrix& m, std::int64_t e)
{
  ProjectiveMatrix base = e < 0 ? inverse(m) : m;
  if (e < 0)
    e = -e;
  ProjectiveMatrix acc = ProjectiveMatrix::identity(m.modulus());
  while (e > 0) {
    if (e & 1)
      acc = compose(acc, base);
    base = compose(base, base);
    e >>= 1;
  }
  return acc;
}

/// Row action (s,t) -> (s,t)*A. Consequently apply(apply(Q,A),B) == apply(Q, compose(A,B)).
inline ProjectivePoint apply(const ProjectivePoint& q, const ProjectiveMatrix& m)
{
  if (q.modulus() != m.modulus())
    throw ModulusMismatch("apply over different fields");
  return {q.s() * m.a() + q.t() * m.c(), q.s() * m.b() + q.t() * m.d()};
}

/// Least n >= 1 with A^n ~ I, by iterated composition.
inline std::uint64_t element_order(const ProjectiveMatrix& m)
{
  const auto id = ProjectiveMatrix::identity(m.modulus());
  const std::uint64_t p = m.modulus().value();
  const std::uint64_t bound = p * p * p - p;
  ProjectiveMatrix acc = m;
  std::uint64_t n = 1;
  while (acc != id) {
    acc = compose(acc, m);
    if (++n > bound)
      throw Error("element_order exceeded |PGL(2," + std::to_string(p) + ")|");
  }
  return n;
}

/// (0:1) followed by (1:t) for t = 0..p-1.
inline std::vector<ProjectivePoint> enumerate_points(PrimeModulus p)
{
  std::vector<ProjectivePoint> pts;
  pts.reserve(p.value() + 1);
  pts.push_back(ProjectivePoint::infinity(p));
  for (std::uint32_t t = 0; t < p.value(); ++t)
    pts.push_back(ProjectivePoint::affine(Fp(t, p)));
  return pts;
}

/// Every canonical PGL(2, F_p) class, in lexicographic order of (a, b, c, d).
inline std::vector<ProjectiveMatrix> enumerate_matrices(PrimeModulus p)
{
  std::vector<ProjectiveMatrix> out;
  const std::uint32_t q = p.value();
  auto push = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) {
    Fp fa(a, p), fb(b, p), fc(c, p), fd(d, p);
    if (!(fa * fd - fb * fc).is_zero())
      out.emplace_back(fa, fb, fc, fd);
  };
  // a = 0 block: b = 1 (b = 0 forces det 0).
  for (std::uint32_t c = 0; c < q; ++c)
    for (std::uint32_t d = 0; d < q; ++d)
      push(0, 1, c, d);
  for (std::uint32_t b = 0; b < q; ++b)
    for (std::uint32_t c = 0; c < q; ++c)
      for (std::uint32_t d = 0; d < q; ++d)
        push(1, b, c, d);
  return out;
}

} // namespace galois

template <>
struct std::hash<galois::ProjectivePoint>
{
  std::size_t operator()(const galois::ProjectivePoint& q) const noexcept
  {
    return std::hash<std::uint64_t>{}((std::uint64_t{q.modulus().value()} << 32) | q.index());
  }
};

template <>
struct std::hash<galois::ProjectiveMatrix>
{
  std::size_t operator()(const galois::ProjectiveMatrix& m) const noexcept
  {
    std::uint64_t h = m.modulus().value();
    for (const auto& x : m.entries())
      h = h * 1000003u + x.value();
    return std::hash<std::uint64_t>{}(h);
  }
};

#endif
