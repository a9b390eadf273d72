#pragma once

// The integral Chow ring of BG for finite abelian G = Z/n1 x .. x Z/nm,
// presented as Z[t1..tm] / (n1 t1, .., nm tm) with each t_i in degree 1.
// The coefficient of a monomial prod t_i^{a_i} with nonempty support is
// well defined modulo gcd{n_i : a_i > 0}; the constant coefficient is a
// plain integer. Classes are kept in canonical form: no zero terms,
// torsion coefficients reduced into [0, modulus).
//
// With zero generators this degenerates to Z, which is the coefficient
// domain used for BG of a non-abelian group.

#include "orbichow/numeric.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace orbichow {

/// Exponent vector of a monomial in t1..tm (always length m).
using Monomial = std::vector<std::uint32_t>;

inline std::uint64_t monomial_degree(const Monomial& m) {
  std::uint64_t d = 0;
  for (auto e : m) d += e;
  return d;
}

/// Graded order: total degree first, then t1 before t2 within a degree.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const auto da = monomial_degree(a), db = monomial_degree(b);
    if (da != db) return da < db;
    return a > b;
  }
};

struct EquivariantClass {
  std::map<Monomial, Int, MonomialOrder> terms;

  bool operator==(const EquivariantClass&) const = default;
  bool empty() const { return terms.empty(); }
};

class BgRing {
 public:
  explicit BgRing(std::vector<std::uint64_t> invariant_factors);

  /// Z itself (zero generators); coefficients for non-abelian BG.
  static BgRing integers() { return BgRing({}); }

  std::size_t generator_count() const { return factors_.size(); }
  const std::vector<std::uint64_t>& invariant_factors() const { return factors_; }

  /// gcd{n_i : a_i > 0}; 0 for the constant monomial (meaning plain Z).
  std::uint64_t monomial_modulus(const Monomial& m) const;

  EquivariantClass zero() const { return {}; }
  EquivariantClass constant(Int value) const;
  EquivariantClass one() const { return constant(1); }
  EquivariantClass generator(std::size_t i) const;

  /// First Chern class of the character with the given exponent vector:
  /// sum (character[i] mod n_i) t_i. Additive in characters.
  EquivariantClass c1(const std::vector<std::int64_t>& character) const;

  EquivariantClass add(const EquivariantClass& a, const EquivariantClass& b) const;
  EquivariantClass negate(const EquivariantClass& a) const;
  EquivariantClass sub(const EquivariantClass& a, const EquivariantClass& b) const;
  EquivariantClass mul(const EquivariantClass& a, const EquivariantClass& b) const;
  EquivariantClass pow(const EquivariantClass& a, std::uint64_t exponent) const;
  EquivariantClass scale(const Int& c, const EquivariantClass& a) const;

  /// Reduces every coefficient into canonical form and drops zeros.
  void normalize(EquivariantClass& a) const;

  bool is_zero(const EquivariantClass& a) const { return a.terms.empty(); }
  bool equal(const EquivariantClass& a, const EquivariantClass& b) const { return a == b; }

  /// Image after tensoring with Q: all torsion monomials die, so only the
  /// constant term survives. Positive-degree classes map to 0.
  Int rational_part(const EquivariantClass& a) const;

 private:
  void check_monomial(const Monomial& m) const;

  std::vector<std::uint64_t> factors_;
};

/// Splits a canonical class by total degree.
std::map<std::uint64_t, EquivariantClass> degree_parts(const EquivariantClass& a);

}  // namespace orbichow
