#include "orbichow/bg_ring.hpp"

#include "orbichow/errors.hpp"

#include <numeric>
#include <utility>

namespace orbichow {

BgRing::BgRing(std::vector<std::uint64_t> invariant_factors) : factors_(std::move(invariant_factors)) {
  for (auto n : factors_)
    if (n == 0) throw InputError("BgRing invariant factors must be >= 1");
}

void BgRing::check_monomial(const Monomial& m) const {
  if (m.size() != factors_.size())
    throw InputError("monomial length does not match the number of ring generators");
}

std::uint64_t BgRing::monomial_modulus(const Monomial& m) const {
  std::uint64_t g = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] > 0) g = std::gcd(g, factors_[i]);
  return g;
}

void BgRing::normalize(EquivariantClass& a) const {
  for (auto it = a.terms.begin(); it != a.terms.end();) {
    check_monomial(it->first);
    const std::uint64_t mod = monomial_modulus(it->first);
    if (mod != 0) {
      it->second %= mod;
      if (it->second < 0) it->second += mod;
    }
    if (it->second == 0)
      it = a.terms.erase(it);
    else
      ++it;
  }
}

EquivariantClass BgRing::constant(Int value) const {
  EquivariantClass c;
  if (value != 0) c.terms.emplace(Monomial(factors_.size(), 0u), std::move(value));
  return c;
}

EquivariantClass BgRing::generator(std::size_t i) const {
  if (i >= factors_.size()) throw InputError("generator index out of range");
  Monomial m(factors_.size(), 0u);
  m[i] = 1;
  EquivariantClass c;
  c.terms.emplace(std::move(m), 1);
  normalize(c);
  return c;
}

EquivariantClass BgRing::c1(const std::vector<std::int64_t>& character) const {
  if (character.size() != factors_.size())
    throw InputError("character length does not match the number of ring generators");
  EquivariantClass c;
  for (std::size_t i = 0; i < character.size(); ++i) {
    const auto coeff = mod_floor(character[i], static_cast<std::int64_t>(factors_[i]));
    if (coeff == 0) continue;
    Monomial m(factors_.size(), 0u);
    m[i] = 1;
    c.terms.emplace(std::move(m), coeff);
  }
  normalize(c);
  return c;
}

EquivariantClass BgRing::add(const EquivariantClass& a, const EquivariantClass& b) const {
  EquivariantClass out = a;
  for (const auto& [mono, coeff] : b.terms) out.terms[mono] += coeff;
  normalize(out);
  return out;
}

EquivariantClass BgRing::negate(const EquivariantClass& a) const {
  EquivariantClass out;
  for (const auto& [mono, coeff] : a.terms) out.terms.emplace(mono, -coeff);
  normalize(out);
  return out;
}

EquivariantClass BgRing::sub(const EquivariantClass& a, const EquivariantClass& b) const {
  return add(a, negate(b));
}

EquivariantClass BgRing::mul(const EquivariantClass& a, const EquivariantClass& b) const {
  for (const auto& [mb, cb] : b.terms) check_monomial(mb);
  EquivariantClass out;
  for (const auto& [ma, ca] : a.terms) {
    check_monomial(ma);
    for (const auto& [mb, cb] : b.terms) {
      Monomial m(ma);
      for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
      out.terms[std::move(m)] += ca * cb;
    }
  }
  normalize(out);
  return out;
}

EquivariantClass BgRing::pow(const EquivariantClass& a, std::uint64_t exponent) const {
  EquivariantClass result = one();
  for (std::uint64_t i = 0; i < exponent; ++i) result = mul(result, a);
  return result;
}

EquivariantClass BgRing::scale(const Int& c, const EquivariantClass& a) const {
  EquivariantClass out;
  for (const auto& [mono, coeff] : a.terms) out.terms.emplace(mono, c * coeff);
  normalize(out);
  return out;
}

Int BgRing::rational_part(const EquivariantClass& a) const {
  const Monomial constant(factors_.size(), 0u);
  auto it = a.terms.find(constant);
  return it == a.terms.end() ? Int(0) : it->second;
}

std::map<std::uint64_t, EquivariantClass> degree_parts(const EquivariantClass& a) {
  std::map<std::uint64_t, EquivariantClass> parts;
  for (const auto& [mono, coeff] : a.terms) parts[monomial_degree(mono)].terms.emplace(mono, coeff);
  return parts;
}

}  // namespace orbichow
