#include "orbichow/twisted_rr.hpp"

#include "orbichow/errors.hpp"

namespace orbichow {

Int pushforward_degree(const TwistedLineBundle& bundle) {
  Rational total = bundle.orb_degree;
  for (const auto& m : bundle.monodromies) {
    if (m.r < 1 || m.k < 0 || m.k >= m.r)
      throw InputError("monodromy pair needs 0 <= k < r");
    total -= m.fraction();
  }
  if (!is_integer(total))
    throw NonIntegralDegree("coarse pushforward degree " + to_string(total) +
                            " is not an integer; monodromy data is inconsistent");
  return rational_num(total);
}

CoarseCohomology p1_cohomology(const Int& degree) {
  CoarseCohomology h{degree + 1, -degree - 1};
  if (h.h0 < 0) h.h0 = 0;
  if (h.h1 < 0) h.h1 = 0;
  return h;
}

std::vector<int> obstruction_degrees(const LinearAction& action, GroupElement g1, GroupElement g2) {
  if (!action.has_characters())
    throw InputError("obstruction data needs an abelian diagonal action");
  const auto& group = action.group();
  const GroupElement g3 = group.inverse(group.mul(g1, g2));
  const auto e1 = action.eigen_exponents(g1);
  const auto e2 = action.eigen_exponents(g2);
  const auto e3 = action.eigen_exponents(g3);

  std::vector<int> degrees;
  degrees.reserve(action.dim());
  for (std::size_t j = 0; j < action.dim(); ++j) {
    Int d;
    try {
      d = pushforward_degree({0, {e1[j], e2[j], e3[j]}});
    } catch (const NonIntegralDegree&) {
      // chi_j(g1) chi_j(g2) chi_j(g3) = chi_j(e) forces integrality.
      throw std::logic_error("obstruction_degrees: non-integral coordinate degree (internal)");
    }
    if (d < -2 || d > 0)
      throw std::logic_error("obstruction_degrees: coordinate degree outside {0,-1,-2} (internal)");
    degrees.push_back(static_cast<int>(d));
  }
  return degrees;
}

std::size_t obstruction_rank(const LinearAction& action, GroupElement g1, GroupElement g2) {
  std::size_t rank = 0;
  for (int d : obstruction_degrees(action, g1, g2))
    if (d == -2) ++rank;
  return rank;
}

}  // namespace orbichow
