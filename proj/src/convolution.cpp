#include "kdual/convolution.hpp"

#include "kdual/errors.hpp"

namespace kdual {

namespace {

// E_{a1,c1} * E_{a2,c2} = sum over c with (c1,c2) in Delta c.
template <typename Pairing>
ProductTable convolution_table(const DgCoalgebra& c, const GradedSpace& a, const ProductTable& products,
                               const Pairing& deg_sign) {
  size_t nc = c.dim(), na = a.dim();
  ProductTable out;
  for (size_t x = 0; x < nc; ++x)
    for (const auto& [t, lam] : c.delta[x]) {
      size_t c1 = t / nc, c2 = t % nc;
      for (const auto& [ab, prod] : products) {
        Scalar s = lam * deg_sign(ab.second, c2, c1);
        auto key = std::make_pair(c1 * na + ab.first, c2 * na + ab.second);
        Vec& cell = out[key];
        for (const auto& [k, v] : prod) add_term(cell, x * na + k, s * v);
        if (cell.empty()) out.erase(key);
      }
    }
  return out;
}

}  // namespace

GradedMap ConvolutionAlgebra::to_map(const Vec& v, int degree) const {
  return from_hom_vector(algebra.field(), coalgebra_space, algebra_space, degree, v);
}

ConvolutionAlgebra convolution_algebra(const DgCoalgebra& c, const DgAlgebra& a) {
  const Field& f = c.field();
  if (!(f == a.field())) throw FieldMismatch("coalgebra and algebra over different fields");
  Complex h = hom_complex(c.cx, a.cx);
  const auto& vc = *c.space();
  const auto& va = *a.space();
  auto sg = [&](size_t a2, size_t c2, size_t c1) {
    return sign(f, static_cast<long long>(va.degree(a2) - vc.degree(c2)) * vc.degree(c1));
  };
  ProductTable mu = convolution_table(c, va, a.mu, sg);
  return {c.space(), a.space(), DgAlgebra(std::move(h), std::move(mu))};
}

GradedMap ConvolutionLie::to_map(const Vec& v, int degree) const {
  return from_hom_vector(lie.field(), coalgebra_space, lie_space, degree, v);
}

ConvolutionLie convolution_lie(const DgCoalgebra& c, const DgLieAlgebra& g) {
  const Field& f = c.field();
  if (!(f == g.field())) throw FieldMismatch("coalgebra and Lie algebra over different fields");
  if (!is_cocommutative(c)) throw PreconditionError("convolution Lie algebra needs a cocommutative coalgebra");
  Complex h = hom_complex(c.cx, g.cx);
  const auto& vc = *c.space();
  const auto& vg = *g.space();
  auto sg = [&](size_t a2, size_t c2, size_t c1) {
    return sign(f, static_cast<long long>(vg.degree(a2) - vc.degree(c2)) * vc.degree(c1));
  };
  ProductTable br = convolution_table(c, vg, g.bracket, sg);
  return {c.space(), g.space(), DgLieAlgebra(std::move(h), std::move(br))};
}

bool is_twisting_cochain(const ConvolutionAlgebra& conv, const GradedMap& tau) {
  if (tau.degree() != -1) throw DegreeError("twisting cochains have degree -1");
  return is_mc_element(conv.algebra, conv.from_map(tau));
}

std::vector<GradedMap> twisting_cochains(const ConvolutionAlgebra& conv, size_t limit) {
  std::vector<GradedMap> out;
  for (const auto& v : enumerate_mc(conv.algebra, limit)) out.push_back(conv.to_map(v, -1));
  return out;
}

bool is_lie_twisting_cochain(const ConvolutionLie& conv, const GradedMap& tau) {
  if (tau.degree() != -1) throw DegreeError("twisting cochains have degree -1");
  return is_mc_lie_element(conv.lie, to_hom_vector(tau));
}

std::vector<GradedMap> lie_twisting_cochains(const ConvolutionLie& conv, size_t limit) {
  std::vector<GradedMap> out;
  for (const auto& v : enumerate_mc_lie(conv.lie, limit)) out.push_back(conv.to_map(v, -1));
  return out;
}

GradedMap convolution_precompose(const GradedMap& i, const ConvolutionAlgebra& source,
                                 const ConvolutionAlgebra& target) {
  if (i.degree() != 0) throw DegreeError("coalgebra maps have degree 0");
  const Field& f = i.field();
  size_t na = source.algebra_space->dim(), ncp = source.coalgebra_space->dim(), nc = target.coalgebra_space->dim();
  std::vector<Vec> cols(ncp * na);
  for (size_t x = 0; x < nc; ++x)
    for (const auto& [xp, s] : i.col(x))
      for (size_t a = 0; a < na; ++a) add_term(cols[xp * na + a], x * na + a, s);
  return GradedMap(f, source.algebra.space(), target.algebra.space(), 0, std::move(cols));
}

GradedMap convolution_postcompose(const GradedMap& j, const ConvolutionAlgebra& source,
                                  const ConvolutionAlgebra& target) {
  if (j.degree() != 0) throw DegreeError("algebra maps have degree 0");
  const Field& f = j.field();
  size_t nc = source.coalgebra_space->dim(), na = source.algebra_space->dim(), nap = target.algebra_space->dim();
  std::vector<Vec> cols(nc * na);
  for (size_t x = 0; x < nc; ++x)
    for (size_t a = 0; a < na; ++a)
      for (const auto& [ap, s] : j.col(a)) add_term(cols[x * na + a], x * nap + ap, s);
  return GradedMap(f, source.algebra.space(), target.algebra.space(), 0, std::move(cols));
}

PullbackProductReport pullback_product_map(const GradedMap& i, const DgCoalgebra& c, const DgCoalgebra& cp,
                                           const GradedMap& j, const DgAlgebra& a, const DgAlgebra& ap) {
  if (!is_injective(i)) throw PreconditionError("pullback product needs an injective coalgebra map");
  if (!is_surjective(j)) throw PreconditionError("pullback product needs a surjective algebra map");
  auto cpa = convolution_algebra(cp, a);
  auto ca = convolution_algebra(c, a);
  auto cap_ = convolution_algebra(c, ap);
  auto cpap = convolution_algebra(cp, ap);
  GradedMap ij = convolution_postcompose(j, ca, cap_);
  GradedMap iap = convolution_precompose(i, cpap, cap_);
  PullbackAlgebra pb = pullback_algebra(ij, ca.algebra, iap, cpap.algebra);
  GradedMap h1 = convolution_precompose(i, cpa, ca);
  GradedMap h2 = convolution_postcompose(j, cpa, cpap);
  auto m = pullback_cone_map(pb, h1, h2);
  if (!m) throw PreconditionError("induced maps do not form a cone over the pullback");
  bool surj = is_surjective(*m);
  auto weq = is_quasi_iso(*m, cpa.algebra.cx, pb.algebra.cx, full_window(cpa.algebra.cx, pb.algebra.cx));
  return {std::move(cpa), std::move(pb), std::move(*m), surj, std::move(weq)};
}

}  // namespace kdual
