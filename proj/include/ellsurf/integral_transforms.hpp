#pragma once

#include <array>
#include <functional>
#include <span>
#include <vector>

#include "ellsurf/difference_operators.hpp"
#include "ellsurf/numerics.hpp"

namespace ellsurf {

struct KernelParams {
  cplx eta;
  cplx x0;
  cplx x1;
  cplx p;
  cplx q;
};

// Gamma_{p,q}(coefficient * z^zpow * w^wpow)^exp
struct GammaAtom {
  cplx coefficient;
  int zpow = 0;
  int wpow = 0;
  int exp = 1;
};

// The kernel of the generalized Fourier transformation: a constant times
// the product of atoms. Throws PoleHit when x0/(pq x1) is in p^N q^N.
struct KernelForm {
  cplx constant;
  std::vector<GammaAtom> atoms;
};
KernelForm kernel_form(const KernelParams& kp);

cplx kernel_K(cplx z, cplx w, const KernelParams& kp);

// Pole families p^N q^N base (inner) and p^{-N} q^{-N} base (outer) in w.
struct PoleFamilies {
  std::vector<cplx> inner;
  std::vector<cplx> outer;
};
// Read off the w-dependent atoms of the kernel at a fixed z. The families
// based at eta/x0 and pq x0 cancel against zeros of the functions the
// transform acts on, and can be left out.
PoleFamilies kernel_pole_families(const KernelParams& kp, cplx z, bool include_x0_families = true);

struct ContourSpec {
  double radius = 0.0;  // 0: geometric midpoint of the separating annulus
  int nodes = 512;
  double excluded_pole_margin = 0.02;  // relative
  PoleFamilies extra;                   // poles of the integrated function
  bool g_cancels_x0_families = true;
};

// Radius separating the families; throws ContourPinch.
double separating_radius(const PoleFamilies& families, double margin);

struct TransformValues {
  std::vector<cplx> values;
  double doubling_error = 0.0;  // max |I(2N) - I(N)| / |I(2N)|
  double radius = 0.0;
};

// (1/2 pi i) int K(z, w) g(w) dw / w over |w| = r for each z.
TransformValues contour_apply(const KernelParams& kp, const std::function<cplx(cplx)>& g,
                              std::span<const cplx> zs, const ContourSpec& spec = {});

// Trapezoid rule for (1/2 pi i) int f(w) dw / w on |w| = r with half-step offset nodes.
cplx circle_average(const std::function<void(std::span<const cplx>, std::span<cplx>)>& f, double radius, int nodes);

struct BetaResult {
  cplx value;
  cplx closed_form;  // prod_{i<j} Gamma(t_i t_j)
  double doubling_error = 0.0;
  int nodes = 0;
};

// Integrand prod Gamma(t_i z^{+-1}) / Gamma(z^{+-2}) at points on any circle.
void beta_integrand(std::span<const cplx> t, cplx p, cplx q, std::span<const cplx> z, std::span<cplx> out);

// Requires prod t = pq and |t_i| < 1 (ContourPinch otherwise).
BetaResult beta_integral(std::span<const cplx> t, cplx p, cplx q, double tol = 1e-12, int max_nodes = 4096);
cplx beta_closed_form(std::span<const cplx> t, cplx p, cplx q);

// Kernel of the Fourier transformation between the even algebras over
// (eta, eta') and (eta', eta).
cplx fourier_kernel(cplx z, cplx w, const NumericParams& params);

struct AnnihilationSetup {
  NumericParams params;  // p, q, eta, eta'
  std::array<cplx, 3> a;
};

// Standard admissible draw: |p| = 0.05, |q| = 0.3, |eta| = 0.3, |q eta'| = 1, |a_i| ~ 0.8.
AnnihilationSetup random_annihilation_setup(Rng& rng);

// D_eta(z^{-1} theta_p(a_1 z, a_2 z, a_3 z, q a_1 a_2 a_3 eta eta' / z))
DiffOp annihilation_operator(const AnnihilationSetup& s);

// The Gamma-product solution of the transformed first-order equation.
cplx annihilation_solution(const AnnihilationSetup& s, cplx w);

struct AnnihilationResult {
  double residual = 0.0;     // max over z of |D I| / (|c0 I(z)| + |c1 I(qz)|)
  double doubling_error = 0.0;
};

// Applies the operator to int K(z, w) g(w) dw / w at the z points; the
// integrand of g times an extra factor is used when modifier is given.
AnnihilationResult annihilation_check(const AnnihilationSetup& s, std::span<const cplx> zs,
                                      const std::function<cplx(cplx)>& modifier = {}, int nodes = 512);

}  // namespace ellsurf
