#pragma once

#include <complex>
#include <vector>

#include "wadd/special.hpp"
#include "wadd/summation.hpp"

namespace wadd {

struct SphericalPoint {
  double r = 1.0;
  double theta = 0.0;  // [0, pi]
  double phi = 0.0;    // [0, 2 pi]
};

/// Operator -laplacian - g/|r| + k^2.
struct CoulombParams {
  double g = 1.0;
  double k = 1.0;
  double kappa() const { return g / (2.0 * k); }
};

struct QuantumNumbers {
  int n = 1;
  int l = 0;
  int m = 0;
};

/// E_n = -g^2 / (4 n^2).
double bound_energy(int n, double g);
/// Multiplicity n^2 of E_n.
long degeneracy(int n);

ComplexScalar hydrogen_eigenfunction(const QuantumNumbers& qn, double g, const SphericalPoint& p);

/// Distances between two points: R = |p - p0|, x = r + r0 + R, y = r + r0 - R,
/// computed without cancellation from unit-vector differences.
struct PointGeometry {
  double R = 0.0;
  double x = 0.0;
  double y = 0.0;
  double cos_gamma = 1.0;
};

PointGeometry point_geometry(const SphericalPoint& p, const SphericalPoint& p0);

struct GreenOptions {
  /// Refuse kappa = g/(2k) within this distance of a positive integer (0 disables).
  double kappa_guard = 1e-3;
  SeriesOptions series;
  /// Evaluate the partial-wave form at r = r0 instead of throwing CoincidentRadii.
  bool allow_coincident_radii = false;
  /// Terms summed at r = r0, where the remainder only decays like l^-3 and the
  /// series engine cannot certify a tail. Ignored if series.fixed_terms is set.
  long coincident_terms = 300;
};

/// Compact closed form of the Coulomb Green's function.
double hostler_green(const CoulombParams& params, const SphericalPoint& p,
                     const SphericalPoint& p0, const GreenOptions& opts = {});

struct PartialWaveResult {
  double value = 0.0;
  SeriesOutcome diag;
};

/// Legendre series over angular momentum l.
PartialWaveResult partial_wave_green(const CoulombParams& params, const SphericalPoint& p,
                                     const SphericalPoint& p0, const GreenOptions& opts = {});

/// Free kernel e^{-kR}/(4 pi R), the g -> 0 limit.
double free_green(double k, const SphericalPoint& p, const SphericalPoint& p0);

enum class ProjectionMethod { EigenSum, Residue };

/// Kernel of the spectral projection onto the eigenspace of E_n.
double projection_kernel(int n, double g, const SphericalPoint& p, const SphericalPoint& p0,
                         ProjectionMethod method);

/// Diagonal of the projection kernel; independent of the angles.
double diagonal_density(int n, double g, double r);
/// 4 pi r^2 times the diagonal density.
double radial_distribution(int n, double g, double r);

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss rule for weight e^{-t} on [0, inf).
QuadratureRule gauss_laguerre(int n);
/// n-point Gauss rule on [-1, 1].
QuadratureRule gauss_legendre(int n);

struct QuadratureResult {
  double value = 0.0;
  int nodes = 0;
  /// |I(nodes) - I(nodes/2)|.
  double change = 0.0;
};

/// Integral of the radial distribution over [0, inf); equals n^2.
QuadratureResult integrate_radial_distribution(int n, double g, double tol = 1e-10);
/// Integral of e^{-r} (L_n L^1_{n-1} - r L_n L^2_{n-2} + r (L^1_{n-1})^2) r^2; equals 2 n^3.
QuadratureResult laguerre_density_integral(int n, double tol = 1e-10);
/// Integral of |psi|^2 over space: Gauss-Laguerre in r times Gauss-Legendre in
/// cos(theta); the phi integral is exact.
QuadratureResult eigenfunction_norm(const QuantumNumbers& qn, double g, double tol = 1e-10);

}  // namespace wadd
