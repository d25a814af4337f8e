#pragma once

// Inverse problem for the pedal angle map: given a target angle triple,
// construct the Apollonius circle system over the triangle's vertex pairs
// and intersect it. A non-identity target always yields exactly one interior
// and one exterior solution, inverse to each other in the circumcircle; the
// base angle triple yields only the circumcenter.

#include <optional>

#include "pedal/geometry.hpp"

namespace pedal {

/// Implicit form q*|X|^2 - 2*w.X + s = 0 of an Apollonius locus. Built
/// straight from the base points and ratio, it stays well conditioned even
/// when the geometric circle blows up (ratio near 1), so it is what the
/// solver refines and measures residuals against.
struct LocusEquation {
  double q = 0.0;
  Vec2 w;
  double s = 0.0;

  double value(Point x) const { return q * norm2(x) - 2.0 * dot(w, x) + s; }
  Vec2 gradient(Point x) const { return 2.0 * (q * x - w); }
};

/// The three Apollonius loci of a target triple: k1 over base (B, C) with
/// ratio lambda = |XB|/|XC|, k2 over (C, A) with mu, k3 over (A, B) with nu;
/// lambda * mu * nu = 1.
struct ApolloniusSystem {
  double lambda = 1.0;
  double mu = 1.0;
  double nu = 1.0;
  std::array<GeneralizedCircle, 3> loci;
  std::array<LocusEquation, 3> equations;
  Point circumcenter;
  double circumradius = 0.0;
};

ApolloniusSystem build_system(const Triangle& tri, const AngleTriple& target,
                              const ToleranceConfig& tol = {});

/// Geometric distance from x to locus `which`, first-order estimate,
/// normalized by (2R + |x - O|) so that far exterior points are measured on
/// their own scale.
double locus_residual(const ApolloniusSystem& system, int which, Point x);

/// Worst of the three locus residuals at x.
double system_residual(const ApolloniusSystem& system, Point x);

struct SolveOutcome {
  Point inside;
  std::optional<Point> outside;  // absent iff target equals the base angles
  AngleTriple target;
  bool discriminant_ok = true;
  // Set when both intersection points landed inside the on-circle tolerance
  // band and the inside/outside split fell back to the smaller distance.
  bool conditioning_warning = false;
};

SolveOutcome solve(const Triangle& tri, const AngleTriple& target,
                   const ToleranceConfig& tol = {});

/// Intersection discriminant of a straddling pair of loci, positive exactly
/// when the pair meets in two points. Relabels the system cyclically so the
/// chosen pair has its first ratio above 1 and its second below; errors on
/// identity targets where no pair straddles 1.
double discriminant(const Triangle& tri, const ApolloniusSystem& system,
                    const ToleranceConfig& tol = {});

}  // namespace pedal
