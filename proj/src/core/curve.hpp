#pragma once

#include <map>
#include <memory>
#include <variant>
#include <vector>

#include "core/types.hpp"

namespace polyhardy {

enum class PointClass { Interior, Exterior, NearBoundary };

struct CircleDesc {
  cplx center;
  double radius;
  bool operator==(const CircleDesc&) const = default;
};

struct EllipseDesc {
  double a;
  double b;
  bool operator==(const EllipseDesc&) const = default;
};

// gamma(s) = sum_m c_m e^{i m s}
struct TrigDesc {
  std::map<int, cplx> coeffs;
  bool operator==(const TrigDesc&) const = default;
};

using CurveDescriptor = std::variant<CircleDesc, EllipseDesc, TrigDesc>;

// A smooth positively-oriented closed Jordan curve sampled at N equispaced
// parameter nodes s_i = 2 pi i / N, with exact analytic tangents.  Immutable
// after construction; construction validates orientation (+1 winding about an
// interior reference point), non-degenerate tangents, and for trig series the
// absence of self-intersections.
class CurveDiscretization {
 public:
  static CurveDiscretization circle(cplx center, double radius, int n);
  static CurveDiscretization ellipse(double a, double b, int n);
  static CurveDiscretization trig(const std::map<int, cplx>& coeffs, int n);
  static CurveDiscretization from_descriptor(const CurveDescriptor& desc, int n);

  int size() const { return n_; }
  double parameter(int i) const { return 2.0 * kPi * i / n_; }
  const std::vector<cplx>& points() const { return points_; }
  const std::vector<cplx>& tangents() const { return tangents_; }
  const CurveDescriptor& descriptor() const { return desc_; }

  bool is_unit_circle() const;
  bool same_discretization(const CurveDiscretization& other) const;

  // h * max_i |gamma'(s_i)|, the coarsest node spacing in arclength.
  double max_arclength_spacing() const;
  // Near-boundary band: evaluation of Cauchy-type quadrature closer than this
  // to the curve is refused.
  double near_boundary_delta() const { return 5.0 * max_arclength_spacing(); }
  double arclength() const;

  // min over nodes of |z - gamma(s_i)| (accurate to one node spacing).
  double boundary_distance(cplx z) const;
  // Trapezoidal winding number (1/2 pi i) \oint gamma'/(gamma - z) ds, rounded.
  int winding_number(cplx z) const;
  PointClass classify(cplx z) const;
  cplx interior_reference() const { return reference_; }

 private:
  CurveDiscretization(CurveDescriptor desc, int n);
  void validate();

  CurveDescriptor desc_;
  int n_;
  std::vector<cplx> points_;
  std::vector<cplx> tangents_;
  cplx reference_;
};

using CurvePtr = std::shared_ptr<const CurveDiscretization>;

CurvePtr make_circle(cplx center, double radius, int n);
CurvePtr make_ellipse(double a, double b, int n);
CurvePtr make_trig_curve(const std::map<int, cplx>& coeffs, int n);

}  // namespace polyhardy
