#include "core/curve.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace polyhardy {

namespace {

struct Sampler {
  int n;

  void operator()(const CircleDesc& d, std::vector<cplx>& pts, std::vector<cplx>& tan) const {
    if (d.radius <= 0.0) throw ConfigError("circle radius must be positive");
    for (int i = 0; i < n; ++i) {
      const double s = 2.0 * kPi * i / n;
      const double c = std::cos(s), si = std::sin(s);
      pts[i] = d.center + cplx(d.radius * c, d.radius * si);
      tan[i] = cplx(-d.radius * si, d.radius * c);
    }
  }

  void operator()(const EllipseDesc& d, std::vector<cplx>& pts, std::vector<cplx>& tan) const {
    if (d.a <= 0.0 || d.b <= 0.0) throw ConfigError("ellipse semi-axes must be positive");
    for (int i = 0; i < n; ++i) {
      const double s = 2.0 * kPi * i / n;
      pts[i] = cplx(d.a * std::cos(s), d.b * std::sin(s));
      tan[i] = cplx(-d.a * std::sin(s), d.b * std::cos(s));
    }
  }

  void operator()(const TrigDesc& d, std::vector<cplx>& pts, std::vector<cplx>& tan) const {
    if (d.coeffs.empty()) throw ConfigError("trig curve needs at least one coefficient");
    for (int i = 0; i < n; ++i) {
      const double s = 2.0 * kPi * i / n;
      cplx p = 0.0, t = 0.0;
      for (const auto& [m, c] : d.coeffs) {
        const cplx e = std::polar(1.0, m * s);
        p += c * e;
        t += c * e * cplx(0.0, static_cast<double>(m));
      }
      pts[i] = p;
      tan[i] = t;
    }
  }
};

double cross(cplx o, cplx a, cplx b) {
  return (a.real() - o.real()) * (b.imag() - o.imag()) -
         (a.imag() - o.imag()) * (b.real() - o.real());
}

bool segments_cross(cplx p1, cplx p2, cplx p3, cplx p4) {
  const double d1 = cross(p3, p4, p1);
  const double d2 = cross(p3, p4, p2);
  const double d3 = cross(p1, p2, p3);
  const double d4 = cross(p1, p2, p4);
  return ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
         ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
}

}  // namespace

CurveDiscretization::CurveDiscretization(CurveDescriptor desc, int n)
    : desc_(std::move(desc)), n_(n), points_(n > 0 ? n : 0), tangents_(n > 0 ? n : 0) {
  if (n_ < 8 || n_ % 2 != 0) {
    std::ostringstream os;
    os << "node count N = " << n_ << " must be even and >= 8";
    throw ConfigError(os.str());
  }
  std::visit([&](const auto& d) { Sampler{n_}(d, points_, tangents_); }, desc_);
  validate();
}

void CurveDiscretization::validate() {
  double scale = 0.0;
  for (const auto& t : tangents_) scale = std::max(scale, std::abs(t));
  for (const auto& t : tangents_) {
    if (std::abs(t) < 1e-12 * scale || scale == 0.0)
      throw CurveError("degenerate parametrization: gamma'(s) vanishes at a node");
  }

  if (std::holds_alternative<TrigDesc>(desc_)) {
    // Discrete scan of the node polyline for self-intersections.
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 2; j < n_; ++j) {
        if (i == 0 && j == n_ - 1) continue;  // adjacent through the wrap
        if (segments_cross(points_[i], points_[(i + 1) % n_], points_[j],
                           points_[(j + 1) % n_]))
          throw CurveError("trig curve is not simple: self-intersection detected");
      }
    }
  }

  cplx centroid = 0.0;
  for (const auto& p : points_) centroid += p;
  reference_ = centroid / static_cast<double>(n_);

  if (winding_number(reference_) != 1)
    throw CurveError("curve must be positively oriented: winding about interior reference != +1");
}

CurveDiscretization CurveDiscretization::circle(cplx center, double radius, int n) {
  return CurveDiscretization(CircleDesc{center, radius}, n);
}

CurveDiscretization CurveDiscretization::ellipse(double a, double b, int n) {
  return CurveDiscretization(EllipseDesc{a, b}, n);
}

CurveDiscretization CurveDiscretization::trig(const std::map<int, cplx>& coeffs, int n) {
  return CurveDiscretization(TrigDesc{coeffs}, n);
}

CurveDiscretization CurveDiscretization::from_descriptor(const CurveDescriptor& desc, int n) {
  return CurveDiscretization(desc, n);
}

bool CurveDiscretization::is_unit_circle() const {
  const auto* c = std::get_if<CircleDesc>(&desc_);
  return c != nullptr && c->center == cplx(0.0) && c->radius == 1.0;
}

bool CurveDiscretization::same_discretization(const CurveDiscretization& other) const {
  return n_ == other.n_ && desc_ == other.desc_;
}

double CurveDiscretization::max_arclength_spacing() const {
  double m = 0.0;
  for (const auto& t : tangents_) m = std::max(m, std::abs(t));
  return 2.0 * kPi / n_ * m;
}

double CurveDiscretization::arclength() const {
  double acc = 0.0;
  for (const auto& t : tangents_) acc += std::abs(t);
  return 2.0 * kPi / n_ * acc;
}

double CurveDiscretization::boundary_distance(cplx z) const {
  double d = std::abs(z - points_[0]);
  for (const auto& p : points_) d = std::min(d, std::abs(z - p));
  return d;
}

int CurveDiscretization::winding_number(cplx z) const {
  cplx acc = 0.0;
  for (int i = 0; i < n_; ++i) acc += tangents_[i] / (points_[i] - z);
  const double w = (acc / cplx(0.0, static_cast<double>(n_))).real();
  return static_cast<int>(std::lround(w));
}

PointClass CurveDiscretization::classify(cplx z) const {
  if (boundary_distance(z) < near_boundary_delta()) return PointClass::NearBoundary;
  const int w = winding_number(z);
  if (w == 1) return PointClass::Interior;
  if (w == 0) return PointClass::Exterior;
  throw DomainError("point classification failed: unexpected winding number");
}

CurvePtr make_circle(cplx center, double radius, int n) {
  return std::make_shared<CurveDiscretization>(CurveDiscretization::circle(center, radius, n));
}

CurvePtr make_ellipse(double a, double b, int n) {
  return std::make_shared<CurveDiscretization>(CurveDiscretization::ellipse(a, b, n));
}

CurvePtr make_trig_curve(const std::map<int, cplx>& coeffs, int n) {
  return std::make_shared<CurveDiscretization>(CurveDiscretization::trig(coeffs, n));
}

}  // namespace polyhardy
