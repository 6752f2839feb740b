#pragma once

#include <iosfwd>
#include <vector>

#include "legkit/front.hpp"

namespace legkit {

struct GeometryParams {
    double spacing = 1.0;    // horizontal distance between events
    double height = 1.0;     // vertical distance between strand levels
    double cusp_rise = 1e-5; // height of the semicubical piece, relative to `height`
    double slope_margin = 0.1;
    int samples_per_arc = 10000;
};

// one arc sampled left to right; y is dz/dx
struct ArcSamples {
    std::vector<double> x, z, y;
};

struct RealizedFront {
    FrontDiagram diagram;
    Decomposition dec;
    GeometryParams params;
    std::vector<ArcSamples> arcs;
};

// throws GeometryDegenerate when crossing slopes are closer than the margin
RealizedFront realize_front(const FrontDiagram& d, const GeometryParams& g = {});

struct Point3 {
    double x, y, z;
};

struct LiftedCurve {
    std::vector<Point3> pts;
    bool closed = true;  // last point connects back to the first
};

LiftedCurve legendrian_lift(const RealizedFront& rf, int component);

// max over segments of |dz - ybar dx|
double legendrian_residual(const LiftedCurve& c);

struct ClosureResult {
    double value;
    bool closed;
};
ClosureResult closure_integral(const LiftedCurve& c);

struct RotationResult {
    int rotation;
    double raw;       // turning / 2pi before rounding
    double residual;  // |raw - rotation|
};
// winding of the tangent of the (x, y) projection
RotationResult numeric_rotation(const LiftedCurve& c);

struct DoublePoint {
    double x, y;
    std::size_t seg_a, seg_b;
    double area_a, area_b;  // signed areas of the two loops
    bool degenerate;
};

struct EmbeddednessReport {
    std::vector<DoublePoint> points;
    bool embedded;  // every double point splits into loops of nonzero area
    bool generic;   // no overlapping collinear pieces were seen
};

EmbeddednessReport lagrangian_embeddedness_check(const LiftedCurve& c, double tol = 1e-9);

void write_csv(std::ostream& os, const LiftedCurve& c);

}  // namespace legkit
