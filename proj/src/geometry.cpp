#include "risbeam/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace risbeam {

std::vector<double> element_positions(const LinearLayout& layout) {
    if (layout.n_elements < 1)
        throw std::invalid_argument("LinearLayout: n_elements must be >= 1");
    if (!(layout.spacing > 0.0))
        throw std::invalid_argument("LinearLayout: spacing must be > 0");
    std::vector<double> pos(static_cast<size_t>(layout.n_elements));
    const double offset = 0.5 * (layout.n_elements - 1);
    for (int i = 0; i < layout.n_elements; ++i)
        pos[static_cast<size_t>(i)] = layout.spacing * (i - offset);
    return pos;
}

ArrayFace ArrayFace::linear(const LinearLayout& layout) {
    ArrayFace f;
    f.az_ = layout;
    f.x_ = element_positions(layout);
    f.y_ = {0.0};
    f.planar_ = false;
    return f;
}

ArrayFace ArrayFace::planar(const LinearLayout& azimuth, const LinearLayout& elevation) {
    ArrayFace f;
    f.az_ = azimuth;
    f.x_ = element_positions(azimuth);
    f.y_ = element_positions(elevation);
    f.planar_ = true;
    return f;
}

Vec3 ArrayFace::position(int i) const {
    if (i < 0 || i >= size())
        throw std::invalid_argument("ArrayFace: element index out of range");
    const int n_az = n_azimuth();
    const int row = i / n_az;
    const int col = i % n_az;
    return {x_[static_cast<size_t>(col)], y_[static_cast<size_t>(row)], 0.0};
}

AmafRisLayout AmafRisLayout::linear(int n_ris, int n_amaf, double focal_length,
                                    double ris_spacing, double amaf_spacing) {
    AmafRisLayout l;
    l.ris = ArrayFace::linear({n_ris, ris_spacing});
    l.amaf = ArrayFace::linear({n_amaf, amaf_spacing});
    l.focal_length = focal_length;
    l.validate();
    return l;
}

AmafRisLayout AmafRisLayout::planar(int n_ris, int n_amaf, double focal_length,
                                    double ris_spacing, double amaf_spacing) {
    AmafRisLayout l;
    l.ris = ArrayFace::planar({n_ris, ris_spacing}, {n_ris, ris_spacing});
    l.amaf = ArrayFace::planar({n_amaf, amaf_spacing}, {n_amaf, amaf_spacing});
    l.focal_length = focal_length;
    l.validate();
    return l;
}

void AmafRisLayout::validate() const {
    if (!(focal_length > 0.0))
        throw std::invalid_argument("AmafRisLayout: focal_length must be > 0");
    if (ris.size() < 1 || amaf.size() < 1)
        throw std::invalid_argument("AmafRisLayout: empty array face");
}

RayGeometry ray_geometry(const AmafRisLayout& layout, int amaf_index, int ris_index) {
    const Vec3 a = layout.amaf.position(amaf_index);  // plane z = -F
    const Vec3 r = layout.ris.position(ris_index);    // plane z = 0
    const double dx = r.x - a.x;
    const double dy = r.y - a.y;
    const double dz = layout.focal_length;
    const double lateral = std::hypot(dx, dy);
    RayGeometry g;
    g.distance = std::hypot(lateral, dz);
    g.departure_angle = std::atan2(lateral, dz);
    g.arrival_angle = g.departure_angle;  // parallel planes
    return g;
}

double f_over_d(const AmafRisLayout& layout) {
    const LinearLayout& az = layout.ris.azimuth_layout();
    const double d = az.n_elements * az.spacing;
    if (!(d > 0.0))
        throw std::invalid_argument("f_over_d: zero RIS aperture");
    return layout.focal_length / d;
}

}  // namespace risbeam
