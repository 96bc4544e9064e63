#ifndef RISBEAM_GEOMETRY_HPP
#define RISBEAM_GEOMETRY_HPP

#include <vector>

namespace risbeam {

// All lengths are in half-wavelength units. Coordinate frame: RIS plane at
// z = 0 spanning x (azimuth) and y (elevation), AMAF plane at z = -F,
// boresight along +z.

struct LinearLayout {
    int n_elements = 1;
    double spacing = 1.0;
};

// Centered coordinates spacing*(i - (n-1)/2), i = 0..n-1.
std::vector<double> element_positions(const LinearLayout& layout);

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

// One array face, either linear (elements along x) or planar (Cartesian
// product of an azimuth layout along x and an elevation layout along y).
// Planar element index is row-major: index = row * n_azimuth + col, where
// row indexes elevation and col indexes azimuth.
class ArrayFace {
  public:
    static ArrayFace linear(const LinearLayout& layout);
    static ArrayFace planar(const LinearLayout& azimuth, const LinearLayout& elevation);

    int size() const { return static_cast<int>(x_.size()) * static_cast<int>(y_.size()); }
    bool is_planar() const { return planar_; }
    int n_azimuth() const { return static_cast<int>(x_.size()); }
    int n_elevation() const { return static_cast<int>(y_.size()); }
    const LinearLayout& azimuth_layout() const { return az_; }

    // In-plane position of element i (z = 0 plane of the face).
    Vec3 position(int i) const;

    ArrayFace() = default;

  private:
    LinearLayout az_;
    std::vector<double> x_;
    std::vector<double> y_;
    bool planar_ = false;
};

struct AmafRisLayout {
    ArrayFace ris;   // at z = 0
    ArrayFace amaf;  // at z = -focal_length
    double focal_length = 0.0;

    static AmafRisLayout linear(int n_ris, int n_amaf, double focal_length,
                                double ris_spacing = 1.0, double amaf_spacing = 1.0);
    static AmafRisLayout planar(int n_ris, int n_amaf, double focal_length,
                                double ris_spacing = 1.0, double amaf_spacing = 1.0);

    void validate() const;
};

struct RayGeometry {
    double distance = 0.0;         // r_{n,m}, half-wavelength units
    double departure_angle = 0.0;  // theta_{n,m}, from AMAF element boresight (+z)
    double arrival_angle = 0.0;    // phi_{n,m}, from RIS element boresight (-z)
};

// Feed ray from AMAF element m to RIS element n. For the parallel-plane
// center-feed geometry the two angles coincide.
RayGeometry ray_geometry(const AmafRisLayout& layout, int amaf_index, int ris_index);

// F / D with D the RIS linear aperture size n_elements * spacing (azimuth
// axis for planar faces; the paper's planar examples are square).
double f_over_d(const AmafRisLayout& layout);

}  // namespace risbeam

#endif
