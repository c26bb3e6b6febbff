#include "qcorr/sections.hpp"

#include "qcorr/measures.hpp"

#include <cmath>
#include <sstream>

namespace qcorr {

const char* const kAxisLabels[15] = {"0X", "0Y", "0Z", "X0", "Y0", "Z0", "XX", "XY",
                                     "XZ", "YX", "YY", "YZ", "ZX", "ZY", "ZZ"};

int axis_index(const std::string& label) {
    for (int k = 0; k < 15; ++k)
        if (label == kAxisLabels[k]) return k;
    throw std::invalid_argument("unknown axis label: " + label);
}

const char* to_string(SectionGeometry g) {
    switch (g) {
        case SectionGeometry::Square: return "square";
        case SectionGeometry::Disk: return "disk";
        case SectionGeometry::Cross: return "cross";
        case SectionGeometry::Tetrahedron: return "tetrahedron";
        case SectionGeometry::Ball: return "ball";
        case SectionGeometry::DoubleCone: return "double-cone";
        case SectionGeometry::MixedSolid: return "mixed-solid";
        case SectionGeometry::ZeroVolume: return "zero-volume";
    }
    return "?";
}

char section2_symbol(SectionGeometry g) {
    switch (g) {
        case SectionGeometry::Square: return 'S';
        case SectionGeometry::Disk: return 'D';
        case SectionGeometry::Cross: return '+';
        default: throw std::invalid_argument("not a 2-section geometry");
    }
}

namespace {

bool concordant_point(int axis1, int axis2, double x, double y) {
    BlochVector n;
    n.v[axis1] = x;
    n.v[axis2] = y;
    if (!is_physical(n)) return false;
    double s = n.local_a().squaredNorm() + n.corr().squaredNorm();
    return 0.25 * (s - k_max_left(n)) < 1e-9;
}

}  // namespace

SectionGeometry section2_classify(int axis1, int axis2, int grid_n) {
    if (axis1 == axis2) throw std::invalid_argument("section2_classify: identical axes");
    const double axis_band = 1.5 / double(grid_n);
    long off_axis = 0, conc = 0;
    for (int i = 0; i < grid_n; ++i) {
        double x = -1.0 + 2.0 * i / double(grid_n - 1);
        for (int j = 0; j < grid_n; ++j) {
            double y = -1.0 + 2.0 * j / double(grid_n - 1);
            if (!concordant_point(axis1, axis2, x, y)) continue;
            ++conc;
            if (std::abs(x) > axis_band && std::abs(y) > axis_band) ++off_axis;
        }
    }
    if (conc == 0 || double(off_axis) / double(conc) < 2.0 / double(grid_n))
        return SectionGeometry::Cross;
    // the diagonal point at euclidean radius ~0.99 lies inside a disk but
    // outside the tilted square |x| + |y| <= 1
    if (concordant_point(axis1, axis2, 0.7, 0.7)) return SectionGeometry::Disk;
    return SectionGeometry::Square;
}

Section3Result section3_classify(int axis1, int axis2, int axis3, int grid2_n, int grid3_n) {
    if (axis1 == axis2 || axis1 == axis3 || axis2 == axis3)
        throw std::invalid_argument("section3_classify: axes must be distinct");
    Section3Result r{};
    r.faces[0] = section2_classify(axis1, axis2, grid2_n);
    r.faces[1] = section2_classify(axis1, axis3, grid2_n);
    r.faces[2] = section2_classify(axis2, axis3, grid2_n);

    int squares = 0, disks = 0, crosses = 0;
    for (auto f : r.faces) {
        if (f == SectionGeometry::Square) ++squares;
        if (f == SectionGeometry::Disk) ++disks;
        if (f == SectionGeometry::Cross) ++crosses;
    }
    if (crosses > 0) r.geometry = SectionGeometry::ZeroVolume;
    else if (squares == 3) r.geometry = SectionGeometry::Tetrahedron;
    else if (disks == 3) r.geometry = SectionGeometry::Ball;
    else if (squares == 1) r.geometry = SectionGeometry::DoubleCone;
    else r.geometry = SectionGeometry::MixedSolid;

    long conc = 0;
    long total = long(grid3_n) * grid3_n * grid3_n;
    for (int i = 0; i < grid3_n; ++i) {
        double x = -1.0 + 2.0 * i / double(grid3_n - 1);
        for (int j = 0; j < grid3_n; ++j) {
            double y = -1.0 + 2.0 * j / double(grid3_n - 1);
            for (int k = 0; k < grid3_n; ++k) {
                double z = -1.0 + 2.0 * k / double(grid3_n - 1);
                BlochVector n;
                n.v[axis1] = x;
                n.v[axis2] = y;
                n.v[axis3] = z;
                if (!is_physical(n)) continue;
                double s = n.local_a().squaredNorm() + n.corr().squaredNorm();
                if (0.25 * (s - k_max_left(n)) < 1e-9) ++conc;
            }
        }
    }
    r.volume_fraction = double(conc) / double(total);
    return r;
}

std::string section2_survey_table(int grid_n) {
    std::ostringstream os;
    os << "    ";
    for (int c = 0; c < 15; ++c) os << " " << kAxisLabels[c];
    os << "\n";
    for (int rw = 0; rw < 15; ++rw) {
        os << kAxisLabels[rw] << "  ";
        for (int c = 0; c < rw; ++c)
            os << "  " << section2_symbol(section2_classify(rw, c, grid_n));
        os << "\n";
    }
    return os.str();
}

}  // namespace qcorr
