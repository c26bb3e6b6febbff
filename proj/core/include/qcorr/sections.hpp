#pragma once

#include "qcorr/bloch.hpp"

#include <string>
#include <vector>

namespace qcorr {

// Axis labels in flat component order: 0X 0Y 0Z X0 Y0 Z0 XX XY XZ YX YY YZ ZX ZY ZZ.
extern const char* const kAxisLabels[15];
int axis_index(const std::string& label);

enum class SectionGeometry {
    Square,      // concordant set fills the (tilted-square) physical 2-section
    Disk,        // concordant set fills the disk physical 2-section
    Cross,       // concordant points only on the two axes
    Tetrahedron, // 3-section, all 2-sections squares
    Ball,        // all disks
    DoubleCone,  // one square, two disks
    MixedSolid,  // one disk, two squares
    ZeroVolume   // at least one cross among the 2-sections
};

const char* to_string(SectionGeometry g);
char section2_symbol(SectionGeometry g);  // 'S' / 'D' / '+'

// Grid classification of the 2-section spanned by two distinct axes:
// sample grid_n x grid_n over [-1,1]^2, mark physical points with
// D_G < 1e-9, then decide Cross / Disk / Square (off-axis emptiness,
// then the diagonal corner probe which only a disk contains).
SectionGeometry section2_classify(int axis1, int axis2, int grid_n = 201);

struct Section3Result {
    SectionGeometry geometry;
    SectionGeometry faces[3];      // 2-section types of the three axis pairs
    double volume_fraction = 0;    // concordant share of [-1,1]^3 grid cells
};

Section3Result section3_classify(int axis1, int axis2, int axis3, int grid2_n = 101,
                                 int grid3_n = 31);

// Lower-triangular 15x15 survey of all 105 pairs, Table-style text.
std::string section2_survey_table(int grid_n = 201);

}  // namespace qcorr
