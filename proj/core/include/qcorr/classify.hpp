#pragma once

#include "qcorr/bloch.hpp"

#include <string>
#include <vector>

namespace qcorr {

struct Trajectory {
    std::vector<double> t;
    std::vector<BlochVector> n;
    std::vector<double> discord;
    std::vector<double> geometric;
    std::vector<double> concurrence;
    std::vector<double> norm;  // |N|(t), envelope diagnostic
};

enum class Category { Approaching, Bouncing, Entering, Oscillating, NeverZero, AlwaysZero };

const char* to_string(Category c);
char category_letter(Category c);  // A B E O N Z

struct Interval {
    double t_begin = 0;
    double t_end = 0;
};

struct ZeroSet {
    std::vector<Interval> intervals;   // dwell >= dwell_min samples
    std::vector<double> points;        // isolated touching zeros
    bool decay_tail = false;           // terminal sub-threshold run that is
                                       // still strictly decaying (asymptotic
                                       // approach, not a zero interval)
};

struct ZeroOptions {
    double zero_tol = -1;   // < 0: 1e-4 * series max
    int dwell_min = 3;      // samples
};

// Zero structure of a sampled non-negative series. Runs below zero_tol of
// dwell_min or more samples become intervals; shorter sub-threshold runs
// and cusp-extrapolated local minima (one-sided-slope extrapolation dips
// below zero_tol) become points. |cos|-type cusps are invisible to a pure
// value threshold at any realistic sampling rate, hence the extrapolation.
ZeroSet zero_set(const std::vector<double>& series, const std::vector<double>& t,
                 const ZeroOptions& opt = {});

struct CategoryResult {
    Category category = Category::NeverZero;
    bool asymptotic = false;  // "B-like": minima decay toward zero without reaching it
    ZeroSet zeros;
    double margin = 0;        // distance of the decision quantity to its threshold
};

CategoryResult classify_single(const std::vector<double>& series, const std::vector<double>& t,
                               const ZeroOptions& opt = {});

struct JointVerdict {
    CategoryResult ent;
    CategoryResult disc;
    std::string joint;          // "AA", "EA", ..., "0A" when C == 0 throughout
    bool table_member = false;  // member of {AA, EA, EB, BB, OB}
    bool degenerate = false;    // entanglement identically zero
    bool invalid_combination = false;  // discord classified E or O
};

JointVerdict classify_joint(const Trajectory& traj, const ZeroOptions& opt = {});

// Maximal intervals where the series stays within flat_tol of its windowed
// mean while positive. window in samples.
std::vector<Interval> detect_frozen(const std::vector<double>& series,
                                    const std::vector<double>& t, int window = 16,
                                    double flat_tol = 1e-6);

}  // namespace qcorr
