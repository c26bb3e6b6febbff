#include "qcorr/classify.hpp"

#include <algorithm>
#include <cmath>

namespace qcorr {

const char* to_string(Category c) {
    switch (c) {
        case Category::Approaching: return "approaching";
        case Category::Bouncing: return "bouncing";
        case Category::Entering: return "entering";
        case Category::Oscillating: return "oscillating";
        case Category::NeverZero: return "never-zero";
        case Category::AlwaysZero: return "always-zero";
    }
    return "?";
}

char category_letter(Category c) {
    switch (c) {
        case Category::Approaching: return 'A';
        case Category::Bouncing: return 'B';
        case Category::Entering: return 'E';
        case Category::Oscillating: return 'O';
        case Category::NeverZero: return 'N';
        case Category::AlwaysZero: return 'Z';
    }
    return '?';
}

ZeroSet zero_set(const std::vector<double>& series, const std::vector<double>& t,
                 const ZeroOptions& opt) {
    const int n = int(series.size());
    if (n < 16) throw std::invalid_argument("zero_set: need at least 16 samples");
    if (int(t.size()) != n) throw std::invalid_argument("zero_set: grid/series size mismatch");

    double vmax = *std::max_element(series.begin(), series.end());
    double tol = opt.zero_tol >= 0 ? opt.zero_tol : 1e-4 * vmax;
    const double hard = std::max(1e-12, 1e-9 * vmax);

    ZeroSet zs;
    int i = 0;
    while (i < n) {
        if (series[i] >= tol) { ++i; continue; }
        int j = i;
        while (j < n && series[j] < tol) ++j;
        bool terminal = (j == n);
        if (terminal && j - i >= opt.dwell_min) {
            // terminal run: true death only if essentially zero in the tail;
            // a still-decaying oscillation is an asymptotic approach instead
            int q = std::max(1, (j - i) / 4);
            double head_max = 0, tail_max = 0;
            for (int m = i; m < i + q; ++m) head_max = std::max(head_max, series[m]);
            for (int m = j - q; m < j; ++m) tail_max = std::max(tail_max, series[m]);
            if (tail_max > hard && tail_max <= 0.2 * head_max) {
                zs.decay_tail = true;
                i = j;
                continue;
            }
        }
        if (j - i >= opt.dwell_min)
            zs.intervals.push_back({t[i], t[j - 1]});
        else {
            // short dip: take the minimum sample as the touching point
            int k = i;
            for (int m = i; m < j; ++m)
                if (series[m] < series[k]) k = m;
            zs.points.push_back(t[k]);
        }
        i = j;
    }

    // cusp-extrapolated touching zeros: local minima whose one-sided slopes
    // extrapolate below tol within half a grid step
    for (int k = 1; k + 1 < n; ++k) {
        if (!(series[k] < series[k - 1] && series[k] <= series[k + 1])) continue;
        if (series[k] < tol) continue;  // already covered above
        double dt = t[k + 1] - t[k];
        double sl = (series[k - 1] - series[k]) / (t[k] - t[k - 1]);
        double sr = (series[k + 1] - series[k]) / dt;
        double est = series[k] - 0.5 * std::min(sl, sr) * dt;
        if (est <= tol) zs.points.push_back(t[k]);
    }
    std::sort(zs.points.begin(), zs.points.end());
    return zs;
}

CategoryResult classify_single(const std::vector<double>& series, const std::vector<double>& t,
                               const ZeroOptions& opt) {
    CategoryResult r;
    const int n = int(series.size());
    double vmax = *std::max_element(series.begin(), series.end());
    if (vmax <= 1e-12) {
        r.category = Category::AlwaysZero;
        return r;
    }
    r.zeros = zero_set(series, t, opt);
    const double horizon = t.back();

    int finite = 0;
    bool terminal = false;
    double covered = 0;
    for (const auto& iv : r.zeros.intervals) {
        covered += iv.t_end - iv.t_begin;
        if (iv.t_end >= horizon - 1.5 * (t[1] - t[0]))
            terminal = true;
        else
            ++finite;
    }
    if (covered >= 0.999 * (horizon - t.front())) {
        r.category = Category::AlwaysZero;
        return r;
    }
    if (finite >= 1) {
        // disappearance with revival, possibly dying for good later
        r.category = Category::Oscillating;
        return r;
    }
    if (terminal) {
        r.category = Category::Entering;
        return r;
    }
    if (!r.zeros.points.empty()) {
        r.category = Category::Bouncing;
        return r;
    }

    // no zeros: bouncing-like if oscillatory minima head toward zero
    std::vector<double> mins;
    for (int k = 1; k + 1 < n; ++k)
        if (series[k] < series[k - 1] && series[k] <= series[k + 1] && series[k] < 0.25 * vmax)
            mins.push_back(series[k]);
    if (mins.size() >= 3 && mins.back() < 0.8 * mins.front()) {
        r.category = Category::Bouncing;
        r.asymptotic = true;
        return r;
    }

    // approaching vs never-zero from the terminal window
    int w = std::max(2, n / 10);
    double wmax = 0;
    for (int k = n - w; k < n; ++k) wmax = std::max(wmax, series[k]);
    double head = 0;
    for (int k = n - 2 * w; k < n - w; ++k) head = std::max(head, series[k]);
    r.margin = wmax / vmax;
    if (wmax < 1e-2 * vmax && wmax <= head) {
        r.category = Category::Approaching;
        return r;
    }
    r.category = Category::NeverZero;
    return r;
}

JointVerdict classify_joint(const Trajectory& traj, const ZeroOptions& opt) {
    JointVerdict v;
    v.ent = classify_single(traj.concurrence, traj.t, opt);
    v.disc = classify_single(traj.discord, traj.t, opt);
    v.degenerate = v.ent.category == Category::AlwaysZero;
    v.invalid_combination =
        v.disc.category == Category::Entering || v.disc.category == Category::Oscillating;

    char ce = v.degenerate ? '0' : category_letter(v.ent.category);
    v.joint = std::string{ce, category_letter(v.disc.category)};

    static const char* allowed[] = {"AA", "EA", "EB", "BB", "OB"};
    for (const char* a : allowed)
        if (v.joint == a) v.table_member = true;
    return v;
}

std::vector<Interval> detect_frozen(const std::vector<double>& series,
                                    const std::vector<double>& t, int window, double flat_tol) {
    const int n = int(series.size());
    if (n < window) return {};
    double vmax = *std::max_element(series.begin(), series.end());
    double pos_tol = std::max(1e-4 * vmax, 10.0 * flat_tol);

    std::vector<bool> flat(n, false);
    for (int i = 0; i < n; ++i) {
        int lo = std::max(0, i - window / 2);
        int hi = std::min(n, lo + window);
        double mean = 0;
        for (int k = lo; k < hi; ++k) mean += series[k];
        mean /= double(hi - lo);
        flat[i] = std::abs(series[i] - mean) <= flat_tol && series[i] > pos_tol;
    }
    std::vector<Interval> out;
    int i = 0;
    while (i < n) {
        if (!flat[i]) { ++i; continue; }
        int j = i;
        while (j < n && flat[j]) ++j;
        if (j - i >= window) out.push_back({t[i], t[j - 1]});
        i = j;
    }
    return out;
}

}  // namespace qcorr
