#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <functional>
#include <vector>

namespace qcorr {

struct NelderMeadResult {
    Eigen::VectorXd x;
    double fval = 0;
    int iterations = 0;
};

// Plain Nelder-Mead on R^n. Good enough for the smooth low-dimensional
// objectives here (measurement angles, chart coordinates); no derivatives.
inline NelderMeadResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f,
                                    const Eigen::VectorXd& x0, double step,
                                    double xatol = 1e-10, double fatol = 1e-13,
                                    int max_iter = 4000) {
    const int n = int(x0.size());
    std::vector<Eigen::VectorXd> xs(n + 1, x0);
    std::vector<double> fs(n + 1);
    for (int i = 0; i < n; ++i) xs[i + 1](i) += step;
    for (int i = 0; i <= n; ++i) fs[i] = f(xs[i]);

    std::vector<int> ord(n + 1);
    int iter = 0;
    for (; iter < max_iter; ++iter) {
        for (int i = 0; i <= n; ++i) ord[i] = i;
        std::sort(ord.begin(), ord.end(), [&](int a, int b) { return fs[a] < fs[b]; });
        int best = ord[0], worst = ord[n], second = ord[n - 1];

        double xspread = 0;
        for (int i = 1; i <= n; ++i) xspread = std::max(xspread, (xs[ord[i]] - xs[best]).lpNorm<Eigen::Infinity>());
        if (xspread < xatol && fs[worst] - fs[best] < fatol) break;

        Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
        for (int i = 0; i <= n; ++i)
            if (i != worst) centroid += xs[i];
        centroid /= n;

        Eigen::VectorXd xr = centroid + (centroid - xs[worst]);
        double fr = f(xr);
        if (fr < fs[best]) {
            Eigen::VectorXd xe = centroid + 2.0 * (centroid - xs[worst]);
            double fe = f(xe);
            if (fe < fr) { xs[worst] = xe; fs[worst] = fe; }
            else { xs[worst] = xr; fs[worst] = fr; }
        } else if (fr < fs[second]) {
            xs[worst] = xr; fs[worst] = fr;
        } else {
            Eigen::VectorXd xc = centroid + 0.5 * (xs[worst] - centroid);
            double fc = f(xc);
            if (fc < fs[worst]) { xs[worst] = xc; fs[worst] = fc; }
            else {
                for (int i = 0; i <= n; ++i) {
                    if (i == best) continue;
                    xs[i] = xs[best] + 0.5 * (xs[i] - xs[best]);
                    fs[i] = f(xs[i]);
                }
            }
        }
    }
    int best = 0;
    for (int i = 1; i <= n; ++i)
        if (fs[i] < fs[best]) best = i;
    return {xs[best], fs[best], iter};
}

}  // namespace qcorr
