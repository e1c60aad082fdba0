// ftmcfe: flexible-threshold multi-client functional encryption for inner products
// Copyright 2026 The ftmcfe Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

namespace ftmcfe {

struct LinearFit {
    double slope = 0;
    double intercept = 0;
    double r2 = 0;
};

/// Least-squares line through (x, y) pairs. Undefined (nullopt) for fewer
/// than two distinct x values or a flat y with zero variance.
inline std::optional<LinearFit> linear_fit(const std::vector<double>& x, const std::vector<double>& y)
{
    const size_t n = x.size();
    if (n < 2 || y.size() != n)
        return std::nullopt;
    double sx = 0, sy = 0;
    for (size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx / static_cast<double>(n);
    const double my = sy / static_cast<double>(n);
    double sxx = 0, sxy = 0, syy = 0;
    for (size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0)
        return std::nullopt;
    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    if (syy == 0) {
        fit.r2 = 1.0;  // exactly flat data is fit perfectly by the flat line
        return fit;
    }
    double ss_res = 0;
    for (size_t i = 0; i < n; ++i) {
        const double e = y[i] - (fit.intercept + fit.slope * x[i]);
        ss_res += e * e;
    }
    fit.r2 = 1.0 - ss_res / syy;
    return fit;
}

struct MeanStddev {
    double mean = 0;
    double stddev = 0;
};

inline MeanStddev mean_stddev(const std::vector<double>& samples)
{
    MeanStddev out;
    if (samples.empty())
        return out;
    double s = 0;
    for (double v : samples)
        s += v;
    out.mean = s / static_cast<double>(samples.size());
    if (samples.size() > 1) {
        double acc = 0;
        for (double v : samples)
            acc += (v - out.mean) * (v - out.mean);
        out.stddev = std::sqrt(acc / static_cast<double>(samples.size() - 1));
    }
    return out;
}

}  // namespace ftmcfe
