#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mutarate/date.hpp"
#include "mutarate/distance.hpp"

namespace mutarate {

struct RateObservation {
    std::string label;
    Date date;
    long elapsed_days = 0;
    double distance = 0.0;

    friend bool operator==(const RateObservation&, const RateObservation&) = default;
};

struct Representative {
    int year = 0;
    std::string label;      // row/column label in the distance matrix
    Date date;
};

// One observation per representative: its distance to the reference-year
// representative against days elapsed since `reference_date`. The reference
// itself contributes (0 days, 0 distance). Sorted by elapsed days, then label.
std::vector<RateObservation> build_observations(const std::vector<Representative>& reps,
                                                int reference_year, const Date& reference_date,
                                                const DistanceMatrix& distances,
                                                bool include_reference = true);

struct BandPoint {
    double x = 0.0;
    double fitted = 0.0;
    double lower = 0.0;
    double upper = 0.0;
};

struct RateFit {
    int degree = 1;
    std::vector<double> coefficients;  // ascending powers of x (days)
    double rate = 0.0;                 // coefficient of x
    double intercept = 0.0;
    std::vector<double> x;
    std::vector<double> y;
    std::vector<double> residuals;
    double rss = 0.0;
    std::size_t n = 0;
    std::vector<BandPoint> ci95;       // empty until confidence_band() fills it

    double evaluate(double at) const;
};

// Least squares via Householder QR of the Vandermonde design matrix.
RateFit fit_polynomial(const std::vector<double>& x, const std::vector<double>& y, int degree = 1);
RateFit fit_polynomial(const std::vector<RateObservation>& obs, int degree = 1);

// Two-sided Student-t quantile used by the band, exposed for testing.
double t_quantile(double level, double dof);

// Pointwise mean-response band, fitted(x) +/- t(n-p, (1+level)/2) * se(x), at
// the requested abscissae. Requires n > degree + 1 unless the fit is exact
// (rss == 0), in which case the band has zero width.
std::vector<BandPoint> confidence_band(const RateFit& fit, const std::vector<double>& at, double level = 0.95);

struct Prediction {
    long elapsed_days = 0;
    double distance = 0.0;
    bool extrapolated = false;
};

Prediction predict(const RateFit& fit, const Date& reference_date, const Date& when);

inline constexpr double kDaysPerYear = 365.25;

std::string write_observations_csv(const std::vector<RateObservation>& obs);
std::vector<RateObservation> read_observations_csv(std::string_view csv);

nlohmann::json fit_to_json(const RateFit& fit);

}  // namespace mutarate
