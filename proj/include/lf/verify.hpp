#pragma once

#include <array>
#include <complex>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "lf/bands.hpp"

namespace lf {

struct MinResult {
    double value;
    FloquetPoint arg;
};

// Grid search over [0,2pi)^2 followed by a local compass-search polish of the
// best grid cells.
MinResult torus_minimize(const std::function<double(FloquetPoint)>& f, int grid_n);

// ---- triangular 2x2 example ----

double tri_X(FloquetPoint theta);
double tri_W1(double lambda, double eps);
double tri_W2(double lambda, double eps);

// Closed-form expansion of det(H_lambda(theta) - (-2+eps) I).
double tri_det_poly(FloquetPoint theta, double lambda, double eps);

// The same determinant evaluated numerically. The printed 4x4 matrix draws the
// diagonal bond along (+1,+1), which is our stencil with theta1 negated (up to a
// diagonal gauge on the l1 = 1 sites), so the numeric matrix is built at (-theta1, theta2).
double tri_det_numeric(FloquetPoint theta, double lambda, double eps);

std::pair<double, double> tri_gap_exact(double lambda);

double trig_poly_g(FloquetPoint theta, double a);
MinResult trig_poly_nonneg(double a, int grid_n);
MinResult trig_poly_max(double a, int grid_n);

// ---- trigonometric systems ----

enum class TrigSystem { tri_construction, tri_grad, sqn_construction, sqn_grad };

const char* to_string(TrigSystem id);
TrigSystem parse_trig_system(const std::string& name);

std::vector<double> trig_residual(TrigSystem id, double x, double y, double energy);

struct TrigFamily {
    double x;
    double one_plus_2cos_y;
};

struct TrigSolutions {
    std::vector<std::pair<double, double>> points;  // in [0,2pi)^2, sorted
    std::vector<TrigFamily> families;                // sqn_construction only
};

TrigSolutions solve_trig_system(TrigSystem id, double energy, int grid_n = 512,
                                double tol = 1e-6);

std::pair<double, double> tri_construction_solution(double energy);

// ---- perturb-and-count ----

struct JSetReport {
    double energy = 0.0;
    FloquetPoint theta_tilde;
    std::array<double, 2> beta{};
    std::vector<FloquetIndex> J0, Jplus, Jminus;
    std::vector<FloquetIndex> grad_zero;  // indices with vanishing gradient
    int r = 0;
};

std::array<double, 2> dispersion_gradient(LatticeKind kind, Periods periods, FloquetPoint theta,
                                          FloquetIndex l);

JSetReport j_sets(LatticeKind kind, Periods periods, double energy, FloquetPoint theta_tilde,
                  std::array<double, 2> beta, double tol = 1e-9);

// theta-tilde used for the ehm census at E = -1 when p1 is not a multiple of 3.
FloquetPoint ehm_census_theta(Periods periods);
// Predicted (|J+|, |J-|) for that census.
std::pair<int, int> ehm_census_prediction(Periods periods);

// ---- hexagonal 2x2 example ----

enum class HexCenter { plus1, minus1, zero };

// Coefficients of det(H_lambda(theta) - (E0 + s lambda^d) I) in lambda, for the
// hex-2x2 potential (d = 2 at E0 = +-1, d = 1 at E0 = 0). nodes = 0 picks
// twice the degree plus two.
std::vector<double> hex_det_coeffs(FloquetPoint theta, double s, HexCenter center, int nodes = 0);

double hex_X0(FloquetPoint theta);
double hex_X4(FloquetPoint theta, double s, HexCenter center);
double hex_X6(FloquetPoint theta, double s, HexCenter center);
double hex_Y0(FloquetPoint theta);
double hex_Y2(FloquetPoint theta, double s);
double hex_Y4(FloquetPoint theta, double s);

MinResult hex_Y0_nonneg(int grid_n);

bool hex_linear_gap_impossibility(const PeriodicPotential& q, double c,
                                  const std::vector<double>& lambdas);

// Four components, the gap at 0 between (-l/5, l/5) and (-l/4, l/4), the gaps
// at +-1 between +-1 -+ l^2/20 and +-1 -+ l^2/2.
bool hex_containments_hold(const PeriodicPotential& q, double lambda);

// Scans lambda = step, 2 step, ... up to lambda_max and bisects the first
// failure down to tol. Returns the last lambda at which the containments hold
// (0 if they fail at step).
double hex_containment_threshold(const PeriodicPotential& q, double step, double lambda_max, double tol);

double hex_square_relation(Periods periods, FloquetPoint theta);

// ---- ehm 3x3 example ----

// Coefficients X_0..X_9 of det(H_lambda(theta) + (1 + s lambda) I) for ehm-3x3.
std::vector<double> ehm_det_coeffs(FloquetPoint theta, double s, int nodes = 0);

struct EhmY {
    double Y2, Y3, Y4, Y5, Y61, Y62, Y63, Y64, Y65, Y8, Y9;
};

EhmY ehm_Y(double s);
double ehm_Y9_derivative(double s);
std::array<double, 10> ehm_X_closed(FloquetPoint theta, double s);

// ---- shared ----

// Coefficients of a polynomial of degree `degree` from its values on
// `nodes` roots of unity of radius `radius`. Throws Error(ill_conditioned)
// if the imaginary parts do not vanish.
std::vector<double> fit_polynomial(const std::function<std::complex<double>(std::complex<double>)>& p,
                                   int degree, int nodes, double radius = 1.0);

std::complex<double> complex_determinant(const Eigen::MatrixXcd& m);

}  // namespace lf
