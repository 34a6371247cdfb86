#include "lf/verify.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "lf/errors.hpp"

namespace lf {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
using cd = std::complex<double>;

double wrap(double a) {
    double w = std::fmod(a, kTwoPi);
    if (w < 0) w += kTwoPi;
    if (kTwoPi - w < 1e-12) w = 0.0;
    return w;
}

double torus_distance(std::pair<double, double> a, std::pair<double, double> b) {
    auto d = [](double u, double v) {
        const double t = std::abs(wrap(u) - wrap(v));
        return std::min(t, kTwoPi - t);
    };
    return std::hypot(d(a.first, b.first), d(a.second, b.second));
}

FloquetPoint polish(const std::function<double(FloquetPoint)>& f, FloquetPoint p, double step) {
    double fp = f(p);
    double h = step;
    while (h > 1e-13) {
        bool moved = false;
        for (auto [dx, dy] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}, {1, -1}, {-1, 1}}) {
            const FloquetPoint c{p.theta1 + h * dx, p.theta2 + h * dy};
            const double fc = f(c);
            if (fc < fp) {
                fp = fc;
                p = c;
                moved = true;
            }
        }
        if (!moved) h /= 2;
    }
    return p;
}

cd shifted_det(const HermitianMatrix& h0, const std::vector<double>& q, cd lambda, cd shift) {
    Eigen::MatrixXcd m = h0;
    for (Eigen::Index i = 0; i < m.rows(); ++i) m(i, i) += lambda * q[i] - shift;
    return complex_determinant(m);
}

}  // namespace

MinResult torus_minimize(const std::function<double(FloquetPoint)>& f, int grid_n) {
    if (grid_n < 4) throw Error(ErrorCode::invalid_argument, "grid_n must be at least 4", "grid_n");
    const double h = kTwoPi / grid_n;
    std::vector<double> v(static_cast<std::size_t>(grid_n) * grid_n);
    for (int j = 0; j < grid_n; ++j)
        for (int i = 0; i < grid_n; ++i) v[j * grid_n + i] = f({i * h, j * h});
    std::vector<int> order;
    for (int j = 0; j < grid_n; ++j)
        for (int i = 0; i < grid_n; ++i) {
            const double c = v[j * grid_n + i];
            bool local = true;
            for (int dj = -1; dj <= 1 && local; ++dj)
                for (int di = -1; di <= 1; ++di)
                    if (v[floor_mod(j + dj, grid_n) * grid_n + floor_mod(i + di, grid_n)] < c) {
                        local = false;
                        break;
                    }
            if (local) order.push_back(j * grid_n + i);
        }
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return v[a] < v[b]; });
    if (order.size() > 8) order.resize(8);
    MinResult best{INFINITY, {}};
    for (int idx : order) {
        const FloquetPoint p = polish(f, {(idx % grid_n) * h, (idx / grid_n) * h}, h);
        const double fv = f(p);
        if (fv < best.value) best = {fv, {wrap(p.theta1), wrap(p.theta2)}};
    }
    return best;
}

std::complex<double> complex_determinant(const Eigen::MatrixXcd& m) {
    return Eigen::PartialPivLU<Eigen::MatrixXcd>(m).determinant();
}

std::vector<double> fit_polynomial(const std::function<cd(cd)>& p, int degree, int nodes,
                                   double radius) {
    if (nodes <= degree)
        throw Error(ErrorCode::ill_conditioned,
                    "a degree " + std::to_string(degree) + " fit needs more than " +
                        std::to_string(degree) + " nodes",
                    "nodes");
    std::vector<cd> values(nodes);
    double scale = 0.0;
    for (int k = 0; k < nodes; ++k) {
        values[k] = p(std::polar(radius, kTwoPi * k / nodes));
        scale = std::max(scale, std::abs(values[k]));
    }
    std::vector<double> coeffs(degree + 1);
    for (int j = 0; j <= degree; ++j) {
        cd acc = 0.0;
        for (int k = 0; k < nodes; ++k) acc += values[k] * std::polar(1.0, -kTwoPi * j * k / nodes);
        acc /= static_cast<double>(nodes) * std::pow(radius, j);
        if (std::abs(acc.imag()) * std::pow(radius, j) > 1e-9 * std::max(scale, 1.0))
            throw Error(ErrorCode::ill_conditioned,
                        "coefficient fit is ill-conditioned; try a smaller node radius", "nodes");
        coeffs[j] = acc.real();
    }
    return coeffs;
}

// ---- triangular ----

double tri_X(FloquetPoint t) {
    const double s = std::sin(t.theta1) + std::sin(t.theta2) - std::sin(t.theta1 + t.theta2);
    return -4.0 * s * s;
}

double tri_W1(double l, double e) {
    return -std::pow(l, 4) - 4 * std::pow(l, 3) + 2 * e * std::pow(l, 3) + 12 * e * e * l -
           2 * std::pow(e, 3) * (4 + l) + std::pow(e, 4);
}

double tri_W2(double l, double e) { return tri_W1(l, e) - 16 * e * (l - e); }

double tri_det_poly(FloquetPoint t, double l, double e) {
    const double c = 3 - std::cos(t.theta1) - std::cos(t.theta2) - std::cos(t.theta1 + t.theta2);
    return tri_X(t) - 4 * e * (l - e) * c + tri_W1(l, e);
}

double tri_det_numeric(FloquetPoint t, double l, double e) {
    const auto q = builtin("tri-2x2");
    const auto h = build_free_floquet(LatticeKind::triangular, q.periods, {-t.theta1, t.theta2});
    return shifted_det(h, q.values, l, -2.0 + e).real();
}

std::pair<double, double> tri_gap_exact(double lambda) {
    if (!(lambda > 0.0 && lambda <= 0.5))
        throw Error(ErrorCode::out_of_range, "tri_gap_exact is validated for 0 < lambda <= 0.5",
                    "lambda");
    return {-std::sqrt(4 + lambda * lambda), -2 + lambda};
}

double trig_poly_g(FloquetPoint t, double a) {
    const double s = std::sin(t.theta1) + std::sin(t.theta2) - std::sin(t.theta1 + t.theta2);
    return 4 * s * s + a * (1 + std::cos(t.theta1) + std::cos(t.theta2) + std::cos(t.theta1 + t.theta2));
}

MinResult trig_poly_nonneg(double a, int grid_n) {
    if (!(a >= 0.0 && a <= 54.0))
        throw Error(ErrorCode::out_of_range, "a must lie in [0, 54]", "a");
    return torus_minimize([a](FloquetPoint t) { return trig_poly_g(t, a); }, grid_n);
}

MinResult trig_poly_max(double a, int grid_n) {
    auto r = torus_minimize([a](FloquetPoint t) { return -trig_poly_g(t, a); }, grid_n);
    r.value = -r.value;
    return r;
}

// ---- trigonometric systems ----

const char* to_string(TrigSystem id) {
    switch (id) {
        case TrigSystem::tri_construction: return "tri_construction";
        case TrigSystem::tri_grad: return "tri_grad";
        case TrigSystem::sqn_construction: return "sqn_construction";
        case TrigSystem::sqn_grad: return "sqn_grad";
    }
    return "";
}

TrigSystem parse_trig_system(const std::string& name) {
    for (auto id : {TrigSystem::tri_construction, TrigSystem::tri_grad,
                    TrigSystem::sqn_construction, TrigSystem::sqn_grad})
        if (name == to_string(id)) return id;
    throw Error(ErrorCode::invalid_argument, "unknown trigonometric system '" + name + "'", "system");
}

namespace {

void residual_and_jacobian(TrigSystem id, double x, double y, double energy, Eigen::VectorXd& f,
                           Eigen::MatrixXd& j) {
    const double sx = std::sin(x), cx = std::cos(x), sy = std::sin(y), cy = std::cos(y);
    const double sm = std::sin(x - y), cm = std::cos(x - y), sp = std::sin(x + y), cp = std::cos(x + y);
    const bool sqn = id == TrigSystem::sqn_construction || id == TrigSystem::sqn_grad;
    const bool grad = id == TrigSystem::tri_grad || id == TrigSystem::sqn_grad;
    const int m = grad ? 3 : 2;
    f.resize(m);
    j.resize(m, 2);
    f(0) = cx + cy + cm + (sqn ? cp : 0.0) - energy / 2;
    j(0, 0) = -sx - sm - (sqn ? sp : 0.0);
    j(0, 1) = -sy + sm - (sqn ? sp : 0.0);
    if (id == TrigSystem::tri_construction) {
        f(1) = sx + sy;
        j(1, 0) = cx;
        j(1, 1) = cy;
        return;
    }
    f(1) = sx + sm + (sqn ? sp : 0.0);
    j(1, 0) = cx + cm + (sqn ? cp : 0.0);
    j(1, 1) = -cm + (sqn ? cp : 0.0);
    if (!grad) return;
    f(2) = sy - sm + (sqn ? sp : 0.0);
    j(2, 0) = -cm + (sqn ? cp : 0.0);
    j(2, 1) = cy + cm + (sqn ? cp : 0.0);
}

}  // namespace

std::vector<double> trig_residual(TrigSystem id, double x, double y, double energy) {
    Eigen::VectorXd f;
    Eigen::MatrixXd j;
    residual_and_jacobian(id, x, y, energy, f, j);
    return {f.data(), f.data() + f.size()};
}

TrigSolutions solve_trig_system(TrigSystem id, double energy, int grid_n, double tol) {
    if (grid_n < 8) throw Error(ErrorCode::invalid_argument, "grid_n must be at least 8", "grid_n");
    const double h = kTwoPi / grid_n;
    std::vector<double> norm(static_cast<std::size_t>(grid_n) * grid_n);
    Eigen::VectorXd f;
    Eigen::MatrixXd jac;
    for (int b = 0; b < grid_n; ++b)
        for (int a = 0; a < grid_n; ++a) {
            residual_and_jacobian(id, a * h, b * h, energy, f, jac);
            norm[b * grid_n + a] = f.norm();
        }

    TrigSolutions out;
    for (int b = 0; b < grid_n; ++b) {
        for (int a = 0; a < grid_n; ++a) {
            const double c = norm[b * grid_n + a];
            if (c > 0.5) continue;
            bool local = true;
            for (int db = -1; db <= 1 && local; ++db)
                for (int da = -1; da <= 1; ++da)
                    if (norm[floor_mod(b + db, grid_n) * grid_n + floor_mod(a + da, grid_n)] < c) {
                        local = false;
                        break;
                    }
            if (!local) continue;

            // Levenberg-Marquardt on the (possibly overdetermined) system.
            double x = a * h, y = b * h, mu = 1e-6;
            residual_and_jacobian(id, x, y, energy, f, jac);
            double fn = f.norm();
            for (int it = 0; it < 200 && fn > 1e-15 && mu < 1e12; ++it) {
                const Eigen::Matrix2d lhs = jac.transpose() * jac + mu * Eigen::Matrix2d::Identity();
                const Eigen::Vector2d step = -lhs.ldlt().solve(jac.transpose() * f);
                Eigen::VectorXd f2;
                Eigen::MatrixXd j2;
                residual_and_jacobian(id, x + step(0), y + step(1), energy, f2, j2);
                if (f2.norm() < fn) {
                    x += step(0);
                    y += step(1);
                    f = f2;
                    jac = j2;
                    fn = f2.norm();
                    mu = std::max(mu / 10, 1e-15);
                } else {
                    mu *= 10;
                }
            }
            if (fn > 1e-11) continue;
            // A root on a curve of solutions has a rank-deficient Jacobian.
            const Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac);
            const auto sv = svd.singularValues();
            if (sv(1) <= 1e-8 * std::max(sv(0), 1.0))
                throw Error(ErrorCode::solution_family,
                            std::string(to_string(id)) + " has a curve of solutions through (" +
                                std::to_string(wrap(x)) + "," + std::to_string(wrap(y)) + ") at E = " +
                                std::to_string(energy),
                            "energy");
            const std::pair<double, double> root{wrap(x), wrap(y)};
            bool seen = false;
            for (const auto& r : out.points)
                if (torus_distance(r, root) < tol) seen = true;
            if (!seen) out.points.push_back(root);
        }
    }
    if (out.points.size() > 16)
        throw Error(ErrorCode::solution_family,
                    std::string(to_string(id)) + " has a continuum of solutions at E = " +
                        std::to_string(energy),
                    "energy");
    std::sort(out.points.begin(), out.points.end());
    if (id == TrigSystem::sqn_construction) {
        for (const auto& [x, y] : out.points) {
            const double fx = std::min(x, kTwoPi - x) < 1e-8 ? 0.0 : kPi;
            const TrigFamily fam{fx, 1 + 2 * std::cos(y)};
            bool seen = false;
            for (const auto& g : out.families)
                if (g.x == fam.x && std::abs(g.one_plus_2cos_y - fam.one_plus_2cos_y) < tol) seen = true;
            if (!seen) out.families.push_back(fam);
        }
    }
    return out;
}

std::pair<double, double> tri_construction_solution(double energy) {
    if (!(energy >= -3.0 && energy <= 6.0))
        throw Error(ErrorCode::out_of_range, "energy must lie in [-3, 6]", "energy");
    const double c = std::clamp((-1 + std::sqrt(3 + energy)) / 2, -1.0, 1.0);
    const double x = std::acos(c);
    return {x, kTwoPi - x};
}

// ---- perturb-and-count ----

std::array<double, 2> dispersion_gradient(LatticeKind kind, Periods periods, FloquetPoint theta,
                                          FloquetIndex l) {
    const double x = (theta.theta1 + kTwoPi * l.l1) / periods.p1;
    const double y = (theta.theta2 + kTwoPi * l.l2) / periods.p2;
    double gx = -2 * std::sin(x) - 2 * std::sin(x - y);
    double gy = -2 * std::sin(y) + 2 * std::sin(x - y);
    if (kind == LatticeKind::ehm) {
        gx -= 2 * std::sin(x + y);
        gy -= 2 * std::sin(x + y);
    } else if (kind != LatticeKind::triangular) {
        throw Error(ErrorCode::invalid_argument, "j_sets supports triangular and ehm", "lattice");
    }
    return {gx / periods.p1, gy / periods.p2};
}

JSetReport j_sets(LatticeKind kind, Periods periods, double energy, FloquetPoint theta_tilde,
                  std::array<double, 2> beta, double tol) {
    if (!(tol > 0.0)) throw Error(ErrorCode::invalid_argument, "tol must be positive", "tol");
    if (std::abs(std::hypot(beta[0], beta[1]) - 1.0) > 1e-12)
        throw Error(ErrorCode::invalid_argument, "beta must be a unit vector", "beta");
    JSetReport rep;
    rep.energy = energy;
    rep.theta_tilde = theta_tilde;
    rep.beta = beta;
    for (int l2 = 0; l2 < periods.p2; ++l2) {
        for (int l1 = 0; l1 < periods.p1; ++l1) {
            const FloquetIndex l{l1, l2};
            const double e = kind == LatticeKind::ehm ? dispersion_sqn(periods, theta_tilde, l)
                                                      : dispersion_tri(periods, theta_tilde, l);
            if (std::abs(e - energy) > tol) continue;
            ++rep.r;
            const auto g = dispersion_gradient(kind, periods, theta_tilde, l);
            const double d = beta[0] * g[0] + beta[1] * g[1];
            if (std::abs(d) <= tol) rep.J0.push_back(l);
            else if (d > 0) rep.Jplus.push_back(l);
            else rep.Jminus.push_back(l);
            if (std::hypot(g[0], g[1]) <= tol) rep.grad_zero.push_back(l);
        }
    }
    return rep;
}

FloquetPoint ehm_census_theta(Periods periods) {
    const int k1 = periods.p1 % 3, k2 = periods.p2 % 3;
    return {kTwoPi * k1 / 3.0, (k2 + 1) * kPi / 4.0};
}

std::pair<int, int> ehm_census_prediction(Periods periods) {
    const int q2 = periods.p2 / 3, k2 = periods.p2 % 3;
    return {q2, 2 * q2 + k2};
}

// ---- hexagonal ----

namespace {

double hex_C(FloquetPoint t) {
    return std::cos(t.theta1) + std::cos(t.theta1 - t.theta2) + std::cos(t.theta2);
}

}  // namespace

double hex_X0(FloquetPoint t) {
    const double v = -std::sin(t.theta1) + std::sin(t.theta1 - t.theta2) + std::sin(t.theta2);
    return -4 * v * v;
}

double hex_X4(FloquetPoint t, double s, HexCenter center) {
    const double pm = center == HexCenter::minus1 ? -1.0 : 1.0;
    return 8 * (s + pm) * (2 * s - pm) * (3 - hex_C(t));
}

double hex_X6(FloquetPoint t, double s, HexCenter center) {
    const double pm = center == HexCenter::minus1 ? -1.0 : 1.0;
    return -1 - pm * 12 * s + 72 * s * s - pm * 16 * s * s * s -
           4 * s * s * (pm * 4 * s + 1) * hex_C(t);
}

double hex_Y0(FloquetPoint t) {
    const double a = t.theta1, b = t.theta2;
    return 15 + 2 * std::cos(2 * a) - 4 * std::cos(a - 2 * b) + 2 * std::cos(2 * a - 2 * b) -
           4 * std::cos(2 * a - b) + 2 * std::cos(2 * b) - 4 * std::cos(a + b);
}

double hex_Y2(FloquetPoint t, double s) { return 2 * (5 - 26 * s * s + (2 + 4 * s * s) * hex_C(t)); }

double hex_Y4(FloquetPoint t, double s) {
    return (1 - s * s) * (-3 - 42 * s * s + 4 * (2 + s * s) * hex_C(t));
}

std::vector<double> hex_det_coeffs(FloquetPoint theta, double s, HexCenter center, int nodes) {
    if (std::abs(s) > 1.0) throw Error(ErrorCode::out_of_range, "|s| must be at most 1", "s");
    const auto q = builtin("hex-2x2");
    const auto h0 = build_free_floquet(LatticeKind::hexagonal, q.periods, theta);
    const double e0 = center == HexCenter::plus1 ? 1.0 : center == HexCenter::minus1 ? -1.0 : 0.0;
    const int d = center == HexCenter::zero ? 1 : 2;
    const int degree = 8 * d;
    if (nodes == 0) nodes = 2 * degree + 2;
    return fit_polynomial(
        [&](cd lambda) { return shifted_det(h0, q.values, lambda, e0 + s * std::pow(lambda, d)); },
        degree, nodes);
}

MinResult hex_Y0_nonneg(int grid_n) { return torus_minimize(hex_Y0, grid_n); }

bool hex_linear_gap_impossibility(const PeriodicPotential& q, double c,
                                  const std::vector<double>& lambdas) {
    if (!(c > 0.0)) throw Error(ErrorCode::invalid_argument, "c must be positive", "c");
    if (q.kind != LatticeKind::hexagonal)
        throw Error(ErrorCode::mismatch, "potential must live on the hexagonal lattice", "potential");
    for (double lambda : lambdas) {
        const auto spec = spectrum(band_edges(q.kind, q.periods, q.scaled(lambda), default_grid(q.periods)));
        for (double center : {-1.0, 1.0}) {
            const double lo = center - c * lambda, hi = center + c * lambda;
            bool hit = false;
            for (const auto& iv : spec.intervals)
                if (iv.hi > lo && iv.lo < hi) hit = true;
            if (!hit) return false;
        }
    }
    return true;
}

bool hex_containments_hold(const PeriodicPotential& q, double lambda) {
    const auto spec = spectrum(band_edges(q.kind, q.periods, q.scaled(lambda), default_grid(q.periods)));
    if (spec.components() != 4) return false;
    auto bracket = [&](double center, double inner, double outer) {
        const auto g = gap_at(spec, center);
        return g.status == GapQuery::Status::gap && g.left <= center - inner && g.right >= center + inner &&
               g.left >= center - outer && g.right <= center + outer;
    };
    const double l2 = lambda * lambda;
    return bracket(0.0, lambda / 5, lambda / 4) && bracket(-1.0, l2 / 20, l2 / 2) && bracket(1.0, l2 / 20, l2 / 2);
}

double hex_containment_threshold(const PeriodicPotential& q, double step, double lambda_max, double tol) {
    if (!(step > 0.0) || !(tol > 0.0) || !(lambda_max > step))
        throw Error(ErrorCode::invalid_argument, "need 0 < step < lambda_max and tol > 0", "step");
    double good = 0.0, bad = NAN;
    for (double lambda = step; lambda <= lambda_max + 1e-12; lambda += step) {
        if (!hex_containments_hold(q, lambda)) {
            bad = lambda;
            break;
        }
        good = lambda;
    }
    if (std::isnan(bad)) return good;
    while (bad - good > tol) {
        const double mid = (good + bad) / 2;
        (hex_containments_hold(q, mid) ? good : bad) = mid;
    }
    return good;
}

double hex_square_relation(Periods periods, FloquetPoint theta) {
    const auto h = build_free_floquet(LatticeKind::hexagonal, periods, theta);
    const auto t = build_free_floquet(LatticeKind::triangular, periods, theta);
    const Eigen::MatrixXcd h2 = h * h;
    const int cells = periods.p1 * periods.p2;
    // Site 2*c + sigma moves to sigma*cells + c.
    Eigen::MatrixXcd block = Eigen::MatrixXcd::Zero(2 * cells, 2 * cells);
    for (int u = 0; u < 2 * cells; ++u)
        for (int v = 0; v < 2 * cells; ++v) block((u % 2) * cells + u / 2, (v % 2) * cells + v / 2) = h2(u, v);
    Eigen::MatrixXcd expect = Eigen::MatrixXcd::Zero(2 * cells, 2 * cells);
    expect.topLeftCorner(cells, cells) = t;
    expect.bottomRightCorner(cells, cells) = t;
    expect += 3.0 * Eigen::MatrixXcd::Identity(2 * cells, 2 * cells);
    return (block - expect).cwiseAbs().maxCoeff();
}

// ---- ehm ----

EhmY ehm_Y(double s) {
    const double r15 = std::sqrt(15.0);
    const double s2 = s * s, s3 = s2 * s, s4 = s3 * s, s5 = s4 * s, s6 = s5 * s, s7 = s6 * s,
                 s8 = s7 * s, s9 = s8 * s;
    EhmY y;
    y.Y2 = 512 * (20 - 9 * s2);
    y.Y3 = 256 * (4 - 20 * s + 3 * s3);
    y.Y4 = 16 * (364 + 144 * s - 504 * s2 + 81 * s4);
    y.Y5 = 16 * (64 - 196 * s - 48 * s2 + 104 * s3 - 9 * s5);
    y.Y61 = 176 + 704 * s - 3132 * s2 - 496 * s3 + 1376 * s4 - 96 * s6;
    y.Y62 = -80 + (96 * r15 - 320) * s + (1380 + 144 * r15) * s2 + 208 * s3 - (584 + 54 * r15) * s4 + 42 * s6;
    y.Y63 = -80 - (320 + 96 * r15) * s + (1380 - 144 * r15) * s2 + 208 * s3 - (584 - 54 * r15) * s4 + 42 * s6;
    y.Y64 = -16 - 64 * s + 372 * s2 + 80 * s3 - 208 * s4 + 12 * s6;
    y.Y65 = 8 * std::pow(2 * s - 1, 3);
    y.Y8 = 12 + 32 * s - 360 * s2 - 512 * s3 + 1025 * s4 + 96 * s5 - 224 * s6 + 9 * s8;
    y.Y9 = 12 * s + 16 * s2 - 120 * s3 - 128 * s4 + 205 * s5 + 16 * s6 - 32 * s7 + s9;
    return y;
}

double ehm_Y9_derivative(double s) {
    // Term-by-term derivative of the Y9 coefficient list.
    static const std::array<double, 10> y9 = {0, 12, 16, -120, -128, 205, 16, -32, 0, 1};
    double acc = 0.0;
    for (int k = 9; k >= 1; --k) acc = acc * s + k * y9[k];
    return acc;
}

std::array<double, 10> ehm_X_closed(FloquetPoint t, double s) {
    const EhmY y = ehm_Y(s);
    const double a = std::sin(t.theta1 / 2), b = std::sin(t.theta2 / 2);
    const double p2 = a * a * b * b, p4 = p2 * p2, p6 = p4 * p2;
    return {4096 * p6,
            0.0,
            y.Y2 * p4,
            y.Y3 * p4,
            y.Y4 * p2,
            y.Y5 * p2,
            y.Y61 + y.Y62 * std::cos(t.theta1) + y.Y63 * std::cos(t.theta2) +
                y.Y64 * std::cos(t.theta1) * std::cos(t.theta2) +
                y.Y65 * std::sin(t.theta1) * std::sin(t.theta2),
            0.0,
            y.Y8,
            y.Y9};
}

std::vector<double> ehm_det_coeffs(FloquetPoint theta, double s, int nodes) {
    if (!(std::abs(s) < 1.0)) throw Error(ErrorCode::out_of_range, "|s| must be below 1", "s");
    const auto q = builtin("ehm-3x3");
    const auto h0 = build_free_floquet(LatticeKind::ehm, q.periods, theta);
    const int degree = 9;
    if (nodes == 0) nodes = 2 * degree + 2;
    return fit_polynomial([&](cd lambda) { return shifted_det(h0, q.values, lambda, -1.0 - s * lambda); },
                          degree, nodes);
}

}  // namespace lf
