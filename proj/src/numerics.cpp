#include "dosym/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dosym {

QuadratureRule gauss_legendre(int n, double a, double b) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: need n >= 1");
    if (!(a < b)) throw std::invalid_argument("gauss_legendre: need a < b");

    QuadratureRule rule;
    rule.a = a;
    rule.b = b;
    rule.nodes.resize(n);
    rule.weights.resize(n);

    // Newton iteration on P_n, nodes symmetric about the midpoint.
    const double xm = 0.5 * (b + a);
    const double xl = 0.5 * (b - a);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) <= 1e-15) break;
        }
        rule.nodes[i] = xm - xl * z;
        rule.nodes[n - 1 - i] = xm + xl * z;
        rule.weights[i] = 2.0 * xl / ((1.0 - z * z) * pp * pp);
        rule.weights[n - 1 - i] = rule.weights[i];
    }
    return rule;
}

double integrate(const QuadratureRule& rule, const std::function<double(double)>& f) {
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) acc += rule.weights[i] * f(rule.nodes[i]);
    return acc;
}

namespace {

double panel_gl(const QuadratureRule& unit, const std::function<double(double)>& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double acc = 0.0;
    for (std::size_t i = 0; i < unit.nodes.size(); ++i) {
        acc += unit.weights[i] * f(mid + half * unit.nodes[i]);
    }
    return half * acc;
}

const QuadratureRule& unit_rule_16() {
    static const QuadratureRule r = gauss_legendre(16, -1.0, 1.0);
    return r;
}

const QuadratureRule& unit_rule_32() {
    static const QuadratureRule r = gauss_legendre(32, -1.0, 1.0);
    return r;
}

} // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, int max_panels) {
    if (!(a < b)) {
        if (a == b) return 0.0;
        throw std::invalid_argument("integrate_adaptive: need a <= b");
    }
    if (abs_tol <= 0) throw std::invalid_argument("integrate_adaptive: need abs_tol > 0");

    const double total = b - a;
    struct Panel { double a, b; };
    std::vector<Panel> stack{{a, b}};
    double acc = 0.0;
    int used = 0;
    while (!stack.empty()) {
        const Panel p = stack.back();
        stack.pop_back();
        if (++used > max_panels) throw convergence_error("integrate_adaptive: panel budget exhausted");
        const double coarse = panel_gl(unit_rule_16(), f, p.a, p.b);
        const double fine = panel_gl(unit_rule_32(), f, p.a, p.b);
        const double local_tol = abs_tol * (p.b - p.a) / total;
        if (std::abs(fine - coarse) <= local_tol || (p.b - p.a) < 1e-300) {
            acc += fine;
        } else {
            const double mid = 0.5 * (p.a + p.b);
            stack.push_back({mid, p.b});
            stack.push_back({p.a, mid});
        }
    }
    return acc;
}

double integrate_semi_infinite(const std::function<double(double)>& f, double tail_coeff,
                               double abs_tol) {
    if (abs_tol <= 0) throw std::invalid_argument("integrate_semi_infinite: need abs_tol > 0");
    const double t_cut = std::max(16.0, 10.0 * std::abs(tail_coeff) / abs_tol);

    // geometrically growing panels [0,1], [1,2], [2,4], ...
    std::vector<double> edges{0.0, 1.0};
    while (edges.back() < t_cut) edges.push_back(std::min(2.0 * edges.back(), t_cut));

    const double per_panel_tol = abs_tol / (2.0 * static_cast<double>(edges.size()));
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        acc += integrate_adaptive(f, edges[i], edges[i + 1], per_panel_tol);
    }
    if (tail_coeff != 0.0) acc += tail_coeff / t_cut;
    return acc;
}

RootResult find_root_bisect(const std::function<double(double)>& f, double lo, double hi,
                            double tol, int max_iter) {
    if (!(lo < hi)) throw std::invalid_argument("find_root_bisect: need lo < hi");
    if (tol <= 0) throw std::invalid_argument("find_root_bisect: need tol > 0");

    double flo = f(lo);
    double fhi = f(hi);
    RootResult res;

    auto finish = [&](double x, double fx) {
        res.root = x;
        res.residual = fx;
        res.converged = true;
        return res;
    };
    if (flo == 0.0) return finish(lo, 0.0);
    if (fhi == 0.0) return finish(hi, 0.0);
    if ((flo > 0) == (fhi > 0)) {
        throw std::invalid_argument("find_root_bisect: no sign change on [lo, hi]");
    }

    double best_x = std::abs(flo) <= std::abs(fhi) ? lo : hi;
    double best_f = std::abs(flo) <= std::abs(fhi) ? flo : fhi;
    for (int it = 0; it < max_iter; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = f(mid);
        ++res.iterations;
        if (std::abs(fmid) < std::abs(best_f)) {
            best_x = mid;
            best_f = fmid;
        }
        res.residual_trace.push_back(std::abs(best_f));
        if ((fmid > 0) == (flo > 0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
            fhi = fmid;
        }
        if (hi - lo <= tol || std::abs(best_f) <= tol) {
            res.root = best_x;
            res.residual = best_f;
            res.converged = true;
            return res;
        }
    }
    res.root = best_x;
    res.residual = best_f;
    res.converged = (hi - lo <= tol) || (std::abs(best_f) <= tol);
    return res;
}

} // namespace dosym
