#include "vexwave/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "vexwave/special.hpp"

namespace vexwave {

namespace {

struct Recurrence {
  std::vector<double> alpha;  // diagonal
  std::vector<double> beta;   // beta[0] = mu0, beta[k>=1] off-diagonal^2
};

// Three-term recurrence coefficients of monic Jacobi polynomials on (-1,1),
// weight (1-x)^a (1+x)^b. beta[1] uses the cancellation-free form so that
// a+b = -1 (the g-kernel case) works.
Recurrence jacobi_recurrence(int n, double a, double b) {
  Recurrence r;
  r.alpha.resize(n);
  r.beta.resize(n);
  const double apb = a + b;
  r.beta[0] = std::pow(2.0, apb + 1.0) * beta_fn(a + 1.0, b + 1.0);
  r.alpha[0] = (b - a) / (apb + 2.0);
  if (n > 1) {
    r.alpha[1] = (b * b - a * a) / ((2.0 + apb) * (4.0 + apb));
    r.beta[1] = 4.0 * (1.0 + a) * (1.0 + b) /
                ((2.0 + apb) * (2.0 + apb) * (3.0 + apb));
  }
  for (int k = 2; k < n; ++k) {
    const double t = 2.0 * k + apb;
    r.alpha[k] = (b * b - a * a) / (t * (t + 2.0));
    r.beta[k] = 4.0 * k * (k + a) * (k + b) * (k + apb) /
                (t * t * (t + 1.0) * (t - 1.0));
  }
  return r;
}

// Eigenvalues of the symmetric tridiagonal Jacobi matrix by implicit-shift QL.
std::vector<double> symtrid_eigenvalues(std::vector<double> d, std::vector<double> e) {
  const int n = static_cast<int>(d.size());
  e.push_back(0.0);
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= 1e-300 + 2.3e-16 * dd) break;
      }
      if (m != l) {
        if (++iter == 60)
          throw std::runtime_error("gauss rule: QL eigenvalue iteration failed to converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double rr = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(rr, g));
        double s = 1.0, c = 1.0, p = 0.0;
        for (int i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double bb = c * e[i];
          rr = std::hypot(f, g);
          e[i + 1] = rr;
          if (rr == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / rr;
          c = g / rr;
          g = d[i + 1] - p;
          rr = (d[i] - g) * s + 2.0 * c * bb;
          p = s * rr;
          d[i + 1] = g + p;
          g = c * rr - bb;
        }
        if (rr == 0.0 && m - 1 >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

static QuadratureRule build_rule(int n, double a, double b, bool legendre) {
  if (n < 1) throw std::invalid_argument("gauss rule: n must be >= 1");
  if (!(a > -1.0) || !(b > -1.0))
    throw std::invalid_argument("gauss rule: jacobi exponents must exceed -1");

  Recurrence r = jacobi_recurrence(n, a, b);
  std::vector<double> d = r.alpha;
  std::vector<double> e(std::max(0, n - 1));
  for (int k = 1; k < n; ++k) e[k - 1] = std::sqrt(r.beta[k]);
  std::vector<double> x = symtrid_eigenvalues(d, e);

  // beta extended so the recurrence for p_{n} can be normalized uniformly
  std::vector<double> sqrtb(n + 1, 1.0);
  for (int k = 1; k < n; ++k) sqrtb[k] = std::sqrt(r.beta[k]);

  auto eval = [&](double t, std::vector<double>& p, double& pn, double& dpn) {
    // orthonormal p_0..p_{n-1}, plus monic-normalized residual pair (pn, dpn)
    p.resize(n);
    p[0] = 1.0 / std::sqrt(r.beta[0]);
    double dp_prev = 0.0, dp_cur = 0.0;
    if (n > 1) {
      p[1] = (t - r.alpha[0]) * p[0] / sqrtb[1];
      dp_cur = p[0] / sqrtb[1];
    }
    for (int k = 1; k < n - 1; ++k) {
      p[k + 1] = ((t - r.alpha[k]) * p[k] - sqrtb[k] * p[k - 1]) / sqrtb[k + 1];
      const double dnew = ((t - r.alpha[k]) * dp_cur + p[k] - sqrtb[k] * dp_prev) / sqrtb[k + 1];
      dp_prev = dp_cur;
      dp_cur = dnew;
    }
    // residual polynomial r_n (un-normalized is fine: only the ratio is used)
    const int k = n - 1;
    const double pk1 = (k >= 1) ? p[k - 1] : 0.0;
    pn = (t - r.alpha[k]) * p[k] - sqrtb[k] * pk1;
    dpn = (t - r.alpha[k]) * dp_cur + p[k] - sqrtb[k] * dp_prev;
    if (n == 1) {
      pn = (t - r.alpha[0]) * p[0];
      dpn = p[0];
    }
  };

  QuadratureRule rule;
  rule.kind = legendre ? QuadratureRule::Kind::legendre : QuadratureRule::Kind::jacobi;
  rule.a = a;
  rule.b = b;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  std::vector<double> p;
  for (int i = 0; i < n; ++i) {
    double t = x[i];
    for (int it = 0; it < 3; ++it) {  // Newton polish
      double pn, dpn;
      eval(t, p, pn, dpn);
      if (dpn == 0.0) break;
      const double step = pn / dpn;
      t -= step;
      if (std::abs(step) < 1e-15 * (1.0 + std::abs(t))) break;
    }
    double pn, dpn;
    eval(t, p, pn, dpn);
    double s = 0.0;
    for (int k = 0; k < n; ++k) s += p[k] * p[k];
    rule.nodes[i] = t;
    rule.weights[i] = 1.0 / s;
  }

  if (!legendre) {
    // map (-1,1) -> (0,1): z = (x+1)/2, weight scale 2^{-a-b-1}
    const double scale = std::pow(2.0, -a - b - 1.0);
    for (int i = 0; i < n; ++i) {
      rule.nodes[i] = 0.5 * (rule.nodes[i] + 1.0);
      rule.weights[i] *= scale;
    }
  }

  const double lo = legendre ? -1.0 : 0.0, hi = legendre ? 1.0 : 1.0;
  double wsum = 0.0;
  for (int i = 0; i < n; ++i) {
    if (!(rule.nodes[i] > lo && rule.nodes[i] < hi))
      throw std::runtime_error("gauss rule: node escaped the canonical interval");
    if (i > 0 && !(rule.nodes[i] > rule.nodes[i - 1]))
      throw std::runtime_error("gauss rule: nodes not strictly increasing");
    if (!(rule.weights[i] > 0.0)) throw std::runtime_error("gauss rule: nonpositive weight");
    wsum += rule.weights[i];
  }
  const double expected = legendre ? 2.0 : beta_fn(b + 1.0, a + 1.0);
  if (std::abs(wsum - expected) > 1e-12 * expected)
    throw std::runtime_error("gauss rule: weight sum check failed");
  return rule;
}

QuadratureRule gauss_jacobi(int n, double a, double b) { return build_rule(n, a, b, false); }

QuadratureRule gauss_legendre(int n) { return build_rule(n, 0.0, 0.0, true); }

}  // namespace vexwave
