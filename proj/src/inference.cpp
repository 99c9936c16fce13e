#include "mveff/inference.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <string>

#include "mveff/error.hpp"
#include "mveff/statfns.hpp"

namespace mveff {

namespace {

void require_shape(SampleShape shape) {
  if (shape.k < 2 || shape.n <= shape.k) {
    throw Error(ErrorCode::InvalidArgument,
                "sample shape needs n > k >= 2 (n = " + std::to_string(shape.n) +
                    ", k = " + std::to_string(shape.k) + ")");
  }
}

void require_beta(double beta) {
  if (!(beta > 0.0 && beta < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "significance level must lie in (0, 1)");
  }
}

// Law of the scaled slope estimate Z = c0 * s_hat ~ F(k-1, n-k+1; n s).
struct SlopeLaw {
  int df1;
  int df2;
  double noncentrality;
  double c0;

  SlopeLaw(double s, SampleShape shape)
      : df1(shape.k - 1),
        df2(shape.n - shape.k + 1),
        noncentrality(shape.n * s),
        c0(static_cast<double>(shape.n) * (shape.n - shape.k + 1) /
           (static_cast<double>(shape.n - 1) * (shape.k - 1))) {
    if (!(s >= 0.0) || !std::isfinite(s)) {
      throw Error(ErrorCode::InvalidArgument, "slope s must be finite and >= 0");
    }
  }

  double pdf(double z) const {
    return statfns::noncentral_f_pdf(z, df1, df2, noncentrality);
  }

  // Rough location of the bulk, used as the semi-infinite map scale.
  double scale() const { return std::max(1.0, (df1 + noncentrality) / df1); }
};

// Inner integrals run tighter than the outer request so that the outer
// error estimate is not polluted by inner noise.
QuadratureConfig inner_config(const QuadratureConfig& q) {
  QuadratureConfig inner = q;
  inner.abs_tol = std::min(q.abs_tol, 1e-12);
  inner.rel_tol = std::min(q.rel_tol, 1e-10);
  return inner;
}

// Conditional noncentrality of T1 given c0 * s_hat = z.
double t1_noncentrality(double lambda, double z, SampleShape shape, double c0) {
  const double n = shape.n;
  const double y = z / c0;
  return -std::sqrt(n) * lambda / std::sqrt(1.0 + n / (n - 1.0) * y);
}

template <class Fn>
std::vector<double> evaluate_grid(std::span<const double> xs, Execution exec, Fn&& fn) {
  std::vector<double> out(xs.size());
  const auto count = static_cast<long>(xs.size());
  if (exec == Execution::Serial) {
    for (long i = 0; i < count; ++i) out[i] = fn(xs[i]);
    return out;
  }
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < count; ++i) {
    try {
      out[i] = fn(xs[i]);
    } catch (...) {
#pragma omp critical(mveff_grid_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace

double lambda_m(const FrontierParams& f, double mu0) {
  return (mu0 - f.r_gmv) / std::sqrt(f.v_gmv);
}

double lambda_qu(const FrontierParams& f, double alpha_tilde) {
  if (!(alpha_tilde > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "alpha_tilde must be positive");
  }
  return (1.0 / alpha_tilde - 1.0 - f.r_gmv) / std::sqrt(f.v_gmv);
}

double prob_inefficient(double lambda, double s, SampleShape shape,
                        const QuadratureConfig& q) {
  require_shape(shape);
  if (!std::isfinite(lambda)) {
    throw Error(ErrorCode::InvalidArgument, "lambda must be finite");
  }
  const SlopeLaw law(s, shape);
  const double n = shape.n;
  auto integrand = [&](double z) {
    const double sd = std::sqrt(1.0 / n + z / (law.c0 * (n - 1.0)));
    return statfns::norm_cdf(-lambda / sd) * law.pdf(z);
  };
  const double p = quad::integrate_to_infinity(integrand, 0.0, q, law.scale()).value;
  return std::clamp(p, 0.0, 1.0);
}

double prob_inefficient_m(const FrontierParams& f, SampleShape shape, double mu0,
                          const QuadratureConfig& q) {
  return prob_inefficient(lambda_m(f, mu0), f.s, shape, q);
}

double prob_inefficient_qu(const FrontierParams& f, SampleShape shape, double alpha_tilde,
                           const QuadratureConfig& q) {
  return prob_inefficient(lambda_qu(f, alpha_tilde), f.s, shape, q);
}

double t1_statistic(const EstimatedFrontier& ef, double mu0) {
  require_shape({ef.n, ef.k});
  const double n = ef.n;
  const double k = ef.k;
  return std::sqrt(n / ef.v_hat) * std::sqrt((n - k) / (n - 1.0)) * (ef.r_hat - mu0) /
         std::sqrt(1.0 + n / (n - 1.0) * ef.s_hat);
}

TestResult test_m_efficiency(const EstimatedFrontier& ef, double mu0, double beta) {
  require_beta(beta);
  TestResult r;
  r.beta = beta;
  r.statistic = t1_statistic(ef, mu0);
  const double dof = ef.n - ef.k;
  r.critical_value = -statfns::t_quantile(1.0 - beta, dof);
  r.p_value = std::clamp(statfns::t_cdf(r.statistic, dof), 0.0, 1.0);
  r.accept_efficiency = r.statistic < r.critical_value;
  return r;
}

TestResult test_qu_efficiency(const EstimatedFrontier& ef, double alpha_tilde, double beta) {
  if (!(alpha_tilde > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "alpha_tilde must be positive");
  }
  return test_m_efficiency(ef, 1.0 / alpha_tilde - 1.0, beta);
}

double m_acceptance_threshold(const EstimatedFrontier& ef, double beta) {
  require_beta(beta);
  require_shape({ef.n, ef.k});
  const double n = ef.n;
  const double k = ef.k;
  const double scale = std::sqrt(n / ef.v_hat) * std::sqrt((n - k) / (n - 1.0)) /
                       std::sqrt(1.0 + n / (n - 1.0) * ef.s_hat);
  return ef.r_hat + statfns::t_quantile(1.0 - beta, n - k) / scale;
}

double qu_acceptance_threshold(const EstimatedFrontier& ef, double beta) {
  const double mu_star = m_acceptance_threshold(ef, beta);
  if (!(1.0 + mu_star > 0.0)) {
    throw Error(ErrorCode::InvalidArgument,
                "no positive quadratic-utility coefficient reaches the acceptance region");
  }
  return 1.0 / (1.0 + mu_star);
}

double density_t1(double x, const FrontierParams& f, SampleShape shape, double mu0,
                  const QuadratureConfig& q) {
  require_shape(shape);
  const SlopeLaw law(f.s, shape);
  const double lambda = lambda_m(f, mu0);
  const double dof = shape.n - shape.k;
  auto integrand = [&](double z) {
    const double w = law.pdf(z);
    if (w == 0.0) return 0.0;
    return statfns::noncentral_t_pdf(x, dof, t1_noncentrality(lambda, z, shape, law.c0)) * w;
  };
  return quad::integrate_to_infinity(integrand, 0.0, inner_config(q), law.scale()).value;
}

double power_at_lambda(double lambda, double s, SampleShape shape, double beta,
                       const QuadratureConfig& q) {
  require_shape(shape);
  require_beta(beta);
  const SlopeLaw law(s, shape);
  const int dof = shape.n - shape.k;
  const double crit = -statfns::t_quantile(1.0 - beta, dof);
  const QuadratureConfig inner = inner_config(q);

  // P(T1 < crit | z) with T1 | z = (Z + delta(z)) / sqrt(W / dof),
  // Z ~ N(0,1), W ~ chi2(dof).
  auto conditional = [&](double z) {
    const double delta = t1_noncentrality(lambda, z, shape, law.c0);
    auto over_w = [&](double w) {
      return statfns::norm_cdf(crit * std::sqrt(w / dof) - delta) * statfns::chi2_pdf(w, dof);
    };
    return quad::integrate_to_infinity(over_w, 0.0, inner, dof).value;
  };
  auto outer = [&](double z) {
    const double w = law.pdf(z);
    return w == 0.0 ? 0.0 : conditional(z) * w;
  };
  const double p = quad::integrate_to_infinity(outer, 0.0, q, law.scale()).value;
  return std::clamp(p, 0.0, 1.0);
}

double power_m_test(const FrontierParams& f, SampleShape shape, double mu0, double beta,
                    const QuadratureConfig& q) {
  return power_at_lambda(lambda_m(f, mu0), f.s, shape, beta, q);
}

std::vector<double> prob_inefficient_curve(std::span<const double> lambdas, double s,
                                           SampleShape shape, const QuadratureConfig& q,
                                           Execution exec) {
  return evaluate_grid(lambdas, exec,
                       [&](double lambda) { return prob_inefficient(lambda, s, shape, q); });
}

std::vector<double> power_curve(std::span<const double> lambdas, double s, SampleShape shape,
                                double beta, const QuadratureConfig& q, Execution exec) {
  return evaluate_grid(lambdas, exec, [&](double lambda) {
    return power_at_lambda(lambda, s, shape, beta, q);
  });
}

}  // namespace mveff
