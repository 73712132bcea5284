#include "hgnoise/pec.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hgnoise/kernels.hpp"

namespace hgnoise {

PecPlan pec_exact(const Distribution& p) {
  if (p.n > 24)
    throw std::invalid_argument("pec_exact: dense path capped at n = 24");
  std::vector<double> f = p.to_dense();
  fwht(f);
  for (std::size_t b = 0; b < f.size(); ++b)
    if (f[b] == 0.0) {
      std::ostringstream msg;
      msg << "pec_exact: singular spectrum at mask 0x" << std::hex << b;
      throw std::runtime_error(msg.str());
    }
  for (double& x : f) x = 1.0 / x;
  fwht(f);
  double scale = std::ldexp(1.0, -p.n);
  for (double& x : f) x *= scale;

  PecPlan plan;
  plan.q = Distribution::from_dense(p.n, f, Distribution::Kind::quasi);
  plan.l1_norm = plan.q.sum_abs();
  plan.kind = PecPlan::Kind::exact;
  return plan;
}

PecPlan pec_approx(const Distribution& p) {
  std::vector<std::pair<mask_t, double>> e;
  e.reserve(p.entries.size() + 1);
  e.emplace_back(0, 2.0 - p.value(0));
  for (auto& [m, v] : p.entries)
    if (m != 0) e.emplace_back(m, -v);
  PecPlan plan;
  plan.q =
      Distribution::from_entries(p.n, Distribution::Kind::quasi, std::move(e));
  plan.l1_norm = plan.q.sum_abs();
  plan.kind = PecPlan::Kind::approx;
  return plan;
}

long long pec_overhead(const PecPlan& plan, double epsilon, double delta_f) {
  if (epsilon <= 0.0 || epsilon >= 1.0 || delta_f <= 0.0 || delta_f >= 1.0)
    throw std::invalid_argument("pec_overhead: need eps, delta_f in (0,1)");
  double v = plan.l1_norm * plan.l1_norm * std::log(1.0 / delta_f) /
             (epsilon * epsilon);
  return static_cast<long long>(std::ceil(v));
}

double bias_bound_downstream(int gate_count, double max_plan_l1,
                             double eps_per_state) {
  if (gate_count < 0 || max_plan_l1 < 0.0 || eps_per_state < 0.0)
    throw std::invalid_argument("bias_bound_downstream: negative argument");
  double first = max_plan_l1 * gate_count * eps_per_state;
  double pairs = 0.5 * gate_count * (gate_count - 1);
  double second =
      max_plan_l1 * max_plan_l1 * pairs * eps_per_state * eps_per_state;
  return first + second;
}

}  // namespace hgnoise
