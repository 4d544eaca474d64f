#include "lindpur/zeno.hpp"

#include <cmath>
#include <stdexcept>

#include "lindpur/gkls.hpp"

namespace lindpur {

SuperOperator projected_generator(const SuperOperator& l, const Superprojector& p) {
  if (l.dim() != p.dim()) {
    throw std::invalid_argument("projected_generator: dimension mismatch");
  }
  return p.superop() * l * p.superop();
}

SuperOperator projected_generator_blocks(const GklsGenerator& g, const Superprojector& p) {
  if (g.dim() != p.dim()) {
    throw std::invalid_argument("projected_generator_blocks: dimension mismatch");
  }
  const Index d = g.dim();
  SuperOperator s = SuperOperator::zero(d);
  // -i sum_k [H^(k), P_k (.) P_k] with H^(k) = P_k H P_k
  for (const auto& pk : p.projectors()) {
    const Operator hk = pk * g.hamiltonian() * pk;
    s = s + SuperOperator(-imag_unit *
                          (left_right(hk, pk).mat() - left_right(pk, hk).mat()));
  }
  // sum_{a,k,k'} 2 L^(kk')(.) L^(kk')dag - L^(kk')dag L^(kk') (.) P_k'
  //            - P_k' (.) L^(kk')dag L^(kk')   with L^(kk') = P_k L P_k'
  for (const auto& l : g.lindblad_ops()) {
    for (const auto& pk : p.projectors()) {
      for (const auto& pk2 : p.projectors()) {
        const Operator lkk = pk * l * pk2;
        const Operator ldl = lkk.adjoint() * lkk;
        s = s + 2.0 * left_right(lkk, lkk.adjoint()) - left_right(ldl, pk2) -
            left_right(pk2, ldl);
      }
    }
  }
  return s;
}

ZenoResult zeno_product(const SuperOperator& l, const Superprojector& p, double t,
                        int n_steps) {
  if (l.dim() != p.dim()) {
    throw std::invalid_argument("zeno_product: dimension mismatch");
  }
  if (t < 0.0 || n_steps < 1) {
    throw std::invalid_argument("zeno_product: need t >= 0 and n_steps >= 1");
  }
  const Matrix step =
      p.superop().mat() * expm(l, t / n_steps).mat() * p.superop().mat();
  Matrix result = Matrix::Identity(step.rows(), step.cols());
  Matrix base = step;
  for (int e = n_steps; e > 0; e >>= 1) {
    if (e & 1) result = result * base;
    if (e > 1) base = base * base;
  }
  ZenoResult out;
  out.finite_n_map = SuperOperator(std::move(result));
  out.limit_map = zeno_limit(l, p, t);
  out.error = (out.finite_n_map - out.limit_map).norm();
  out.n_steps = n_steps;
  out.t = t;
  return out;
}

SuperOperator zeno_limit(const SuperOperator& l, const Superprojector& p, double t) {
  if (t < 0.0) {
    throw std::invalid_argument("zeno_limit: need t >= 0");
  }
  return expm(projected_generator(l, p), t) * p.superop();
}

SuperOperator twirl_aux_superop(Index d_sys, Index d_aux) {
  const Operator id_aux = Operator::identity(d_aux);
  return superop_from_map(d_sys * d_aux, [&](const Operator& x) {
    return Operator(kron(partial_trace_aux(x, d_sys, d_aux), id_aux).mat() /
                    static_cast<double>(d_aux));
  });
}

std::optional<double> fit_loglog_slope(const std::vector<int>& n_values,
                                       const std::vector<double>& errors) {
  if (n_values.size() != errors.size()) {
    throw std::invalid_argument("fit_loglog_slope: length mismatch");
  }
  std::vector<std::pair<double, double>> pts;
  for (std::size_t i = 0; i < n_values.size(); ++i) {
    if (errors[i] > 0.0) {
      pts.emplace_back(std::log(static_cast<double>(n_values[i])), std::log(errors[i]));
    }
  }
  if (pts.size() > 4) pts.erase(pts.begin(), pts.end() - 4);
  if (pts.size() < 2) return std::nullopt;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [x, y] : pts) {
    sx += x; sy += y; sxx += x * x; sxy += x * y;
  }
  const auto m = static_cast<double>(pts.size());
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

ReducedDynamics reduced_dynamics(const std::vector<GklsGenerator>& gens, Index j,
                                 const Operator& rho0, double t) {
  if (j < 0 || j >= static_cast<Index>(gens.size())) {
    throw std::invalid_argument("reduced_dynamics: generator index out of range");
  }
  const PurifiedSet purified = purify_lindbladians(gens);
  const Index d = purified.system_dim;
  const Index n = purified.aux_dim;
  if (rho0.dim() != d * n) {
    throw std::invalid_argument("reduced_dynamics: rho0 must live on dim d*n");
  }
  if (!rho0.is_density(1e-8)) {
    throw std::invalid_argument("reduced_dynamics: rho0 must be a density matrix");
  }
  const Superprojector p = superprojector_from_basis(d, fourier_mub(n));
  const SuperOperator limit = zeno_limit(assemble(purified.generators[j]), p, t);
  ReducedDynamics out{
      partial_trace_aux(limit.apply(rho0), d, n),
      expm(assemble(gens[j]), t).apply(partial_trace_aux(rho0, d, n)),
      0.0,
  };
  out.distance = (out.rho_measured - out.rho_direct).norm();
  return out;
}

AppendixAReport appendix_a_demo(Rng& rng, int n_states, double t_limit) {
  const Index d = 2;
  const Operator ground = matrix_unit(d, 0, 0);
  const SuperOperator damping = dissipator_superop(matrix_unit(d, 0, 1));
  const Superprojector dephasing = Superprojector::from_projectors(
      {matrix_unit(d, 0, 0), matrix_unit(d, 1, 1)});
  const SuperOperator projected = projected_generator(damping, dephasing);

  AppendixAReport report;
  report.t_limit = t_limit;
  const SuperOperator half_time = expm(projected, t_limit);
  const SuperOperator full = expm(projected, 2.0 * t_limit);
  report.doubling_change = (full - half_time).norm();

  const SuperOperator with_projection = full * dephasing.superop();
  for (int s = 0; s < n_states; ++s) {
    const Operator rho = random_density(rng, d);
    const double dist = (with_projection.apply(rho) - ground).norm();
    report.max_dist_to_ground_with_projection =
        std::max(report.max_dist_to_ground_with_projection, dist);

    // without the leading pinching the coherences never decay
    const Operator bare = full.apply(rho);
    const Operator expected =
        ground + (SuperOperator::identity(d) - dephasing.superop()).apply(rho);
    report.off_diagonal_freeze_residual =
        std::max(report.off_diagonal_freeze_residual, (bare - expected).norm());
  }

  Matrix plus(2, 2);
  plus << 0.5, 0.5, 0.5, 0.5;
  report.plus_state_limit = full.apply(Operator(plus));
  Eigen::SelfAdjointEigenSolver<Matrix> es(report.plus_state_limit.mat());
  report.plus_state_min_eigenvalue = es.eigenvalues().minCoeff();

  report.cptp_at_unit_time = is_cptp(expm(projected, 1.0));
  return report;
}

}  // namespace lindpur
