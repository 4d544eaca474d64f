#pragma once

#include <optional>
#include <vector>

#include "lindpur/purification.hpp"
#include "lindpur/random.hpp"

namespace lindpur {

/// Finite-N measured evolution and its N -> infinity limit.
struct ZenoResult {
  SuperOperator finite_n_map;  // (P o e^{L t/N} o P)^N
  SuperOperator limit_map;     // e^{(P o L o P) t} o P
  double error = 0.0;          // Frobenius distance between the two
  int n_steps = 0;
  double t = 0.0;
};

/// P o L o P as the direct triple product of Liouville matrices.
SuperOperator projected_generator(const SuperOperator& l, const Superprojector& p);

/// Independent route to P o L o P: assembled from the projected blocks
/// H^(k) = P_k H P_k and L^(kk') = P_k L P_k' of a symbolic generator.
/// Agrees with projected_generator(assemble(g), p).
SuperOperator projected_generator_blocks(const GklsGenerator& g, const Superprojector& p);

ZenoResult zeno_product(const SuperOperator& l, const Superprojector& p, double t,
                        int n_steps);

SuperOperator zeno_limit(const SuperOperator& l, const Superprojector& p, double t);

/// Superoperator X -> (Tr_A X) kron I_A / d_aux on dim d_sys*d_aux.
SuperOperator twirl_aux_superop(Index d_sys, Index d_aux);

/// Least-squares slope of log(error) vs log(N) over the four largest N with
/// nonzero error; empty when fewer than two usable points remain.
std::optional<double> fit_loglog_slope(const std::vector<int>& n_values,
                                       const std::vector<double>& errors);

/// Evolves a joint-space state rho0 under the Zeno-limit map of the j-th
/// purified generator and traces out the auxiliary system (rho_measured);
/// rho_direct applies e^{L_j t} to the reduced state directly. The two agree.
struct ReducedDynamics {
  Operator rho_measured;
  Operator rho_direct;
  double distance = 0.0;
};

ReducedDynamics reduced_dynamics(const std::vector<GklsGenerator>& gens, Index j,
                                 const Operator& rho0, double t);

/// Qubit amplitude damping pinched in the computational basis: the projected
/// generator keeps coherences frozen, so e^{(P o L o P) t} alone is not CPTP
/// and its long-time output can fail positivity.
struct AppendixAReport {
  double max_dist_to_ground_with_projection = 0.0;  // over sampled states
  Operator plus_state_limit;                        // e^{G t} |+><+| at large t
  double plus_state_min_eigenvalue = 0.0;
  double off_diagonal_freeze_residual = 0.0;  // vs |0><0| + (id - P) rho
  bool cptp_at_unit_time = true;
  double t_limit = 0.0;
  double doubling_change = 0.0;  // result drift when t doubles
};

AppendixAReport appendix_a_demo(Rng& rng, int n_states = 10, double t_limit = 50.0);

}  // namespace lindpur
