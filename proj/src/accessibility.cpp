#include "lindpur/accessibility.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lindpur/random.hpp"

namespace lindpur {

namespace {

// Permutation with vec(X^dag) = K conj(vec X).
RealMatrix adjoint_swap(Index d) {
  RealMatrix k = RealMatrix::Zero(d * d, d * d);
  for (Index r = 0; r < d; ++r) {
    for (Index c = 0; c < d; ++c) {
      k(r * d + c, c * d + r) = 1.0;
    }
  }
  return k;
}

// Commutator-closed subspaces shared by all generators. Projecting stored
// elements back onto them strips the rounding noise that otherwise builds up
// along iterated commutators and eventually fakes new directions.
class StructureCleaner {
 public:
  StructureCleaner(const std::vector<SuperOperator>& gens, Index d)
      : swap_(adjoint_swap(d)), trace_row_(vec(Operator::identity(d))) {
    hermiticity_ = true;
    trace_killing_ = true;
    for (const auto& g : gens) {
      const double scale = std::max(g.norm(), 1.0);
      if ((swap_ * g.mat().conjugate() * swap_ - g.mat()).norm() > 1e-12 * scale) {
        hermiticity_ = false;
      }
      if ((trace_row_.transpose() * g.mat()).norm() > 1e-12 * scale) {
        trace_killing_ = false;
      }
    }
  }

  Matrix clean(Matrix m) const {
    if (hermiticity_) {
      m = 0.5 * (m + swap_ * m.conjugate() * swap_);
    }
    if (trace_killing_) {
      const Matrix row = trace_row_.transpose() * m;
      m -= (trace_row_ * row) / trace_row_.squaredNorm();
    }
    return m;
  }

 private:
  RealMatrix swap_;
  Vector trace_row_;
  bool hermiticity_ = false;
  bool trace_killing_ = false;
};

}  // namespace

LieBasis lie_closure(const std::vector<SuperOperator>& generators, double tol,
                     Index max_dim) {
  if (generators.empty()) {
    return LieBasis{};
  }
  const Index d = generators.front().dim();
  for (const auto& g : generators) {
    if (g.dim() != d) {
      throw std::invalid_argument("lie_closure: generator dimensions differ");
    }
  }
  if (max_dim <= 0) max_dim = d * d * d * d;

  const StructureCleaner cleaner(generators, d);
  LieBasis out;
  out.op_dim = d;
  SpanAccumulator span(tol);
  std::vector<Matrix> elements;  // unit-norm algebra members, insertion order
  bool hit_max_dim = false;

  const auto try_insert = [&](const Matrix& candidate, LieProvenance prov) {
    const double nrm = candidate.norm();
    if (nrm < 1e-12) return;
    Matrix m = cleaner.clean(candidate / nrm);
    const double cleaned_norm = m.norm();
    if (cleaned_norm < 0.5) return;  // mostly structural noise
    m /= cleaned_norm;
    const RealVector v = realify(SuperOperator(m));
    if (span.residual_norm_quick(v) <= tol) return;
    const RealVector r = span.residual(v);
    const double rn = r.norm();
    if (rn <= tol) return;
    if (static_cast<Index>(elements.size()) >= max_dim) {
      hit_max_dim = true;  // a new direction exists but cannot be admitted
      return;
    }
    // keep the stored direction inside the invariant subspace as well
    RealVector rc = realify(SuperOperator(cleaner.clean(unrealify(r, d).mat())));
    rc = span.residual(rc);
    const double rcn = rc.norm();
    if (rcn <= 0.5 * rn) return;  // new direction was mostly outside it
    span.push_orthonormal(rc / rcn);
    elements.push_back(std::move(m));
    out.generation_log.push_back(prov);
  };

  for (std::size_t gi = 0; gi < generators.size(); ++gi) {
    try_insert(generators[gi].mat(),
               LieProvenance{LieProvenance::Kind::Generator, static_cast<Index>(gi), -1, 0});
  }
  // Process each unordered pair exactly once, in deterministic order:
  // element i against all earlier j. New elements are appended and later
  // serve as pivots themselves; termination = no pivot left unprocessed.
  for (Index i = 1; i < static_cast<Index>(elements.size()) && !hit_max_dim; ++i) {
    for (Index j = 0; j < i && !hit_max_dim; ++j) {
      const Matrix c = elements[j] * elements[i] - elements[i] * elements[j];
      const int generation = std::max(out.generation_log[i].generation,
                                      out.generation_log[j].generation) + 1;
      try_insert(c, LieProvenance{LieProvenance::Kind::Commutator, j, i, generation});
    }
  }
  out.basis = span.basis();
  out.converged = !hit_max_dim;
  return out;
}

AccessiblePair accessible_pair(Index d) {
  if (d < 2) {
    throw std::invalid_argument("accessible_pair: need d >= 2");
  }
  Matrix h0 = Matrix::Zero(d, d);
  for (Index j = 0; j + 1 < d; ++j) {
    h0(j, j + 1) = 1.0;
    h0(j + 1, j) = 1.0;
  }
  return AccessiblePair{
      GklsGenerator(Operator(std::move(h0)), {matrix_unit(d, 0, 1)}),
      GklsGenerator(matrix_unit(d, 0, 0), {}),
  };
}

namespace {

std::vector<Operator> hermitian_basis(Index d, const std::vector<Index>& idx) {
  std::vector<Operator> out;
  for (Index a = 0; a < static_cast<Index>(idx.size()); ++a) {
    out.push_back(matrix_unit(d, idx[a], idx[a]));
  }
  for (Index a = 0; a < static_cast<Index>(idx.size()); ++a) {
    for (Index b = a + 1; b < static_cast<Index>(idx.size()); ++b) {
      const Index i = idx[a], j = idx[b];
      out.push_back(matrix_unit(d, i, j) + matrix_unit(d, j, i));
      out.push_back(imag_unit * matrix_unit(d, i, j) - imag_unit * matrix_unit(d, j, i));
    }
  }
  return out;
}

std::vector<Index> full_range(Index d) {
  std::vector<Index> idx(d);
  for (Index i = 0; i < d; ++i) idx[i] = i;
  return idx;
}

}  // namespace

Index full_gkls_dim(Index d, double tol) {
  if (d < 2) {
    throw std::invalid_argument("full_gkls_dim: need d >= 2");
  }
  std::vector<SuperOperator> gens;
  for (const auto& b : hermitian_basis(d, full_range(d))) {
    gens.push_back(hamiltonian_superop(b));
  }
  std::vector<Operator> units;
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) {
      units.push_back(matrix_unit(d, i, j));
    }
  }
  for (const auto& u : units) {
    gens.push_back(dissipator_superop(u));
  }
  for (std::size_t p = 0; p < units.size(); ++p) {
    for (std::size_t q = p + 1; q < units.size(); ++q) {
      gens.push_back(dissipator_superop(units[p] + units[q]));
      gens.push_back(dissipator_superop(units[p] + imag_unit * units[q]));
    }
  }
  const LieBasis closure = lie_closure(gens, tol);
  return closure.dim();
}

QuartetSpanReport quartet_span_check(Index d, int n_unitaries, std::uint64_t seed,
                                     std::vector<Index> quartet, double residual_tol) {
  if (d < 4) {
    throw std::invalid_argument("quartet_span_check: need d >= 4");
  }
  if (quartet.empty()) {
    quartet = {0, 1, 2, 3};
  }
  if (quartet.size() != 4) {
    throw std::invalid_argument("quartet_span_check: quartet must have 4 indices");
  }
  for (Index q : quartet) {
    if (q < 0 || q >= d) {
      throw std::invalid_argument("quartet_span_check: quartet index out of range");
    }
  }

  QuartetSpanReport report;
  report.d = d;
  report.quartet = quartet;
  report.n_unitaries = n_unitaries;
  report.seed = seed;

  // Collected family: -i ad_H over a Hermitian operator basis plus
  // dissipators of unitarily rotated |q0><q1|. The ad family covers the full
  // space: the accessible-pair argument makes every -i ad_{u(d)} available
  // before the quartet step, and for quartets embedded in d > 4 the
  // block-restricted ads are not enough to span the paired dissipators.
  Rng rng(seed);
  std::vector<SuperOperator> collected;
  for (const auto& b : hermitian_basis(d, full_range(d))) {
    collected.push_back(hamiltonian_superop(b));
  }
  const Operator lowering = matrix_unit(d, quartet[0], quartet[1]);
  for (int u = 0; u < n_unitaries; ++u) {
    const Operator rot = random_unitary_on_subset(rng, d, quartet);
    collected.push_back(dissipator_superop(rot * lowering * rot.adjoint()));
  }

  // The paired elementary dissipators on the quartet, normalized; zero
  // combinations ((ij) = (kl) kills the antisymmetric one) are dropped.
  std::vector<SuperOperator> pair_ops;
  for (Index i : quartet) {
    for (Index j : quartet) {
      for (Index k : quartet) {
        for (Index l : quartet) {
          const SuperOperator dij_kl =
              generalized_dissipator(matrix_unit(d, i, j), matrix_unit(d, k, l));
          const SuperOperator dkl_ij =
              generalized_dissipator(matrix_unit(d, k, l), matrix_unit(d, i, j));
          pair_ops.push_back(dij_kl + dkl_ij);
          pair_ops.push_back(imag_unit * (dij_kl - dkl_ij));
        }
      }
    }
  }
  RealMatrix targets(2 * d * d * d * d, static_cast<Index>(pair_ops.size()));
  Index n_targets = 0;
  for (const auto& op : pair_ops) {
    const double nrm = op.norm();
    if (nrm < 1e-12) continue;
    targets.col(n_targets++) = realify((1.0 / nrm) * op);
  }

  // Grow the generated span (commutator closure of the collected family) and
  // stop as soon as every target is inside it; the span only grows, so a
  // residual below tolerance at any stage is final.
  const StructureCleaner cleaner(collected, d);
  SpanAccumulator span(residual_tol);
  std::vector<Matrix> elements;
  const auto try_insert = [&](const Matrix& candidate) {
    const double nrm = candidate.norm();
    if (nrm < 1e-12) return;
    Matrix m = cleaner.clean(candidate / nrm);
    const double cleaned_norm = m.norm();
    if (cleaned_norm < 0.5) return;
    m /= cleaned_norm;
    const RealVector v = realify(SuperOperator(m));
    if (span.residual_norm_quick(v) <= residual_tol) return;
    const RealVector r = span.residual(v);
    const double rn = r.norm();
    if (rn <= residual_tol) return;
    RealVector rc = realify(SuperOperator(cleaner.clean(unrealify(r, d).mat())));
    rc = span.residual(rc);
    const double rcn = rc.norm();
    if (rcn <= 0.5 * rn) return;
    span.push_orthonormal(rc / rcn);
    elements.push_back(std::move(m));
  };
  const auto max_target_residual = [&]() {
    double worst = 0.0;
    for (Index c = 0; c < n_targets; ++c) {
      worst = std::max(worst, span.residual_norm_quick(targets.col(c)));
    }
    return worst;
  };
  for (const auto& g : collected) {
    try_insert(g.mat());
  }
  Index last_checked_rank = 0;
  bool covered = false;
  for (Index i = 1; i < static_cast<Index>(elements.size()) && !covered; ++i) {
    for (Index j = 0; j < i; ++j) {
      try_insert(elements[j] * elements[i] - elements[i] * elements[j]);
    }
    if (span.rank() >= last_checked_rank + 16) {
      last_checked_rank = span.rank();
      covered = max_target_residual() < residual_tol;
    }
  }
  report.span_dim = span.rank();
  report.max_pair_residual = max_target_residual();

  // Kossakowski decomposition: a random Lindbladian supported on the quartet
  // is a real combination of the paired dissipators (least squares).
  Operator h_rand = Operator::zero(d);
  {
    const Operator block = random_hermitian(rng, 4);
    for (Index a = 0; a < 4; ++a) {
      for (Index b = 0; b < 4; ++b) {
        h_rand = h_rand + block.mat()(a, b) * matrix_unit(d, quartet[a], quartet[b]);
      }
    }
  }
  std::vector<Operator> l_rand;
  for (int k = 0; k < 2; ++k) {
    Operator l = Operator::zero(d);
    const Operator block = random_matrix(rng, 4);
    for (Index a = 0; a < 4; ++a) {
      for (Index b = 0; b < 4; ++b) {
        l = l + block.mat()(a, b) * matrix_unit(d, quartet[a], quartet[b]);
      }
    }
    l_rand.push_back(l);
  }
  const SuperOperator target = assemble(GklsGenerator(h_rand, l_rand));

  // Kossakowski fit over the paired dissipators with indices running over
  // the whole space (the quartet-indexed family alone misses the Hamiltonian
  // part once the quartet is a proper subset).
  std::vector<SuperOperator> family;
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) {
      for (Index k = 0; k < d; ++k) {
        for (Index l = 0; l < d; ++l) {
          const SuperOperator dij_kl =
              generalized_dissipator(matrix_unit(d, i, j), matrix_unit(d, k, l));
          const SuperOperator dkl_ij =
              generalized_dissipator(matrix_unit(d, k, l), matrix_unit(d, i, j));
          family.push_back(dij_kl + dkl_ij);
          family.push_back(imag_unit * (dij_kl - dkl_ij));
        }
      }
    }
  }
  RealMatrix a_mat(realify(target).size(), static_cast<Index>(family.size()));
  for (std::size_t c = 0; c < family.size(); ++c) {
    a_mat.col(static_cast<Index>(c)) = realify(family[c]);
  }
  const RealVector b_vec = realify(target);
  const RealVector coeffs = a_mat.colPivHouseholderQr().solve(b_vec);
  report.lindblad_reconstruction_error = (a_mat * coeffs - b_vec).norm() / b_vec.norm();

  report.pass = report.max_pair_residual < residual_tol &&
                report.lindblad_reconstruction_error < residual_tol;
  return report;
}

double commutation_identity_check(const Operator& h, const Operator& a) {
  if (!h.is_hermitian()) {
    throw std::invalid_argument("commutation_identity_check: h must be Hermitian");
  }
  const SuperOperator lhs = commutator(hamiltonian_superop(h), dissipator_superop(a));
  const Operator ha = commutator(h, a);
  const Operator minus = a - imag_unit * ha;
  const Operator plus = a + imag_unit * ha;
  const SuperOperator rhs =
      0.5 * dissipator_superop(minus) - 0.5 * dissipator_superop(plus);
  return (lhs - rhs).norm();
}

}  // namespace lindpur
