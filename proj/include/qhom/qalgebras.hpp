#pragma once

// The specific algebras under study, all as certified rewrite presentations:
//   B = quantum N x N matrix algebra (generators u_ij),
//   A = its quotient by det_q = 1,
//   C = its localization at det_q (adjoined central inverse dinv),
//   D = Laurent polynomials k[t, tinv],
// plus the quantum determinant, the modular automorphism sigma, and the
// centrality / homomorphism / bounded-center / factorization checks.

#include <memory>
#include <optional>
#include <vector>

#include "qhom/rewrite.hpp"

namespace qhom {

enum class AlgebraKind { MatrixB, SpecialA, GeneralC, LaurentD, External };

class PresentedAlgebra {
 public:
  PresentedAlgebra(AlgebraKind kind, int n, ScalarField field, RewriteSystem system, bool graded,
                   std::vector<NCPoly> relations);

  AlgebraKind kind() const { return kind_; }
  int n() const { return n_; }  // matrix size N; 0 for D / External
  const ScalarField& field() const { return field_; }
  const RewriteSystem& system() const { return system_; }
  RewriteSystem& system() { return system_; }
  bool graded() const { return graded_; }
  // the defining relations (pre-orientation), for homomorphism checks
  const std::vector<NCPoly>& relations() const { return relations_; }

  const GensPtr& gens() const { return system_.gens(); }
  GenId gen(const std::string& name) const { return gens()->id(name); }
  NCPoly unit() const { return NCPoly::unit(gens()); }
  NCPoly gen_poly(const std::string& name) const { return NCPoly::generator(gens(), gen(name)); }
  NCPoly nf(const NCPoly& p) const { return normal_form(system_, p); }

  // (i, j) coordinates of matrix generators u_ij, where applicable
  std::optional<std::pair<int, int>> matrix_coords(GenId g) const;

 private:
  AlgebraKind kind_;
  int n_;
  ScalarField field_;
  RewriteSystem system_;
  bool graded_;
  std::vector<NCPoly> relations_;
};

using AlgebraPtr = std::shared_ptr<const PresentedAlgebra>;

struct AlgebraMap {
  AlgebraPtr source;
  AlgebraPtr target;
  std::vector<NCPoly> images;  // by source generator id, in target normal form

  // extend multiplicatively and reduce in the target
  NCPoly apply(const NCPoly& p) const;
};

// Quantum matrix algebra on N^2 generators with the row/column q-commutation
// and mixed relations; certified confluent for N <= 3.
AlgebraPtr build_matrix_algebra(int N, const ScalarField& field);

// sum over permutations pi of (-q)^{l(pi)} u_{1,pi(1)} ... u_{N,pi(N)}
NCPoly quantum_determinant(int N, const ScalarField& field);
NCPoly quantum_determinant(const PresentedAlgebra& alg);

bool is_central(const NCPoly& x, const PresentedAlgebra& alg);

// the diagonal automorphism u_ij -> q^{2(N+1-i-j)} u_ij (dinv fixed on C)
AlgebraMap modular_sigma(const AlgebraPtr& alg);

AlgebraMap identity_map(const AlgebraPtr& alg);

bool is_homomorphism(const AlgebraMap& f);

// B modulo det_q = 1. Certified confluent at N = 2; at N = 3 the confluence
// check still runs and its outcome is attached for callers to inspect.
AlgebraPtr build_special_algebra(int N, const ScalarField& field);

// B with a central inverse dinv of det_q adjoined; dinv carries degree -N.
// Certification is mandatory at N = 2 and attempted at N = 3.
AlgebraPtr build_general_algebra(int N, const ScalarField& field);

// Laurent algebra D on t, tinv with degrees +1 / -1.
AlgebraPtr build_laurent_algebra(const ScalarField& field);
// basis words of D in weighted degree e (a single word: t^e or tinv^{-e})
std::vector<Word> laurent_basis_degree(const PresentedAlgebra& D, int e);

struct GlFactorization {
  AlgebraMap phi;               // C -> A tensor D (tensor presented externally)
  AlgebraPtr tensor_algebra;    // the target
  bool homomorphism = false;
  bool counting_bijection = false;  // normal-word counts match through degree <= bound
  int bound = 0;
  std::vector<long> source_counts;  // C normal words of each length 0..bound
  std::vector<long> image_ranks;    // rank of their images in the target
};

// The factorization C = A tensor D at N = 2: first-row generators pick up a
// t, dinv maps to tinv; homomorphism plus bounded counting bijection.
GlFactorization gl_factorization_iso(int N, const ScalarField& field);

// Basis of the bounded center: all x in the span of normal words of length
// <= D with NF(x g - g x) = 0 for every generator g.
std::vector<NCPoly> center_bounded(const PresentedAlgebra& alg, int D);

// Basis words of a graded algebra in weighted degree d (deglex order).
std::vector<Word> basis_words_of_degree(const PresentedAlgebra& alg, int d);

}  // namespace qhom
