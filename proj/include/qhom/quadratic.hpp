#pragma once

// Quadratic-algebra data and the Koszul dual side: the orthogonal-complement
// construction of the dual relation space, the finite-dimensional dual
// algebra with its multiplication table, the Frobenius functional (projection
// onto the longest basis word), and the Nakayama automorphism extracted from
// it. The dual is built twice — from its own relation list and from
// orthogonality — and the two are cross-checked elsewhere.

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "qhom/linalg.hpp"
#include "qhom/qalgebras.hpp"

namespace qhom {

struct QuadraticData {
  GensPtr gens;                   // basis of the degree-1 space V
  std::vector<NCPoly> relations;  // homogeneous quadratic, linearly independent
};

// Extract (V, R) from a graded quadratic presented algebra.
QuadraticData quadratic_data(const PresentedAlgebra& alg);

// Dual generators (name-prefixed "...hat" style: u11 -> uhat11) with the
// canonical basis of the orthogonal complement of R under the pairing
// <uhat_a tensor uhat_b, u_c tensor u_d> = delta_ac delta_bd.
QuadraticData quadratic_dual(const QuadraticData& qd, const ScalarField& field);

// The finite-dimensional graded dual algebra: normal words indexed
// ascending by (degree, lex); products memoized (eagerly filled at N = 2).
class FiniteGradedAlgebra {
 public:
  FiniteGradedAlgebra(AlgebraPtr presentation, bool eager);

  const AlgebraPtr& presentation() const { return pres_; }
  const ScalarField& field() const { return pres_->field(); }
  int dim() const { return (int)basis_.size(); }
  int top_degree() const { return top_; }
  const std::vector<Word>& basis() const { return basis_; }
  int index_of(const Word& w) const;
  int degree_of(int idx) const { return (int)basis_[(size_t)idx].size(); }
  // basis index range [first, last) of a given degree
  std::pair<int, int> degree_range(int deg) const;
  int top_index() const { return degree_range(top_).first; }

  // product of basis elements i, j as a sparse vector of basis coordinates
  const std::vector<std::pair<int, Scalar>>& product(int i, int j) const;

 private:
  AlgebraPtr pres_;
  std::vector<Word> basis_;
  std::map<Word, int, WordDegLexLess> index_;
  std::vector<int> offsets_;  // offsets_[d] = first index of degree d
  int top_ = 0;
  // guards memo_ (idempotent fill); held by pointer so the class stays movable
  mutable std::unique_ptr<std::mutex> mu_;
  mutable std::map<std::pair<int, int>, std::vector<std::pair<int, Scalar>>> memo_;
};

// Dual of the quantum matrix algebra at N, from its own relation list,
// certified confluent; basis = strictly increasing square-free words.
FiniteGradedAlgebra build_dual_algebra(int N, const ScalarField& field);

struct FrobeniusFunctional {
  std::map<Word, Scalar, WordDegLexLess> values;  // supported on the top word

  Scalar apply(const NCPoly& x) const {
    Scalar acc;
    for (const auto& [w, c] : values) acc += c * x.coeff(w);
    return acc;
  }
};

// projection onto the top basis word, normalized to 1
FrobeniusFunctional frobenius_functional(const FiniteGradedAlgebra& alg);

// Nondegeneracy: every pairing matrix P_n[x,y] = h(x y) (x of degree n,
// y of degree top - n) has full rank.
bool check_frobenius(const FiniteGradedAlgebra& alg, const FrobeniusFunctional& h);

struct NakayamaData {
  std::vector<NCPoly> nu;  // degree-1 images per dual generator
  bool diagonal = false;
  // diagonal data nu(uhat_ij) = sign * q^{e_ij} * uhat_ij
  std::map<std::pair<int, int>, int> exponents;
  int sign = 1;
};

// Solve h(x g) = h(nu(g) x) over all top-minus-one basis words x for each
// generator g; requires check_frobenius to have passed.
NakayamaData nakayama(const FiniteGradedAlgebra& alg, const FrobeniusFunctional& h);

// Convert Nakayama exponents to the modular automorphism of B under the
// fixed convention (exponents transfer directly, the global sign is the
// grading artifact and is dropped); the result must coincide with
// modular_sigma(B) and fix det_q, else convention_mismatch.
AlgebraMap sigma_from_nakayama(const NakayamaData& nk, int N, const AlgebraPtr& B);
AlgebraMap sigma_from_nakayama(const NakayamaData& nk, int N, const ScalarField& field);

}  // namespace qhom
