#pragma once

// Graded chain complexes over a specialized coefficient field: the Koszul
// complex computing twisted Hochschild homology of the quantum matrix
// algebra, the two-term complex for the Laurent algebra, tensor products
// with the standard sign, and degree-wise homology dimension tables.
//
// Internal degrees are vectors (one slot per tensor factor) so that tensor
// products keep exact per-bidegree bookkeeping.

#include <array>
#include <map>
#include <vector>

#include "qhom/linalg.hpp"
#include "qhom/qalgebras.hpp"
#include "qhom/quadratic.hpp"

namespace qhom {

// K_n inside V^{tensor n}, with its decompositions over K_{n-1}
struct SyzygySpace {
  int n = 0;
  int m = 0;  // dim V
  // columns = basis vectors; rows = words of length n, flattened big-endian
  // (index = sum w[t] * m^{n-1-t})
  SparseMat<Scalar> basis;
  // basis[i] = sum lambda[(g * prevdim + j), i] g tensor prev[j]  (n >= 1)
  SparseMat<Scalar> lambda;
  // basis[i] = sum rho[(j * m + g), i] prev[j] tensor g           (n >= 1)
  SparseMat<Scalar> rho;

  int dim() const { return basis.cols; }
};

// K_0 = k, K_1 = V, K_2 = span of relations, and onward by
// K_n = (V tensor K_{n-1}) intersected with (R tensor V^{n-2}).
// Stops early after the first vanishing space (all later ones vanish too).
std::vector<SyzygySpace> koszul_syzygies(const QuadraticData& qd, int nMax);

struct TwistedBimodule {
  AlgebraPtr algebra;
  AlgebraMap twist;  // right action acts through this automorphism
};

using Deg = std::vector<int>;  // internal multi-degree
using NDKey = std::pair<int, Deg>;

struct GradedComplex {
  ScalarField field;  // always Specialized: matrices live over Rat
  int n_top = 0;      // largest homological index carried
  // true when the complex provably ends at n_top (no chains above), so the
  // n_top homology row is exact; false for a truncation
  bool exact_top = false;
  std::vector<Deg> degrees;        // internal degrees carried, each complete
  std::map<NDKey, long> dims;      // chain dimension at (n, deg)
  std::map<NDKey, SparseMat<Rat>> diff;  // d_n at deg: C_n -> C_{n-1}, n >= 1

  long dim_at(int n, const Deg& d) const;
  const SparseMat<Rat>* diff_at(int n, const Deg& d) const;
  // largest n whose homology is computable: n_top if exact, n_top - 1 if not
  int report_n_max() const { return exact_top ? n_top : n_top - 1; }
};

// Chains at (n, d) = B_{d-n} tensor K_n for d = 0..dMax, differential
// lambda-part minus (-1)^n rho-part, where the first tensor slot acts on the
// module from the right through the twist and the last slot acts from the
// left. d^2 = 0 is asserted at every computed (n, d).
GradedComplex build_koszul_complex(const TwistedBimodule& M, const std::vector<SyzygySpace>& syz,
                                   int dMax);

struct HomologyRow {
  int n = 0;
  Deg d;
  long chain_dim = 0;
  long rank_out = 0;  // rank of d_n at this degree
  long rank_in = 0;   // rank of d_{n+1} at this degree
  long hom_dim = 0;   // chain_dim - rank_out - rank_in
};

struct HomologyTable {
  int max_n = 0;          // rows cover n = 0..max_n
  bool complete = false;  // no homology above max_n anywhere
  std::vector<HomologyRow> rows;  // ordered by (n, d)

  long hom_dim(int n, const Deg& d) const;
  // largest n with a nonzero entry at some degree, -1 if none
  int top_nonzero() const;
};

HomologyTable homology_dims(const GradedComplex& c);

struct DualityDegreeLine {
  int d = 0;
  long homology = 0;  // dim H_{N^2}(B, B_sigma) in internal degree d
  long center = 0;    // dim of the degree-(d - N^2) graded piece of Z(B)
  bool pass = false;
};

struct DualityReport {
  int N = 0;
  int dMax = 0;
  std::vector<DualityDegreeLine> lines;  // d = N^2 .. dMax
  bool pass = false;
};

// Two independent pipelines: the twisted homology table's top row against
// the graded dimensions of the bounded center, shifted by N^2.
DualityReport duality_check_B(int N, int dMax, const ScalarField& field);

// The two-term complex for the Laurent algebra D: C_0(d) = D_d,
// C_1(d) = D_{d-1} tensor span{t}, differential m -> m*twist(t) - t*m,
// i.e. the 1x1 matrix (q0^twistExp - 1); identically zero when untwisted.
// Degrees run over -dBound..dBound.
GradedComplex laurent_complex(const ScalarField& field, int dBound, int twistExp = 0);

// Tensor product complex with the sign (-1)^i on the second differential;
// internal degrees concatenate. d^2 = 0 asserted.
GradedComplex tensor_complexes(const GradedComplex& c1, const GradedComplex& c2);

// Kunneth dimension identity: for every n and concatenated degree of the
// tensor table, its entry equals the convolution of the factor entries.
bool kunneth_check(const HomologyTable& t1, const HomologyTable& t2, const HomologyTable& t12);

}  // namespace qhom
