#include "qhom/linalg.hpp"

namespace qhom {

int bareiss_rank(std::vector<std::vector<LaurentQ>> m) {
  int rows = (int)m.size();
  int cols = rows ? (int)m[0].size() : 0;
  int rank = 0;
  LaurentQ prev(1L);  // previous pivot, divides the 2x2 determinants exactly
  for (int step = 0; step < std::min(rows, cols); ++step) {
    // pivot: nonzero entry with fewest terms, searched in the trailing block
    int pr = -1, pc = -1;
    size_t best = SIZE_MAX;
    for (int i = step; i < rows; ++i)
      for (int j = step; j < cols; ++j)
        if (!m[i][j].is_zero() && m[i][j].terms().size() < best) {
          best = m[i][j].terms().size();
          pr = i;
          pc = j;
        }
    if (pr == -1) break;
    std::swap(m[step], m[pr]);
    for (int i = 0; i < rows; ++i) std::swap(m[i][step], m[i][pc]);
    ++rank;
    const LaurentQ& piv = m[step][step];
    for (int i = step + 1; i < rows; ++i) {
      for (int j = step + 1; j < cols; ++j) {
        LaurentQ num = piv * m[i][j] - m[i][step] * m[step][j];
        m[i][j] = num.is_zero() ? num : poly_div_exact(num, prev);
      }
      m[i][step] = LaurentQ();
    }
    prev = piv;
  }
  return rank;
}

SparseMat<Rat> specialize_mat(const SparseMat<Scalar>& m, const Rat& q0) {
  SparseMat<Rat> out(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i) {
    out.row[i].reserve(m.row[i].size());
    for (const auto& [c, v] : m.row[i]) {
      Rat r = v.evaluate(q0);
      if (r != 0) out.row[i].push_back({c, r});
    }
  }
  return out;
}

int matrix_rank(const SparseMat<Scalar>& m, const ScalarField& field) {
  bool has_symbolic = false;
  for (int i = 0; i < m.rows && !has_symbolic; ++i)
    for (const auto& [c, v] : m.row[i])
      if (!v.is_rational()) {
        has_symbolic = true;
        break;
      }

  if (field.symbolic_mode()) {
    if (!has_symbolic) {
      SparseMat<Rat> rm(m.rows, m.cols);
      for (int i = 0; i < m.rows; ++i)
        for (const auto& [c, v] : m.row[i]) rm.row[i].push_back({c, v.rat()});
      return sparse_rank(std::move(rm));
    }
    // Clear denominators row by row, then run fraction-free elimination.
    std::vector<std::vector<LaurentQ>> dense(m.rows, std::vector<LaurentQ>(m.cols));
    for (int i = 0; i < m.rows; ++i) {
      LaurentQ lcm(1L);
      for (const auto& [c, v] : m.row[i]) {
        LaurentQ den = v.denominator();
        if (!den.is_one()) {
          LaurentQ g = poly_gcd(lcm.shifted(-lcm.min_exp()), den.shifted(-den.min_exp()));
          lcm = poly_div_exact(lcm * den, g);
        }
      }
      for (const auto& [c, v] : m.row[i])
        dense[i][c] = v.numerator() * poly_div_exact(lcm, v.denominator());
    }
    return bareiss_rank(std::move(dense));
  }

  // Specialized mode
  int r0 = sparse_rank(specialize_mat(m, field.q0));
  if (has_symbolic) {
    int r1 = sparse_rank(specialize_mat(m, field.confirm_q0()));
    if (r0 != r1)
      throw Error(Errc::generic_rank_uncertain,
                  "rank differs between specialization points; fall back to symbolic mode");
  }
  return r0;
}

}  // namespace qhom
