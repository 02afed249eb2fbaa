#include "qhom/homology.hpp"

#include <algorithm>
#include <tuple>

#include "qhom/rewrite.hpp"

namespace qhom {

namespace {

long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// column views of a row-stored sparse matrix
std::vector<std::vector<std::pair<int, Scalar>>> columns_of(const SparseMat<Scalar>& m) {
  std::vector<std::vector<std::pair<int, Scalar>>> cols((size_t)m.cols);
  for (int r = 0; r < m.rows; ++r)
    for (const auto& [c, v] : m.row[r]) cols[(size_t)c].push_back({r, v});
  return cols;
}

}  // namespace

std::vector<SyzygySpace> koszul_syzygies(const QuadraticData& qd, int nMax) {
  if (nMax < 0) throw Error(Errc::invalid_config, "koszul_syzygies: negative cutoff");
  const int m = qd.gens->size();
  std::vector<SyzygySpace> out;

  SyzygySpace k0;
  k0.n = 0;
  k0.m = m;
  k0.basis = SparseMat<Scalar>(1, 1);
  k0.basis.add(0, 0, Scalar(1));
  out.push_back(std::move(k0));
  if (nMax == 0) return out;

  SyzygySpace k1;
  k1.n = 1;
  k1.m = m;
  k1.basis = SparseMat<Scalar>::identity(m);
  k1.lambda = SparseMat<Scalar>::identity(m);
  k1.rho = SparseMat<Scalar>::identity(m);
  out.push_back(std::move(k1));

  // annihilator of the relation span in (V tensor V)^*, as coefficient columns
  SparseMat<Scalar> relmat((int)qd.relations.size(), m * m);
  for (size_t k = 0; k < qd.relations.size(); ++k)
    for (const auto& [w, c] : qd.relations[k].terms()) relmat.add((int)k, w[0] * m + w[1], c);
  SparseMat<Scalar> rperp = nullspace(relmat);  // (m*m) x p

  // by_b[b]: (constraint column c, first letter a, phi_c[a, b])
  std::vector<std::vector<std::tuple<int, int, Scalar>>> by_b((size_t)m);
  for (int r = 0; r < rperp.rows; ++r)
    for (const auto& [c, v] : rperp.row[r]) by_b[(size_t)(r % m)].push_back({c, r / m, v});

  for (int n = 2; n <= nMax; ++n) {
    const SyzygySpace& prev = out.back();
    if (prev.dim() == 0) break;  // all later spaces vanish too
    const int pdim = prev.dim();
    const long wlen = ipow(m, n - 2);  // tail words w'

    // x = sum c_{aj} a tensor prev[j] lies in R tensor V^{n-2} iff for every
    // phi in the annihilator and every tail w':
    //   sum_{a,j} c_{aj} sum_b phi[a,b] prev[j][b w'] = 0
    SparseMat<Scalar> cons((int)(rperp.cols * wlen), m * pdim);
    for (int W = 0; W < prev.basis.rows; ++W) {
      if (prev.basis.row[W].empty()) continue;
      const long b = W / wlen;
      const long wp = W % wlen;
      for (const auto& [j, v] : prev.basis.row[W])
        for (const auto& [c, a, phi] : by_b[(size_t)b])
          cons.add((int)(c * wlen + wp), a * pdim + j, phi * v);
    }

    SyzygySpace cur;
    cur.n = n;
    cur.m = m;
    cur.lambda = nullspace(cons);  // (m * pdim) x dim_n, canonical

    auto prevcols = columns_of(prev.basis);
    const long rows_n = ipow(m, n);
    cur.basis = SparseMat<Scalar>((int)rows_n, cur.lambda.cols);
    const long prev_rows = ipow(m, n - 1);
    for (int r = 0; r < cur.lambda.rows; ++r) {
      const int a = r / pdim, j = r % pdim;
      for (const auto& [i, c] : cur.lambda.row[r])
        for (const auto& [W, v] : prevcols[(size_t)j])
          cur.basis.add((int)(a * prev_rows + W), i, c * v);
    }

    // right decomposition: solve (prev tensor V) X = basis
    SparseMat<Scalar> A((int)rows_n, pdim * m);
    for (int j = 0; j < pdim; ++j)
      for (const auto& [W, v] : prevcols[(size_t)j])
        for (int g = 0; g < m; ++g) A.add((int)((long)W * m + g), j * m + g, v);
    auto X = solve_columns(A, cur.basis);
    if (!X)
      throw Error(Errc::internal_consistency,
                  "koszul_syzygies: space does not lie in K_{n-1} tensor V");
    cur.rho = std::move(*X);
    out.push_back(std::move(cur));
  }
  return out;
}

long GradedComplex::dim_at(int n, const Deg& d) const {
  auto it = dims.find({n, d});
  return it == dims.end() ? 0 : it->second;
}

const SparseMat<Rat>* GradedComplex::diff_at(int n, const Deg& d) const {
  auto it = diff.find({n, d});
  return it == diff.end() ? nullptr : &it->second;
}

namespace {

Rat to_rat(const Scalar& s) {
  if (!s.is_rational())
    throw Error(Errc::invalid_specialization, "expected a specialized (rational) coefficient");
  return s.rat();
}

// basis words of each degree with index lookup
struct DegreeBasis {
  std::vector<std::vector<Word>> words;
  std::vector<std::map<Word, int, WordDegLexLess>> index;

  DegreeBasis(const PresentedAlgebra& alg, int dMax) {
    words.resize((size_t)dMax + 1);
    index.resize((size_t)dMax + 1);
    for (int e = 0; e <= dMax; ++e) {
      words[(size_t)e] = basis_words_of_degree(alg, e);
      for (int i = 0; i < (int)words[(size_t)e].size(); ++i) index[(size_t)e][words[(size_t)e][(size_t)i]] = i;
    }
  }
};

using Expansion = std::vector<std::pair<int, Rat>>;

// memoized one-generator multiplications, expanded over the next degree
struct MultCache {
  const PresentedAlgebra& alg;
  const AlgebraMap& twist;
  const DegreeBasis& bas;
  std::map<std::tuple<int, int, int>, Expansion> right_memo;  // (e, word, g): NF(w * twist(g))
  std::map<std::tuple<int, int, int>, Expansion> left_memo;   // (e, word, g): NF(g * w)

  Expansion expand(const NCPoly& p, int deg) {
    Expansion out;
    for (const auto& [w, c] : p.terms()) {
      auto it = bas.index[(size_t)deg].find(w);
      if (it == bas.index[(size_t)deg].end())
        throw Error(Errc::internal_consistency, "normal form left the expected graded component");
      out.push_back({it->second, to_rat(c)});
    }
    return out;
  }

  const Expansion& right(int e, int widx, int g) {
    auto key = std::make_tuple(e, widx, g);
    auto it = right_memo.find(key);
    if (it != right_memo.end()) return it->second;
    NCPoly p = NCPoly::monomial(alg.gens(), bas.words[(size_t)e][(size_t)widx], Scalar(1));
    return right_memo.emplace(key, expand(alg.nf(p * twist.images[(size_t)g]), e + 1)).first->second;
  }

  const Expansion& left(int e, int widx, int g) {
    auto key = std::make_tuple(e, widx, g);
    auto it = left_memo.find(key);
    if (it != left_memo.end()) return it->second;
    Word w;
    w.push_back(g);
    const Word& mw = bas.words[(size_t)e][(size_t)widx];
    w.insert(w.end(), mw.begin(), mw.end());
    NCPoly p = NCPoly::monomial(alg.gens(), std::move(w), Scalar(1));
    return left_memo.emplace(key, expand(alg.nf(p), e + 1)).first->second;
  }
};

}  // namespace

GradedComplex build_koszul_complex(const TwistedBimodule& M, const std::vector<SyzygySpace>& syz,
                                   int dMax) {
  const AlgebraPtr& B = M.algebra;
  if (B->field().symbolic_mode())
    throw Error(Errc::invalid_specialization, "chain complexes are built over a specialized field");
  if (!B->graded() || !B->system().certified())
    throw Error(Errc::incompatible_algebra, "Koszul complex needs a certified graded algebra");
  if (M.twist.source != B || M.twist.target != B)
    throw Error(Errc::incompatible_algebra, "twist must be an endomorphism of the coefficient algebra");
  if (!is_homomorphism(M.twist))
    throw Error(Errc::incompatible_algebra, "twist does not preserve the relations");
  for (const NCPoly& img : M.twist.images)
    for (const auto& [w, c] : img.terms())
      if (w.size() != 1)
        throw Error(Errc::incompatible_algebra, "twist must preserve the grading");
  if (syz.empty()) throw Error(Errc::invalid_config, "no syzygy data");
  if (dMax < 0) throw Error(Errc::invalid_config, "negative degree cutoff");

  GradedComplex c;
  c.field = B->field();
  const int last = (int)syz.size() - 1;
  c.exact_top = syz[(size_t)last].dim() == 0;
  c.n_top = c.exact_top ? last - 1 : last;

  DegreeBasis bas(*B, dMax);
  MultCache mult{*B, M.twist, bas, {}, {}};

  for (int d = 0; d <= dMax; ++d) c.degrees.push_back({d});
  for (int n = 0; n <= c.n_top; ++n)
    for (int d = 0; d <= dMax; ++d) {
      long dim = 0;
      if (d - n >= 0) dim = (long)bas.words[(size_t)(d - n)].size() * syz[(size_t)n].dim();
      c.dims[{n, {d}}] = dim;
    }

  for (int n = 1; n <= c.n_top; ++n) {
    const SyzygySpace& K = syz[(size_t)n];
    const int kprev = syz[(size_t)(n - 1)].dim();
    // column views of the decompositions, reused across internal degrees
    std::vector<std::vector<std::pair<int, Scalar>>> lamcols((size_t)K.dim()),
        rhocols((size_t)K.dim());
    for (int r = 0; r < K.lambda.rows; ++r)
      for (const auto& [i, v] : K.lambda.row[r]) lamcols[(size_t)i].push_back({r, v});
    for (int r = 0; r < K.rho.rows; ++r)
      for (const auto& [i, v] : K.rho.row[r]) rhocols[(size_t)i].push_back({r, v});
    // d(m (x) x1..xn) = m*x1 (x) x2..xn + (-1)^n xn*m (x) x1..x_{n-1};
    // the alternating sign is forced by d^2 = 0, its phase by the n = 1 case,
    // where d must send m (x) x to the (twisted) commutator of x and m.
    const Rat rho_sign = (n % 2 == 0) ? Rat(1) : Rat(-1);

    for (int d = 0; d <= dMax; ++d) {
      const long cols = c.dims[{n, {d}}];
      const long rows = c.dims[{n - 1, {d}}];
      if (cols == 0) continue;
      const int e = d - n;  // module degree of the source
      SparseMat<Rat> mat((int)rows, (int)cols);
      const int nwords = (int)bas.words[(size_t)e].size();
      for (int mi = 0; mi < nwords; ++mi)
        for (int ki = 0; ki < K.dim(); ++ki) {
          const int col = mi * K.dim() + ki;
          for (const auto& [rk, cv] : lamcols[(size_t)ki]) {
            const int g = rk / kprev, j = rk % kprev;
            const Rat cr = to_rat(cv);
            for (const auto& [mj, r] : mult.right(e, mi, g))
              mat.add(mj * kprev + j, col, cr * r);
          }
          for (const auto& [rk, cv] : rhocols[(size_t)ki]) {
            const int j = rk / K.m, g = rk % K.m;
            const Rat cr = rho_sign * to_rat(cv);
            for (const auto& [mj, r] : mult.left(e, mi, g))
              mat.add(mj * kprev + j, col, cr * r);
          }
        }
      c.diff[{n, {d}}] = std::move(mat);
    }
  }

  // machine check: consecutive differentials compose to zero
  for (int n = 2; n <= c.n_top; ++n)
    for (int d = 0; d <= dMax; ++d) {
      const SparseMat<Rat>* hi = c.diff_at(n, {d});
      const SparseMat<Rat>* lo = c.diff_at(n - 1, {d});
      if (!hi || !lo || hi->cols == 0 || lo->rows == 0) continue;
      if (!mat_mul(*lo, *hi).is_zero())
        throw Error(Errc::construction_failure, "differential does not square to zero");
    }
  return c;
}

long HomologyTable::hom_dim(int n, const Deg& d) const {
  for (const auto& r : rows)
    if (r.n == n && r.d == d) return r.hom_dim;
  return 0;
}

int HomologyTable::top_nonzero() const {
  int top = -1;
  for (const auto& r : rows)
    if (r.hom_dim > 0) top = std::max(top, r.n);
  return top;
}

HomologyTable homology_dims(const GradedComplex& c) {
  HomologyTable t;
  t.max_n = c.report_n_max();
  t.complete = c.exact_top;
  std::map<NDKey, long> rank_cache;
  auto rank_of = [&](int n, const Deg& d) -> long {
    const SparseMat<Rat>* m = c.diff_at(n, d);
    if (!m) return 0;
    auto key = NDKey{n, d};
    auto it = rank_cache.find(key);
    if (it != rank_cache.end()) return it->second;
    long r = sparse_rank(*m);
    rank_cache[key] = r;
    return r;
  };

  for (int n = 0; n <= t.max_n; ++n)
    for (const Deg& d : c.degrees) {
      long chain = c.dim_at(n, d);
      if (chain == 0) continue;
      HomologyRow row;
      row.n = n;
      row.d = d;
      row.chain_dim = chain;
      row.rank_out = n >= 1 ? rank_of(n, d) : 0;
      row.rank_in = rank_of(n + 1, d);
      row.hom_dim = chain - row.rank_out - row.rank_in;
      if (row.hom_dim < 0)
        throw Error(Errc::internal_consistency, "negative homology dimension (rank bookkeeping)");
      t.rows.push_back(std::move(row));
    }
  return t;
}

DualityReport duality_check_B(int N, int dMax, const ScalarField& field) {
  if (N != 2) throw Error(Errc::invalid_config, "duality check implemented for N = 2");
  if (field.symbolic_mode())
    throw Error(Errc::invalid_specialization, "duality check runs over a specialized field");

  AlgebraPtr B = build_matrix_algebra(N, field);
  std::vector<SyzygySpace> syz = koszul_syzygies(quadratic_data(*B), N * N + 1);
  GradedComplex cplx = build_koszul_complex({B, modular_sigma(B)}, syz, dMax);
  HomologyTable tab = homology_dims(cplx);

  // independent side: graded dimensions of the bounded center
  std::vector<long> cdims((size_t)dMax + 1, 0);
  for (const NCPoly& z : center_bounded(*B, dMax)) {
    int deg = (int)z.lead_word().size();
    if (deg <= dMax) ++cdims[(size_t)deg];
  }

  DualityReport rep;
  rep.N = N;
  rep.dMax = dMax;
  rep.pass = true;
  for (int d = N * N; d <= dMax; ++d) {
    DualityDegreeLine line;
    line.d = d;
    line.homology = tab.hom_dim(N * N, {d});
    line.center = cdims[(size_t)(d - N * N)];
    line.pass = line.homology == line.center;
    rep.pass = rep.pass && line.pass;
    rep.lines.push_back(line);
  }
  return rep;
}

GradedComplex laurent_complex(const ScalarField& field, int dBound, int twistExp) {
  if (field.symbolic_mode())
    throw Error(Errc::invalid_specialization, "chain complexes are built over a specialized field");
  if (dBound < 0) throw Error(Errc::invalid_config, "negative degree bound");
  GradedComplex c;
  c.field = field;
  c.n_top = 1;
  c.exact_top = true;
  const Rat entry = rat_pow(field.q0, twistExp) - 1;  // m -> m*twist(t) - t*m on D_d
  for (int d = -dBound; d <= dBound; ++d) {
    c.degrees.push_back({d});
    c.dims[{0, {d}}] = 1;
    c.dims[{1, {d}}] = 1;
    SparseMat<Rat> m(1, 1);
    m.add(0, 0, entry);
    c.diff[{1, {d}}] = std::move(m);
  }
  return c;
}

GradedComplex tensor_complexes(const GradedComplex& c1, const GradedComplex& c2) {
  if (!(c1.field == c2.field))
    throw Error(Errc::incompatible_algebra, "tensor product of complexes over different fields");

  GradedComplex c;
  c.field = c1.field;
  c.n_top = c1.n_top + c2.n_top;
  c.exact_top = c1.exact_top && c2.exact_top;

  for (const Deg& d1 : c1.degrees)
    for (const Deg& d2 : c2.degrees) {
      Deg d = d1;
      d.insert(d.end(), d2.begin(), d2.end());
      c.degrees.push_back(d);

      // block (i, j), i + j = n, ordered by i ascending
      auto block_dim = [&](int i, int j) { return c1.dim_at(i, d1) * c2.dim_at(j, d2); };
      auto block_offset = [&](int n, int i) {
        long off = 0;
        for (int ii = 0; ii < i; ++ii)
          if (n - ii >= 0) off += block_dim(ii, n - ii);
        return off;
      };

      for (int n = 0; n <= c.n_top; ++n) {
        long dim = 0;
        for (int i = std::max(0, n - c2.n_top); i <= std::min(n, c1.n_top); ++i)
          dim += block_dim(i, n - i);
        c.dims[{n, d}] = dim;
      }
      for (int n = 1; n <= c.n_top; ++n) {
        const long rows = c.dims[{n - 1, d}];
        const long cols = c.dims[{n, d}];
        if (cols == 0) continue;
        SparseMat<Rat> mat((int)rows, (int)cols);
        for (int i = std::max(0, n - c2.n_top); i <= std::min(n, c1.n_top); ++i) {
          const int j = n - i;
          const long sdim1 = c1.dim_at(i, d1), sdim2 = c2.dim_at(j, d2);
          if (sdim1 == 0 || sdim2 == 0) continue;
          const long src = block_offset(n, i);
          // first-factor differential tensor identity
          if (const SparseMat<Rat>* m1 = c1.diff_at(i, d1); m1 && i >= 1) {
            const long dst = block_offset(n - 1, i - 1);
            for (int r = 0; r < m1->rows; ++r)
              for (const auto& [cc, v] : m1->row[r])
                for (long b = 0; b < sdim2; ++b)
                  mat.add((int)(dst + r * sdim2 + b), (int)(src + cc * sdim2 + b), v);
          }
          // identity tensor second-factor differential, with the sign (-1)^i
          if (const SparseMat<Rat>* m2 = c2.diff_at(j, d2); m2 && j >= 1) {
            const long dst = block_offset(n - 1, i);
            const long tdim2 = c2.dim_at(j - 1, d2);
            const Rat sgn = (i % 2 == 0) ? Rat(1) : Rat(-1);
            for (int r = 0; r < m2->rows; ++r)
              for (const auto& [cc, v] : m2->row[r])
                for (long a = 0; a < sdim1; ++a)
                  mat.add((int)(dst + a * tdim2 + r), (int)(src + a * sdim2 + cc), sgn * v);
          }
        }
        c.diff[{n, d}] = std::move(mat);
      }
      for (int n = 2; n <= c.n_top; ++n) {
        const SparseMat<Rat>* hi = c.diff_at(n, d);
        const SparseMat<Rat>* lo = c.diff_at(n - 1, d);
        if (!hi || !lo || hi->cols == 0 || lo->rows == 0) continue;
        if (!mat_mul(*lo, *hi).is_zero())
          throw Error(Errc::construction_failure, "tensor differential does not square to zero");
      }
    }
  return c;
}

bool kunneth_check(const HomologyTable& t1, const HomologyTable& t2, const HomologyTable& t12) {
  // degree sets actually present in the factors
  std::vector<Deg> d1s, d2s;
  for (const auto& r : t1.rows)
    if (std::find(d1s.begin(), d1s.end(), r.d) == d1s.end()) d1s.push_back(r.d);
  for (const auto& r : t2.rows)
    if (std::find(d2s.begin(), d2s.end(), r.d) == d2s.end()) d2s.push_back(r.d);

  for (const Deg& d1 : d1s)
    for (const Deg& d2 : d2s) {
      Deg d = d1;
      d.insert(d.end(), d2.begin(), d2.end());
      for (int n = 0; n <= t1.max_n + t2.max_n; ++n) {
        long conv = 0;
        for (int i = 0; i <= n; ++i) conv += t1.hom_dim(i, d1) * t2.hom_dim(n - i, d2);
        if (t12.hom_dim(n, d) != conv) return false;
      }
    }
  return true;
}

}  // namespace qhom
