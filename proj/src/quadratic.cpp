#include "qhom/quadratic.hpp"

#include <cctype>

#include "qhom/rewrite.hpp"

namespace qhom {

QuadraticData quadratic_data(const PresentedAlgebra& alg) {
  for (int w : alg.system().weights())
    if (w != 1) throw Error(Errc::not_graded, "quadratic_data: generators must all have weight 1");
  const auto& rels = alg.relations();
  const int n = alg.gens()->size();
  for (const auto& r : rels) {
    if (r.is_zero()) throw Error(Errc::not_graded, "quadratic_data: zero relation");
    for (const auto& [w, c] : r.terms())
      if (w.size() != 2) throw Error(Errc::not_graded, "quadratic_data: relation is not quadratic");
  }
  // linear independence of the relation space inside V tensor V
  SparseMat<Scalar> m((int)rels.size(), n * n);
  for (size_t k = 0; k < rels.size(); ++k)
    for (const auto& [w, c] : rels[k].terms()) m.add((int)k, w[0] * n + w[1], c);
  if (sparse_rank(m) != (int)rels.size())
    throw Error(Errc::internal_consistency, "quadratic_data: relations are linearly dependent");
  return {alg.gens(), rels};
}

namespace {

// u11 -> uhat11: insert "hat" after the leading alphabetic run
std::string dual_name(const std::string& name) {
  size_t i = 0;
  while (i < name.size() && !std::isdigit((unsigned char)name[i])) ++i;
  return name.substr(0, i) + "hat" + name.substr(i);
}

}  // namespace

QuadraticData quadratic_dual(const QuadraticData& qd, const ScalarField&) {
  const int n = qd.gens->size();
  std::vector<std::string> names;
  names.reserve((size_t)n);
  for (const auto& nm : qd.gens->names()) names.push_back(dual_name(nm));
  GensPtr dual_gens = GeneratorSet::make(std::move(names));

  // each relation is one linear constraint on the dual coefficient vector,
  // via <uhat_a uhat_b, u_c u_d> = delta_ac delta_bd
  SparseMat<Scalar> m((int)qd.relations.size(), n * n);
  for (size_t k = 0; k < qd.relations.size(); ++k)
    for (const auto& [w, c] : qd.relations[k].terms()) m.add((int)k, w[0] * n + w[1], c);
  SparseMat<Scalar> basis = nullspace(m);

  QuadraticData out;
  out.gens = dual_gens;
  // columns of the canonical nullspace basis, one dual relation each
  std::vector<NCPoly> polys(basis.cols, NCPoly::zero(dual_gens));
  for (int r = 0; r < basis.rows; ++r)
    for (const auto& [c, v] : basis.row[r]) polys[(size_t)c].add_term({r / n, r % n}, v);
  out.relations = std::move(polys);
  return out;
}

FiniteGradedAlgebra::FiniteGradedAlgebra(AlgebraPtr presentation, bool eager)
    : pres_(std::move(presentation)), mu_(std::make_unique<std::mutex>()) {
  if (!pres_->system().certified())
    throw Error(Errc::construction_failure, "finite graded algebra requires a certified system");
  for (int w : pres_->system().weights())
    if (w != 1) throw Error(Errc::not_graded, "finite graded algebra requires unit weights");
  const int cap = 64;
  int len = 0;
  offsets_.push_back(0);
  for (; len <= cap; ++len) {
    auto ws = normal_words_of_length(pres_->system(), len);
    if (ws.empty()) break;
    for (auto& w : ws) basis_.push_back(std::move(w));
    offsets_.push_back((int)basis_.size());
  }
  if (len > cap)
    throw Error(Errc::construction_failure, "finite graded algebra: no vanishing degree up to the cap");
  top_ = len - 1;
  for (int i = 0; i < (int)basis_.size(); ++i) index_[basis_[(size_t)i]] = i;
  if (eager) {
    for (int i = 0; i < dim(); ++i)
      for (int j = 0; j < dim(); ++j) product(i, j);
  }
}

int FiniteGradedAlgebra::index_of(const Word& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) throw Error(Errc::internal_consistency, "index_of: word is not a basis word");
  return it->second;
}

std::pair<int, int> FiniteGradedAlgebra::degree_range(int deg) const {
  if (deg < 0 || deg > top_) return {dim(), dim()};
  return {offsets_[(size_t)deg], offsets_[(size_t)deg + 1]};
}

const std::vector<std::pair<int, Scalar>>& FiniteGradedAlgebra::product(int i, int j) const {
  std::lock_guard<std::mutex> lk(*mu_);
  auto key = std::make_pair(i, j);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  Word w = basis_[(size_t)i];
  w.insert(w.end(), basis_[(size_t)j].begin(), basis_[(size_t)j].end());
  NCPoly nf = normal_form(pres_->system(), NCPoly::monomial(pres_->gens(), std::move(w), Scalar(1)));
  std::vector<std::pair<int, Scalar>> out;
  out.reserve(nf.num_terms());
  for (const auto& [ww, c] : nf.terms()) out.push_back({index_of(ww), c});
  return memo_.emplace(key, std::move(out)).first->second;
}

FiniteGradedAlgebra build_dual_algebra(int N, const ScalarField& field) {
  std::vector<std::string> names;
  names.reserve((size_t)(N * N));
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) names.push_back("uhat" + std::to_string(i) + std::to_string(j));
  GensPtr gens = GeneratorSet::make(std::move(names));
  auto id = [N](int i, int j) { return (i - 1) * N + (j - 1); };
  auto mono = [&](int a, int b) { return NCPoly::monomial(gens, Word{a, b}, Scalar(1)); };

  const Scalar qi = field.q(-1);
  std::vector<NCPoly> rels;
  // squares vanish
  for (int g = 0; g < N * N; ++g) rels.push_back(mono(g, g));
  // same row: uhat_ik uhat_il = -q^-1 uhat_il uhat_ik  (k < l)
  for (int i = 1; i <= N; ++i)
    for (int k = 1; k <= N; ++k)
      for (int l = k + 1; l <= N; ++l)
        rels.push_back(mono(id(i, k), id(i, l)) + mono(id(i, l), id(i, k)).scaled(qi));
  // same column: uhat_ik uhat_jk = -q^-1 uhat_jk uhat_ik  (i < j)
  for (int k = 1; k <= N; ++k)
    for (int i = 1; i <= N; ++i)
      for (int j = i + 1; j <= N; ++j)
        rels.push_back(mono(id(i, k), id(j, k)) + mono(id(j, k), id(i, k)).scaled(qi));
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j)
      for (int k = 1; k <= N; ++k)
        for (int l = k + 1; l <= N; ++l) {
          // distinct rows and columns, aligned: plain anticommutation
          rels.push_back(mono(id(i, k), id(j, l)) + mono(id(j, l), id(i, k)));
          // anti-aligned: uhat_il uhat_jk + uhat_jk uhat_il = (q^-1 - q) uhat_ik uhat_jl
          rels.push_back(mono(id(i, l), id(j, k)) + mono(id(j, k), id(i, l)) -
                         mono(id(i, k), id(j, l)).scaled(qi - field.q(1)));
        }

  RewriteSystem sys = orient(gens, rels);
  ConfluenceReport rep = check_confluence(sys);
  if (!rep.confluent)
    throw Error(Errc::construction_failure, "dual algebra rewrite system is not confluent");
  auto alg = std::make_shared<PresentedAlgebra>(AlgebraKind::External, N, field, std::move(sys),
                                                /*graded=*/true, std::move(rels));
  return FiniteGradedAlgebra(std::move(alg), /*eager=*/N <= 2);
}

FrobeniusFunctional frobenius_functional(const FiniteGradedAlgebra& alg) {
  auto [first, last] = alg.degree_range(alg.top_degree());
  if (last - first != 1)
    throw Error(Errc::construction_failure, "frobenius_functional: top degree is not one-dimensional");
  FrobeniusFunctional h;
  h.values[alg.basis()[(size_t)first]] = Scalar(1);
  return h;
}

namespace {

// h as a coordinate vector over the full basis
std::vector<Scalar> functional_vector(const FiniteGradedAlgebra& alg, const FrobeniusFunctional& h) {
  std::vector<Scalar> v((size_t)alg.dim());
  for (const auto& [w, c] : h.values) v[(size_t)alg.index_of(w)] = c;
  return v;
}

// pairing matrix P[x][y] = h(x y) over degrees (n, top - n)
SparseMat<Scalar> pairing_matrix(const FiniteGradedAlgebra& alg, const std::vector<Scalar>& hvec, int n) {
  auto [x0, x1] = alg.degree_range(n);
  auto [y0, y1] = alg.degree_range(alg.top_degree() - n);
  SparseMat<Scalar> p(x1 - x0, y1 - y0);
  for (int x = x0; x < x1; ++x)
    for (int y = y0; y < y1; ++y) {
      Scalar acc;
      for (const auto& [k, c] : alg.product(x, y)) acc += c * hvec[(size_t)k];
      p.add(x - x0, y - y0, acc);
    }
  return p;
}

}  // namespace

bool check_frobenius(const FiniteGradedAlgebra& alg, const FrobeniusFunctional& h) {
  std::vector<Scalar> hvec = functional_vector(alg, h);
  for (int n = 0; n <= alg.top_degree(); ++n) {
    SparseMat<Scalar> p = pairing_matrix(alg, hvec, n);
    if (p.rows != p.cols) return false;
    if (matrix_rank(p, alg.field()) != p.rows) return false;
  }
  return true;
}

NakayamaData nakayama(const FiniteGradedAlgebra& alg, const FrobeniusFunctional& h) {
  const int nvars = alg.dim() > 1 ? (alg.degree_range(1).second - alg.degree_range(1).first) : 0;
  if (nvars == 0) throw Error(Errc::construction_failure, "nakayama: no degree-1 generators");
  std::vector<Scalar> hvec = functional_vector(alg, h);
  auto [g0, g1] = alg.degree_range(1);
  auto [x0, x1] = alg.degree_range(alg.top_degree() - 1);

  auto pair_of = [&](int i, int j) {
    Scalar acc;
    for (const auto& [k, c] : alg.product(i, j)) acc += c * hvec[(size_t)k];
    return acc;
  };

  // rows: top-minus-one basis words x; unknowns: coefficients of nu(g)
  SparseMat<Scalar> m(x1 - x0, g1 - g0);
  SparseMat<Scalar> l(x1 - x0, g1 - g0);
  for (int x = x0; x < x1; ++x)
    for (int g = g0; g < g1; ++g) {
      m.add(x - x0, g - g0, pair_of(g, x));  // h(ghat_k x)
      l.add(x - x0, g - g0, pair_of(x, g));  // h(x g)
    }
  auto sol = solve_columns(m, l);
  if (!sol)
    throw Error(Errc::construction_failure, "nakayama: defining system is inconsistent (functional degenerate?)");

  NakayamaData nk;
  const GensPtr& gens = alg.presentation()->gens();
  for (int g = 0; g < g1 - g0; ++g) {
    NCPoly img(gens);
    for (int k = 0; k < g1 - g0; ++k) {
      Scalar c = sol->get(k, g);
      if (!c.is_zero()) img.add_term(alg.basis()[(size_t)(g0 + k)], c);
    }
    nk.nu.push_back(std::move(img));
  }

  // the images must again satisfy the defining relations
  AlgebraMap as_map{alg.presentation(), alg.presentation(), nk.nu};
  if (!is_homomorphism(as_map))
    throw Error(Errc::internal_consistency, "nakayama: solved map does not preserve the relations");

  // try to read off the diagonal form sign * q^e per generator
  const int N = alg.presentation()->n();
  const ScalarField& field = alg.field();
  bool diag = true;
  int common_sign = 0;
  std::map<std::pair<int, int>, int> exps;
  for (int g = 0; g < g1 - g0 && diag; ++g) {
    const NCPoly& img = nk.nu[(size_t)g];
    if (img.num_terms() != 1 || img.lead_word() != alg.basis()[(size_t)(g0 + g)]) {
      diag = false;
      break;
    }
    const Scalar& c = img.lead_coeff();
    int sign = 0, e = 0;
    bool found = false;
    if (field.symbolic_mode()) {
      if (c.is_laurent()) {
        LaurentQ lp = c.numerator();
        if (lp.is_monomial()) {
          Rat coef = lp.coeff(lp.min_exp());
          if (coef == 1 || coef == -1) {
            sign = coef == 1 ? 1 : -1;
            e = lp.min_exp();
            found = true;
          }
        }
      }
    } else if (c.is_rational()) {
      for (int ee = -4 * N * N; ee <= 4 * N * N && !found; ++ee)
        for (int s : {1, -1}) {
          if (rat_pow(field.q0, ee) * s == c.rat()) {
            sign = s;
            e = ee;
            found = true;
            break;
          }
        }
    }
    if (!found) {
      diag = false;
      break;
    }
    if (common_sign == 0)
      common_sign = sign;
    else if (common_sign != sign) {
      diag = false;
      break;
    }
    GenId gi = alg.basis()[(size_t)(g0 + g)][0];
    if (N >= 1) exps[{gi / N + 1, gi % N + 1}] = e;
  }
  nk.diagonal = diag;
  if (diag) {
    nk.exponents = std::move(exps);
    nk.sign = common_sign;
  }
  return nk;
}

AlgebraMap sigma_from_nakayama(const NakayamaData& nk, int N, const AlgebraPtr& B) {
  if (!nk.diagonal)
    throw Error(Errc::convention_mismatch,
                "sigma_from_nakayama: Nakayama automorphism is not diagonal of the expected form");
  if (B->kind() != AlgebraKind::MatrixB || B->n() != N)
    throw Error(Errc::incompatible_algebra, "sigma_from_nakayama: target must be the matrix algebra of the same size");

  AlgebraMap sigma;
  sigma.source = B;
  sigma.target = B;
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      auto it = nk.exponents.find({i, j});
      if (it == nk.exponents.end())
        throw Error(Errc::convention_mismatch, "sigma_from_nakayama: missing exponent entry");
      std::string nm = "u" + std::to_string(i) + std::to_string(j);
      sigma.images.push_back(B->gen_poly(nm).scaled(B->field().q(it->second)));
    }

  if (!is_homomorphism(sigma))
    throw Error(Errc::convention_mismatch, "sigma_from_nakayama: exponents do not define an endomorphism");

  AlgebraMap direct = modular_sigma(B);
  for (size_t g = 0; g < sigma.images.size(); ++g)
    if (sigma.images[g] != direct.images[g])
      throw Error(Errc::convention_mismatch,
                  "sigma_from_nakayama: transferred exponents disagree with the modular automorphism");

  NCPoly det = quantum_determinant(*B);
  if (sigma.apply(det) != B->nf(det))
    throw Error(Errc::convention_mismatch, "sigma_from_nakayama: determinant is not fixed");
  return sigma;
}

AlgebraMap sigma_from_nakayama(const NakayamaData& nk, int N, const ScalarField& field) {
  return sigma_from_nakayama(nk, N, build_matrix_algebra(N, field));
}

}  // namespace qhom
