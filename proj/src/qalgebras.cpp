#include "qhom/qalgebras.hpp"

#include <algorithm>
#include <numeric>

#include "qhom/linalg.hpp"

namespace qhom {

PresentedAlgebra::PresentedAlgebra(AlgebraKind kind, int n, ScalarField field, RewriteSystem system,
                                   bool graded, std::vector<NCPoly> relations)
    : kind_(kind),
      n_(n),
      field_(field),
      system_(std::move(system)),
      graded_(graded),
      relations_(std::move(relations)) {}

std::optional<std::pair<int, int>> PresentedAlgebra::matrix_coords(GenId g) const {
  const std::string& nm = gens()->name(g);
  if (nm.size() == 3 && nm[0] == 'u' && isdigit((unsigned char)nm[1]) && isdigit((unsigned char)nm[2]))
    return std::pair{nm[1] - '0', nm[2] - '0'};
  return std::nullopt;
}

NCPoly AlgebraMap::apply(const NCPoly& p) const {
  require_compatible(source->gens(), p.gens());
  NCPoly acc(target->gens());
  for (const auto& [w, c] : p.terms()) {
    NCPoly prod = NCPoly::monomial(target->gens(), Word{}, c);
    for (GenId g : w) prod = target->nf(prod * images[(size_t)g]);
    acc += prod;
  }
  return acc;
}

// ----------------------------------------------------------- B = k_q[M(N)]

namespace {

std::string uname(int i, int j) { return "u" + std::to_string(i) + std::to_string(j); }

// The defining quadratic relations of the quantum matrix algebra, over an
// arbitrary generator set containing the u_ij by name:
//   same row    (k<l):        u_ik u_il - q u_il u_ik
//   same column (i<j):        u_ik u_jk - q u_jk u_ik
//   cross       (i<j, k<l):   u_il u_jk - u_jk u_il
//   mixed       (i<j, k<l):   u_ik u_jl - u_jl u_ik - (q - q^-1) u_il u_jk
std::vector<NCPoly> matrix_relations(const GensPtr& gens, int N, const ScalarField& field) {
  auto u = [&](int i, int j) { return NCPoly::generator(gens, gens->id(uname(i, j))); };
  Scalar q = field.q(1);
  Scalar qdiff = field.q(1) - field.q(-1);
  std::vector<NCPoly> rels;
  for (int i = 1; i <= N; ++i)
    for (int k = 1; k <= N; ++k)
      for (int l = k + 1; l <= N; ++l)
        rels.push_back(u(i, k) * u(i, l) - (u(i, l) * u(i, k)).scaled(q));
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j)
      for (int k = 1; k <= N; ++k)
        rels.push_back(u(i, k) * u(j, k) - (u(j, k) * u(i, k)).scaled(q));
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j)
      for (int k = 1; k <= N; ++k)
        for (int l = k + 1; l <= N; ++l) {
          rels.push_back(u(i, l) * u(j, k) - u(j, k) * u(i, l));
          rels.push_back(u(i, k) * u(j, l) - u(j, l) * u(i, k) - (u(i, l) * u(j, k)).scaled(qdiff));
        }
  return rels;
}

void certify_or_throw(RewriteSystem& sys, const std::string& what) {
  ConfluenceReport rep = check_confluence(sys);
  if (!rep.confluent) {
    std::string witness;
    for (const OverlapReport& o : rep.overlaps)
      if (!o.resolved) {
        witness = word_to_string(*sys.gens(), o.word);
        break;
      }
    throw Error(Errc::construction_failure,
                what + ": rewrite system is not confluent (unresolved overlap at " + witness + ")");
  }
}

}  // namespace

AlgebraPtr build_matrix_algebra(int N, const ScalarField& field) {
  if (N < 1) throw Error(Errc::invalid_config, "matrix algebra requires N >= 1");
  std::vector<std::string> names;
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) names.push_back(uname(i, j));
  GensPtr gens = GeneratorSet::make(std::move(names));
  std::vector<NCPoly> rels = matrix_relations(gens, N, field);
  RewriteSystem sys = orient(gens, rels);
  if (N <= 3) certify_or_throw(sys, "matrix algebra N=" + std::to_string(N));
  return std::make_shared<PresentedAlgebra>(AlgebraKind::MatrixB, N, field, std::move(sys), true,
                                            std::move(rels));
}

// ------------------------------------------------------------------- det_q

namespace {

NCPoly determinant_over(const GensPtr& gens, int N, const ScalarField& field) {
  std::vector<int> perm(N);
  std::iota(perm.begin(), perm.end(), 1);
  NCPoly det(gens);
  do {
    int inv = 0;
    for (int i = 0; i < N; ++i)
      for (int j = i + 1; j < N; ++j)
        if (perm[i] > perm[j]) ++inv;
    Word w;
    for (int r = 1; r <= N; ++r) w.push_back(gens->id(uname(r, perm[r - 1])));
    Scalar coef = field.q(inv);
    if (inv % 2) coef = -coef;  // (-q)^l = (-1)^l q^l
    det.add_term(w, coef);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

}  // namespace

NCPoly quantum_determinant(int N, const ScalarField& field) {
  if (N < 1) throw Error(Errc::invalid_config, "quantum determinant requires N >= 1");
  std::vector<std::string> names;
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) names.push_back(uname(i, j));
  GensPtr gens = GeneratorSet::make(std::move(names));
  return determinant_over(gens, N, field);
}

NCPoly quantum_determinant(const PresentedAlgebra& alg) {
  if (alg.n() < 1) throw Error(Errc::invalid_config, "algebra has no matrix generators");
  return determinant_over(alg.gens(), alg.n(), alg.field());
}

bool is_central(const NCPoly& x, const PresentedAlgebra& alg) {
  if (!alg.system().certified())
    throw Error(Errc::invalid_config, "is_central requires a certified algebra");
  for (GenId g = 0; g < alg.gens()->size(); ++g) {
    NCPoly gp = NCPoly::generator(alg.gens(), g);
    if (!alg.nf(x * gp - gp * x).is_zero()) return false;
  }
  return true;
}

// ------------------------------------------------------------------- sigma

AlgebraMap modular_sigma(const AlgebraPtr& alg) {
  AlgebraKind k = alg->kind();
  if (k != AlgebraKind::MatrixB && k != AlgebraKind::SpecialA && k != AlgebraKind::GeneralC)
    throw Error(Errc::invalid_config, "modular_sigma is defined on the matrix-type algebras only");
  int N = alg->n();
  AlgebraMap sigma{alg, alg, {}};
  for (GenId g = 0; g < alg->gens()->size(); ++g) {
    if (auto ij = alg->matrix_coords(g)) {
      auto [i, j] = *ij;
      int e = 2 * (N + 1 - i - j);
      sigma.images.push_back(NCPoly::generator(alg->gens(), g).scaled(alg->field().q(e)));
    } else if (alg->gens()->name(g) == "dinv" || alg->gens()->name(g) == "dt") {
      sigma.images.push_back(NCPoly::generator(alg->gens(), g));
    } else {
      throw Error(Errc::internal_consistency, "unexpected generator " + alg->gens()->name(g));
    }
  }
  if (!is_homomorphism(sigma))
    throw Error(Errc::internal_consistency, "modular automorphism failed the relation check");
  return sigma;
}

bool is_homomorphism(const AlgebraMap& f) {
  for (const NCPoly& rel : f.source->relations())
    if (!f.apply(rel).is_zero()) return false;
  return true;
}

AlgebraMap identity_map(const AlgebraPtr& alg) {
  AlgebraMap id{alg, alg, {}};
  for (GenId g = 0; g < alg->gens()->size(); ++g)
    id.images.push_back(NCPoly::generator(alg->gens(), g));
  return id;
}

// ----------------------------------------------------------- A = k_q[SL(N)]

AlgebraPtr build_special_algebra(int N, const ScalarField& field) {
  if (N < 2 || N > 3) throw Error(Errc::invalid_config, "special algebra built for N in {2, 3}");
  // Row-major generator order; det_q - 1 then orients by the lexicographically
  // largest permutation word. (Promoting the diagonal letters instead would
  // re-orient det_q by u11..uNN but clashes with the mixed-relation leads as
  // soon as N = 3.)
  std::vector<std::string> names;
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) names.push_back(uname(i, j));
  GensPtr gens = GeneratorSet::make(std::move(names));
  std::vector<NCPoly> rels = matrix_relations(gens, N, field);
  rels.push_back(determinant_over(gens, N, field) - NCPoly::unit(gens));
  RewriteSystem sys = orient(gens, rels);
  if (N == 2) {
    certify_or_throw(sys, "special algebra N=" + std::to_string(N));
  } else {
    check_confluence(sys);  // outcome attached; callers inspect the certificate
  }
  return std::make_shared<PresentedAlgebra>(AlgebraKind::SpecialA, N, field, std::move(sys), false,
                                            std::move(rels));
}

// ----------------------------------------------------------- C = k_q[GL(N)]

AlgebraPtr build_general_algebra(int N, const ScalarField& field) {
  if (N < 2 || N > 3) throw Error(Errc::invalid_config, "general algebra built for N in {2, 3}");
  std::vector<std::string> names;
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) names.push_back(uname(i, j));
  // Localizing at the determinant keeps a finite confluent system only when
  // the determinant itself joins the generators: expanding it inside rules
  // lets smaller letters split its monomials apart, and completion then never
  // terminates. So present C on u_ij, dt, dinv with dt identified with det_q.
  names.push_back("dt");
  names.push_back("dinv");
  GensPtr gens = GeneratorSet::make(std::move(names));
  GenId dt = gens->id("dt");
  GenId dinv = gens->id("dinv");
  std::vector<NCPoly> rels = matrix_relations(gens, N, field);
  NCPoly det = determinant_over(gens, N, field);
  NCPoly d = NCPoly::generator(gens, dt);
  NCPoly e = NCPoly::generator(gens, dinv);
  NCPoly one = NCPoly::unit(gens);
  rels.push_back(d - det);
  rels.push_back(d * e - one);
  rels.push_back(e * d - one);
  for (GenId g = 0; g < gens->size(); ++g) {
    if (g == dt || g == dinv) continue;
    NCPoly gp = NCPoly::generator(gens, g);
    rels.push_back(d * gp - gp * d);
    rels.push_back(e * gp - gp * e);
  }
  std::vector<int> weights(gens->size(), 1);
  weights[(size_t)dt] = N;
  weights[(size_t)dinv] = -N;
  RewriteSystem sys = orient(gens, rels, {}, std::move(weights));
  if (N == 2) {
    certify_or_throw(sys, "general algebra N=2");
  } else {
    check_confluence(sys);  // attach whatever certificate the check produces
  }
  return std::make_shared<PresentedAlgebra>(AlgebraKind::GeneralC, N, field, std::move(sys), true,
                                            std::move(rels));
}

// ------------------------------------------------------------ D = k[t,t^-1]

AlgebraPtr build_laurent_algebra(const ScalarField& field) {
  GensPtr gens = GeneratorSet::make({"t", "tinv"});
  NCPoly t = NCPoly::generator(gens, 0);
  NCPoly tinv = NCPoly::generator(gens, 1);
  NCPoly one = NCPoly::unit(gens);
  std::vector<NCPoly> rels{t * tinv - one, tinv * t - one};
  RewriteSystem sys = orient(gens, rels, {}, {1, -1});
  certify_or_throw(sys, "Laurent algebra");
  return std::make_shared<PresentedAlgebra>(AlgebraKind::LaurentD, 0, field, std::move(sys), true,
                                            std::move(rels));
}

std::vector<Word> laurent_basis_degree(const PresentedAlgebra& D, int e) {
  if (D.kind() != AlgebraKind::LaurentD)
    throw Error(Errc::invalid_config, "laurent_basis_degree expects the Laurent algebra");
  // A normal word mixing t and tinv would contain an adjacent pair, which
  // both rules kill; so degree e is spanned by the single pure power.
  Word w;
  GenId g = e >= 0 ? D.gen("t") : D.gen("tinv");
  for (int i = 0; i < std::abs(e); ++i) w.push_back(g);
  return {w};
}

// ----------------------------------------------------------- graded bases

std::vector<Word> basis_words_of_degree(const PresentedAlgebra& alg, int d) {
  if (!alg.graded()) throw Error(Errc::not_graded, "algebra is not graded");
  if (alg.kind() == AlgebraKind::LaurentD) return laurent_basis_degree(alg, d);
  for (int w : alg.system().weights())
    if (w != 1) throw Error(Errc::not_graded, "degree enumeration requires unit weights");
  if (d < 0) return {};
  return normal_words_of_length(alg.system(), d);
}

// ---------------------------------------------------------- bounded center

namespace {

std::vector<NCPoly> center_block(const PresentedAlgebra& alg, const std::vector<Word>& cols,
                                 const std::vector<Word>& rows) {
  std::map<Word, int> row_index;
  for (size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = (int)i;
  int ng = alg.gens()->size();
  SparseMat<Scalar> m((int)rows.size() * ng, (int)cols.size());
  for (size_t j = 0; j < cols.size(); ++j) {
    NCPoly w = NCPoly::monomial(alg.gens(), cols[j], Scalar(1));
    for (GenId g = 0; g < ng; ++g) {
      NCPoly gp = NCPoly::generator(alg.gens(), g);
      NCPoly comm = alg.nf(w * gp - gp * w);
      for (const auto& [word, c] : comm.terms()) {
        auto it = row_index.find(word);
        if (it == row_index.end())
          throw Error(Errc::internal_consistency, "commutator left the expected word span");
        m.add(g * (int)rows.size() + it->second, (int)j, c);
      }
    }
  }
  SparseMat<Scalar> null = nullspace(m);
  std::vector<NCPoly> out;
  // nullspace columns, each repackaged as a polynomial over the col words
  std::vector<NCPoly> polys(null.cols, NCPoly(alg.gens()));
  for (int r = 0; r < null.rows; ++r)
    for (const auto& [c, v] : null.row[r]) polys[(size_t)c].add_term(cols[(size_t)r], v);
  for (auto& p : polys) out.push_back(std::move(p));
  return out;
}

}  // namespace

std::vector<NCPoly> center_bounded(const PresentedAlgebra& alg, int D) {
  if (!alg.system().certified())
    throw Error(Errc::invalid_config, "center_bounded requires a certified algebra");
  bool unit_weights = std::all_of(alg.system().weights().begin(), alg.system().weights().end(),
                                  [](int w) { return w == 1; });
  std::vector<NCPoly> result;
  if (alg.graded() && unit_weights) {
    // degree-homogeneous blocks suffice: commutators preserve the grading
    for (int e = 0; e <= D; ++e) {
      auto block = center_block(alg, normal_words_of_length(alg.system(), e),
                                normal_words_of_length(alg.system(), e + 1));
      for (auto& p : block) result.push_back(std::move(p));
    }
  } else {
    // filtered span: normal forms never increase word length under deglex
    auto block = center_block(alg, normal_words_up_to_length(alg.system(), D),
                              normal_words_up_to_length(alg.system(), D + 1));
    for (auto& p : block) result.push_back(std::move(p));
  }
  return result;
}

// --------------------------------------------------- C = A tensor D at N=2

GlFactorization gl_factorization_iso(int N, const ScalarField& field) {
  if (N != 2) throw Error(Errc::invalid_config, "gl factorization is verified at N = 2 only");
  AlgebraPtr C = build_general_algebra(N, field);

  // Target: A tensor D presented on A's generators plus commuting t, tinv.
  std::vector<std::string> names;
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) names.push_back(uname(i, j));
  names.push_back("t");
  names.push_back("tinv");
  GensPtr gens = GeneratorSet::make(std::move(names));
  std::vector<NCPoly> rels = matrix_relations(gens, N, field);
  rels.push_back(determinant_over(gens, N, field) - NCPoly::unit(gens));
  NCPoly t = NCPoly::generator(gens, gens->id("t"));
  NCPoly tinv = NCPoly::generator(gens, gens->id("tinv"));
  rels.push_back(t * tinv - NCPoly::unit(gens));
  rels.push_back(tinv * t - NCPoly::unit(gens));
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      NCPoly u = NCPoly::generator(gens, gens->id(uname(i, j)));
      rels.push_back(t * u - u * t);
      rels.push_back(tinv * u - u * tinv);
    }
  RewriteSystem sys = orient(gens, rels);
  certify_or_throw(sys, "A tensor D");
  AlgebraPtr AD = std::make_shared<PresentedAlgebra>(AlgebraKind::External, N, field, std::move(sys),
                                                     false, std::move(rels));

  GlFactorization out;
  out.tensor_algebra = AD;
  out.bound = 4;
  AlgebraMap phi{C, AD, {}};
  for (GenId g = 0; g < C->gens()->size(); ++g) {
    const std::string& nm = C->gens()->name(g);
    if (nm == "dinv") {
      phi.images.push_back(NCPoly::generator(AD->gens(), AD->gens()->id("tinv")));
    } else if (nm == "dt") {
      phi.images.push_back(NCPoly::generator(AD->gens(), AD->gens()->id("t")));
    } else {
      auto ij = C->matrix_coords(g);
      NCPoly img = NCPoly::generator(AD->gens(), AD->gens()->id(nm));
      if (ij->first == 1) img = AD->nf(img * NCPoly::generator(AD->gens(), AD->gens()->id("t")));
      phi.images.push_back(std::move(img));
    }
  }
  out.homomorphism = is_homomorphism(phi);

  // Injectivity through the length filtration: images of the normal words of
  // C of length <= k must stay linearly independent for every k <= bound.
  std::vector<Word> cwords = normal_words_up_to_length(C->system(), out.bound);
  std::map<Word, int> target_index;
  std::vector<NCPoly> images;
  images.reserve(cwords.size());
  for (const Word& w : cwords) {
    NCPoly img = phi.apply(NCPoly::monomial(C->gens(), w, Scalar(1)));
    for (const auto& [tw, c] : img.terms())
      target_index.emplace(tw, (int)target_index.size());
    images.push_back(std::move(img));
  }
  out.counting_bijection = true;
  for (int k = 0; k <= out.bound; ++k) {
    SparseMat<Scalar> m((int)target_index.size(), 0);
    int count = 0;
    for (size_t idx = 0; idx < cwords.size(); ++idx) {
      if ((int)cwords[idx].size() > k) continue;
      ++count;
      m.cols += 1;
      for (const auto& [tw, c] : images[idx].terms()) m.add(target_index[tw], m.cols - 1, c);
    }
    out.source_counts.push_back(count);
    int rank = matrix_rank(m, field);
    out.image_ranks.push_back(rank);
    if (rank != count) out.counting_bijection = false;
  }
  out.phi = std::move(phi);
  return out;
}

}  // namespace qhom
