#include "qhom/verify.hpp"

#include <chrono>
#include <functional>
#include <optional>

#include "qhom/homology.hpp"
#include "qhom/quadratic.hpp"
#include "qhom/rewrite.hpp"

namespace qhom {

Json RunConfig::to_json() const {
  Json j;
  j["N"] = N;
  j["qMode"] = field.symbolic_mode() ? "symbolic" : "specialized";
  if (!field.symbolic_mode()) {
    j["q0"] = rat_str(field.q0);
    j["confirmQ0"] = rat_str(field.confirm_q0());
  }
  j["nMax"] = nmax_or_default();
  j["dMax"] = dmax_or_default();
  j["centerDegree"] = centerDegree;
  j["outputDir"] = outputDir;
  j["format"] = format == Format::Json ? "json" : (format == Format::Csv ? "csv" : "both");
  j["seed"] = seed;
  j["partial"] = partial;
  j["confirm"] = confirm;
  return j;
}

namespace {

long binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

struct Section {
  std::string name;
  std::string status = "pass";  // pass | fail | skip
  Json detail = Json::object();
  double seconds = 0;
};

struct Ctx {
  AlgebraPtr B, A, C;
  std::optional<FiniteGradedAlgebra> dual;
  std::optional<FrobeniusFunctional> h;
  std::optional<NakayamaData> nk;
  std::vector<SyzygySpace> syz;
  std::optional<GradedComplex> twisted;
  std::optional<HomologyTable> twisted_table;
};

Json cert_json(const PresentedAlgebra& a) {
  Json j;
  j["generators"] = a.gens()->size();
  j["rules"] = (long)a.system().rules().size();
  if (a.system().certificate()) {
    j["overlaps"] = a.system().certificate()->overlap_count;
    j["resolved"] = a.system().certificate()->all_resolved;
  } else {
    j["overlaps"] = nullptr;
    j["resolved"] = false;
  }
  return j;
}

bool resolved(const PresentedAlgebra& a) { return a.system().certified(); }

Json sigma_exponents_json(const PresentedAlgebra& alg) {
  Json j = Json::object();
  int N = alg.n();
  for (GenId g = 0; g < alg.gens()->size(); ++g) {
    if (auto ij = alg.matrix_coords(g))
      j[alg.gens()->name(g)] = 2 * (N + 1 - ij->first - ij->second);
    else
      j[alg.gens()->name(g)] = 0;
  }
  return j;
}

bool tables_equal(const HomologyTable& a, const HomologyTable& b) {
  if (a.rows.size() != b.rows.size()) return false;
  for (size_t i = 0; i < a.rows.size(); ++i) {
    const auto& x = a.rows[i];
    const auto& y = b.rows[i];
    if (x.n != y.n || x.d != y.d || x.chain_dim != y.chain_dim || x.rank_out != y.rank_out ||
        x.rank_in != y.rank_in || x.hom_dim != y.hom_dim)
      return false;
  }
  return true;
}

// --------------------------------------------------------------- sections

bool section_construction(const RunConfig& cfg, Ctx& ctx, Json& d) {
  const int N = cfg.N;
  ctx.B = build_matrix_algebra(N, cfg.field);
  ctx.dual.emplace(build_dual_algebra(N, cfg.field));
  ctx.A = build_special_algebra(N, cfg.field);
  ctx.C = build_general_algebra(N, cfg.field);

  d["B"] = cert_json(*ctx.B);
  d["Bdual"] = cert_json(*ctx.dual->presentation());
  d["A"] = cert_json(*ctx.A);
  d["C"] = cert_json(*ctx.C);

  Json dims = Json::array();
  bool dims_ok = true;
  for (int deg = 0; deg <= 6; ++deg) {
    long got = graded_dimension(ctx.B->system(), deg);
    dims.push_back(got);
    dims_ok = dims_ok && got == binom(deg + N * N - 1, deg);
  }
  d["BGradedDims"] = std::move(dims);
  d["BGradedDimsMatch"] = dims_ok;

  bool ok = resolved(*ctx.B) && resolved(*ctx.dual->presentation()) && dims_ok;
  if (N == 2) {
    ok = ok && resolved(*ctx.A) && resolved(*ctx.C);
    bool four = ctx.B->system().certificate()->overlap_count == 4;
    d["BOverlapCountIsFour"] = four;
    ok = ok && four;
  } else {
    d["informationalOnly"] = Json::array({"A", "C"});
  }
  return ok;
}

bool section_determinant(const RunConfig& cfg, Ctx& ctx, Json& d) {
  NCPoly det = quantum_determinant(*ctx.B);
  d["detq"] = poly_to_string(det);
  bool central = is_central(det, *ctx.B);
  d["central"] = central;
  AlgebraMap sig = modular_sigma(ctx.B);
  bool fixed = sig.apply(det) == ctx.B->nf(det);
  d["sigmaInvariant"] = fixed;
  (void)cfg;
  return central && fixed;
}

bool section_sigma(const RunConfig& cfg, Ctx& ctx, Json& d) {
  bool ok = true;
  auto check = [&](const char* name, const AlgebraPtr& alg) {
    AlgebraMap s = modular_sigma(alg);
    bool hom = is_homomorphism(s);
    d[name] = hom;
    ok = ok && hom;
  };
  check("B", ctx.B);
  check("A", ctx.A);
  check("C", ctx.C);
  d["exponents"] = sigma_exponents_json(*ctx.B);
  (void)cfg;
  return ok;
}

bool section_dual(const RunConfig& cfg, Ctx& ctx, Json& d) {
  const int N = cfg.N;
  const int m = N * N;
  FiniteGradedAlgebra& dual = *ctx.dual;

  Json dims = Json::array();
  bool dims_ok = dual.top_degree() == m;
  for (int n = 0; n <= dual.top_degree(); ++n) {
    auto [a, b] = dual.degree_range(n);
    dims.push_back(b - a);
    dims_ok = dims_ok && (b - a) == binom(m, n);
  }
  d["dims"] = std::move(dims);
  d["dimsMatchBinomials"] = dims_ok;

  // double construction of the dual relation space: orthogonal complement
  // vs the explicit list; equal spans by rank tests in both directions
  QuadraticData qd = quadratic_data(*ctx.B);
  QuadraticData perp = quadratic_dual(qd, cfg.field);
  require_compatible(perp.gens, dual.presentation()->gens());
  const auto& listed = dual.presentation()->relations();
  SparseMat<Scalar> m1((int)perp.relations.size(), m * m);
  for (size_t k = 0; k < perp.relations.size(); ++k)
    for (const auto& [w, c] : perp.relations[k].terms()) m1.add((int)k, w[0] * m + w[1], c);
  SparseMat<Scalar> m2((int)listed.size(), m * m);
  for (size_t k = 0; k < listed.size(); ++k)
    for (const auto& [w, c] : listed[k].terms()) m2.add((int)k, w[0] * m + w[1], c);
  SparseMat<Scalar> stacked(m1.rows + m2.rows, m * m);
  for (int r = 0; r < m1.rows; ++r) stacked.row[r] = m1.row[r];
  for (int r = 0; r < m2.rows; ++r) stacked.row[m1.rows + r] = m2.row[r];
  int r1 = matrix_rank(m1, cfg.field);
  int r2 = matrix_rank(m2, cfg.field);
  int r12 = matrix_rank(stacked, cfg.field);
  d["perpDim"] = (long)perp.relations.size();
  d["listedCount"] = (long)listed.size();
  d["ranks"] = Json::array({r1, r2, r12});
  bool span_ok = r1 == (int)perp.relations.size() && r1 == r2 && r12 == r1;
  d["relationSpacesAgree"] = span_ok;

  ctx.h.emplace(frobenius_functional(dual));
  bool frob = check_frobenius(dual, *ctx.h);
  d["frobeniusNondegenerate"] = frob;

  ctx.nk.emplace(nakayama(dual, *ctx.h));
  d["nuDiagonal"] = ctx.nk->diagonal;
  if (ctx.nk->diagonal) {
    Json exps = Json::object();
    for (const auto& [ij, e] : ctx.nk->exponents)
      exps["u" + std::to_string(ij.first) + std::to_string(ij.second)] = e;
    d["nuExponents"] = std::move(exps);
    d["nuSign"] = ctx.nk->sign;
  }
  bool sig_ok = false;
  try {
    sigma_from_nakayama(*ctx.nk, N, ctx.B);
    sig_ok = true;
  } catch (const Error& e) {
    d["nakayamaError"] = e.what();
  }
  d["nakayamaMatchesModularSigma"] = sig_ok;

  // defining property h(x y) = h(nu(y) x), exhaustively over complementary
  // basis pairs (nu acts on a basis word by the product of its diagonal
  // generator scalars)
  bool defprop = ctx.nk->diagonal;
  long pairs = 0;
  if (defprop) {
    const int top = dual.top_index();
    auto pair_val = [&](int i, int j) {
      Scalar acc;
      for (const auto& [k, c] : dual.product(i, j))
        if (k == top) acc += c;
      return acc;
    };
    for (int n = 0; n <= dual.top_degree() && defprop; ++n) {
      auto [x0, x1] = dual.degree_range(n);
      auto [y0, y1] = dual.degree_range(dual.top_degree() - n);
      for (int x = x0; x < x1 && defprop; ++x)
        for (int y = y0; y < y1 && defprop; ++y) {
          Scalar cy(1);
          for (GenId g : dual.basis()[(size_t)y]) cy *= ctx.nk->nu[(size_t)g].lead_coeff();
          defprop = pair_val(x, y) == cy * pair_val(y, x);
          ++pairs;
        }
    }
  }
  d["definingPropertyPairs"] = pairs;
  d["definingPropertyHolds"] = defprop;

  return dims_ok && span_ok && frob && ctx.nk->diagonal && sig_ok && defprop;
}

bool section_homology(const RunConfig& cfg, Ctx& ctx, Json& d) {
  const int N = cfg.N;
  const int nmax = cfg.nmax_or_default();
  const int dmax = cfg.dmax_or_default();

  QuadraticData qd = quadratic_data(*ctx.B);
  ctx.syz = koszul_syzygies(qd, nmax + 1);

  Json sdims = Json::array();
  bool syz_ok = true;
  for (const auto& s : ctx.syz) {
    sdims.push_back(s.dim());
    syz_ok = syz_ok && s.dim() == binom(N * N, s.n);
  }
  d["syzygyDims"] = std::move(sdims);
  d["syzygyDimsMatchBinomials"] = syz_ok;

  for (size_t n = 0; n < ctx.syz.size(); ++n)
    for (int deg = (int)n; deg <= dmax; ++deg) {
      long chain = graded_dimension(ctx.B->system(), deg - (int)n) * ctx.syz[n].dim();
      if (chain > cfg.chainLimit)
        throw Error(Errc::invalid_config, "chain dimension " + std::to_string(chain) +
                                              " exceeds the configured limit");
    }

  ctx.twisted.emplace(build_koszul_complex({ctx.B, modular_sigma(ctx.B)}, ctx.syz, dmax));
  ctx.twisted_table.emplace(homology_dims(*ctx.twisted));
  d["differentialSquaresToZero"] = true;  // asserted during construction
  d["twisted"] = homology_json(*ctx.twisted_table);
  if (!ctx.twisted_table->complete)
    d["note"] = "partial (n <= " + std::to_string(ctx.twisted_table->max_n) + ")";

  // Euler characteristic where the whole column is inside the table
  bool euler_ok = true;
  {
    int rmax = ctx.twisted_table->max_n;
    for (int deg = 0; deg <= std::min(dmax, rmax); ++deg) {
      long chains = 0, homs = 0;
      for (int n = 0; n <= rmax; ++n) {
        long c = ctx.twisted->dim_at(n, {deg});
        chains += (n % 2 == 0) ? c : -c;
        long h = ctx.twisted_table->hom_dim(n, {deg});
        homs += (n % 2 == 0) ? h : -h;
      }
      euler_ok = euler_ok && chains == homs;
    }
  }
  d["eulerCharacteristicAgrees"] = euler_ok;

  bool n2_ok = true;
  if (N == 2) {
    GradedComplex untw = build_koszul_complex({ctx.B, identity_map(ctx.B)}, ctx.syz, dmax);
    HomologyTable ut = homology_dims(untw);
    d["untwisted"] = homology_json(ut);
    bool dominated = true, strict = false;
    for (int deg = 0; deg <= dmax; ++deg) {
      long tw = ctx.twisted_table->hom_dim(N * N, {deg});
      long un = ut.hom_dim(N * N, {deg});
      dominated = dominated && un <= tw;
      strict = strict || un < tw;
    }
    d["untwistedDominated"] = dominated;
    d["strictDropSomewhere"] = strict;

    DualityReport dr = duality_check_B(N, dmax, cfg.field);
    d["duality"] = duality_json(dr);
    n2_ok = dominated && strict && dr.pass;
  }

  bool confirm_ok = true;
  if (cfg.confirm) {
    ScalarField f2 = ScalarField::specialized(cfg.field.confirm_q0());
    AlgebraPtr B2 = build_matrix_algebra(N, f2);
    std::vector<SyzygySpace> syz2 = koszul_syzygies(quadratic_data(*B2), nmax + 1);
    GradedComplex tw2 = build_koszul_complex({B2, modular_sigma(B2)}, syz2, dmax);
    HomologyTable t2 = homology_dims(tw2);
    confirm_ok = tables_equal(*ctx.twisted_table, t2);
    d["confirmAgreement"] = confirm_ok;
  } else {
    d["confirmAgreement"] = "skipped";
  }

  return syz_ok && euler_ok && n2_ok && confirm_ok;
}

bool section_center(const RunConfig& cfg, Ctx& ctx, Json& d) {
  auto zA = center_bounded(*ctx.A, cfg.centerDegree);
  bool a_trivial = zA.size() == 1;
  for (const NCPoly& z : zA)
    for (const auto& [w, c] : z.terms()) a_trivial = a_trivial && w.empty();
  d["centerADim"] = (long)zA.size();
  d["centerATrivial"] = a_trivial;

  auto zB = center_bounded(*ctx.B, cfg.centerDegree);
  std::map<int, std::vector<const NCPoly*>> bydeg;
  for (const NCPoly& z : zB) bydeg[(int)z.lead_word().size()].push_back(&z);
  Json degs = Json::object();
  for (const auto& [deg, v] : bydeg) degs[std::to_string(deg)] = (long)v.size();
  d["centerBDimsByDegree"] = std::move(degs);
  bool b_ok = zB.size() == 4;
  for (int k = 0; k <= 3; ++k)
    b_ok = b_ok && bydeg.count(2 * k) && bydeg[2 * k].size() == 1;

  // det powers span the center: proportionality against the basis element
  bool powers_ok = b_ok;
  if (powers_ok) {
    NCPoly det = quantum_determinant(*ctx.B);
    NCPoly p = ctx.B->unit();
    for (int k = 0; k <= 3 && powers_ok; ++k) {
      const NCPoly& z = *bydeg[2 * k][0];
      powers_ok = p.scaled(z.lead_coeff()) == z.scaled(p.lead_coeff());
      p = ctx.B->nf(p * det);
    }
  }
  d["detPowersSpanCenterB"] = powers_ok;
  return a_trivial && b_ok && powers_ok;
}

bool section_gl(const RunConfig& cfg, Ctx& ctx, Json& d) {
  (void)ctx;
  GlFactorization g = gl_factorization_iso(2, cfg.field);
  d["homomorphism"] = g.homomorphism;
  d["countingBijection"] = g.counting_bijection;
  d["bound"] = g.bound;
  d["sourceCounts"] = g.source_counts;
  d["imageRanks"] = g.image_ranks;
  return g.homomorphism && g.counting_bijection;
}

bool section_laurent(const RunConfig& cfg, Ctx& ctx, Json& d) {
  const int bound = 4;
  GradedComplex lau = laurent_complex(cfg.field, bound, 0);
  HomologyTable lt = homology_dims(lau);
  bool lau_ok = lt.top_nonzero() == 1;
  for (int deg = -bound; deg <= bound; ++deg)
    lau_ok = lau_ok && lt.hom_dim(0, {deg}) == 1 && lt.hom_dim(1, {deg}) == 1;
  d["laurentDimsAllOne"] = lau_ok;
  d["laurentTopDegree"] = lt.top_nonzero();

  GradedComplex ll = tensor_complexes(lau, lau);
  HomologyTable llt = homology_dims(ll);
  bool pattern = true;
  for (int d1 = -bound; d1 <= bound && pattern; ++d1)
    for (int d2 = -bound; d2 <= bound && pattern; ++d2)
      pattern = llt.hom_dim(0, {d1, d2}) == 1 && llt.hom_dim(1, {d1, d2}) == 2 &&
                llt.hom_dim(2, {d1, d2}) == 1;
  d["laurentSquarePattern121"] = pattern;
  bool kun_ll = kunneth_check(lt, lt, llt);
  d["kunnethLaurentLaurent"] = kun_ll;

  bool kun_lk = true;
  if (cfg.N == 2 && ctx.twisted) {
    GradedComplex kos4 = build_koszul_complex({ctx.B, modular_sigma(ctx.B)}, ctx.syz, 4);
    HomologyTable kt = homology_dims(kos4);
    GradedComplex lk = tensor_complexes(lau, kos4);
    HomologyTable lkt = homology_dims(lk);
    kun_lk = kunneth_check(lt, kt, lkt);
    d["kunnethLaurentKoszul"] = kun_lk;
  }
  return lau_ok && pattern && kun_ll && kun_lk;
}

}  // namespace

CommandResult run_verify(const RunConfig& cfg) {
  CommandResult res;
  if (cfg.N != 2 && cfg.N != 3) {
    res.exit_code = 2;
    res.report["error"] = "verify supports N in {2, 3}";
    return res;
  }
  if (cfg.field.symbolic_mode()) {
    res.exit_code = 2;
    res.report["error"] = "verify runs over a specialized field (pass --q)";
    return res;
  }

  Ctx ctx;
  std::vector<Section> secs;
  bool prereq_failed = false;

  auto run = [&](const std::string& name, bool applicable, const std::string& skip_reason,
                 const std::function<bool(Json&)>& fn) {
    Section s;
    s.name = name;
    auto t0 = std::chrono::steady_clock::now();
    if (!applicable) {
      s.status = "skip";
      s.detail["reason"] = skip_reason;
    } else if (prereq_failed) {
      s.status = "skip";
      s.detail["reason"] = "prerequisite construction failed";
    } else {
      try {
        s.status = fn(s.detail) ? "pass" : "fail";
      } catch (const Error& e) {
        s.status = "fail";
        s.detail["error"] = e.what();
      }
    }
    s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    secs.push_back(std::move(s));
  };

  run("confluence", true, "", [&](Json& d) {
    bool ok = section_construction(cfg, ctx, d);
    if (!ctx.B || !ctx.dual) prereq_failed = true;
    return ok;
  });
  if (!ctx.B || !ctx.A || !ctx.C || !ctx.dual) prereq_failed = true;

  run("determinant", true, "", [&](Json& d) { return section_determinant(cfg, ctx, d); });
  run("sigma", true, "", [&](Json& d) { return section_sigma(cfg, ctx, d); });
  run("dual", true, "", [&](Json& d) { return section_dual(cfg, ctx, d); });
  run("homology", true, "", [&](Json& d) { return section_homology(cfg, ctx, d); });
  run("center", cfg.N == 2, "center triviality is checked at N = 2",
      [&](Json& d) { return section_center(cfg, ctx, d); });
  run("glFactorization", cfg.N == 2, "factorization is checked at N = 2",
      [&](Json& d) { return section_gl(cfg, ctx, d); });
  run("laurentKunneth", true, "", [&](Json& d) { return section_laurent(cfg, ctx, d); });

  bool pass = true;
  Json sections = Json::array();
  Json timings = Json::object();
  double total = 0;
  for (const auto& s : secs) {
    Json j;
    j["name"] = s.name;
    j["status"] = s.status;
    j["details"] = s.detail;
    sections.push_back(std::move(j));
    pass = pass && s.status != "fail";
    timings[s.name] = s.seconds;
    total += s.seconds;
  }

  res.report["schemaVersion"] = "1";
  res.report["command"] = "verify";
  res.report["config"] = cfg.to_json();
  res.report["sections"] = std::move(sections);
  res.report["pass"] = pass;
  res.exit_code = pass ? 0 : 1;
  res.files.push_back({"verify_report.json", res.report.dump(2) + "\n"});

  Json tj;
  tj["schemaVersion"] = "1";
  tj["command"] = "verify";
  tj["sectionSeconds"] = std::move(timings);
  tj["totalSeconds"] = total;
  res.files.push_back({"verify_timings.json", tj.dump(2) + "\n"});
  return res;
}

CommandResult run_homology(const RunConfig& cfg, const std::string& twist) {
  CommandResult res;
  if (cfg.N != 2 && cfg.N != 3) {
    res.exit_code = 2;
    res.report["error"] = "homology tables are computed for N in {2, 3}";
    return res;
  }
  if (cfg.field.symbolic_mode()) {
    res.exit_code = 2;
    res.report["error"] = "homology runs over a specialized field (pass --q)";
    return res;
  }
  if (twist != "sigma" && twist != "none") {
    res.exit_code = 2;
    res.report["error"] = "twist must be 'sigma' or 'none'";
    return res;
  }

  const int nmax = cfg.nmax_or_default();
  const int dmax = cfg.dmax_or_default();
  AlgebraPtr B = build_matrix_algebra(cfg.N, cfg.field);
  std::vector<SyzygySpace> syz = koszul_syzygies(quadratic_data(*B), nmax + 1);

  for (size_t n = 0; n < syz.size(); ++n)
    for (int deg = (int)n; deg <= dmax; ++deg) {
      long chain = graded_dimension(B->system(), deg - (int)n) * syz[n].dim();
      if (chain > cfg.chainLimit) {
        res.exit_code = 2;
        res.report["error"] = "refused: chain dimension " + std::to_string(chain) + " at (n=" +
                              std::to_string(n) + ", d=" + std::to_string(deg) +
                              ") exceeds the limit " + std::to_string(cfg.chainLimit) +
                              "; lower --dmax/--nmax or raise --chain-limit";
        return res;
      }
    }

  AlgebraMap tw = twist == "sigma" ? modular_sigma(B) : identity_map(B);
  GradedComplex c = build_koszul_complex({B, tw}, syz, dmax);
  HomologyTable t = homology_dims(c);

  res.report["schemaVersion"] = "1";
  res.report["command"] = "homology";
  res.report["config"] = cfg.to_json();
  res.report["twist"] = twist;
  res.report["table"] = homology_json(t);
  if (cfg.format != RunConfig::Format::Csv)
    res.files.push_back({"homology_" + twist + ".json", res.report.dump(2) + "\n"});
  if (cfg.format != RunConfig::Format::Json)
    res.files.push_back({"homology_" + twist + ".csv", homology_csv(t)});
  return res;
}

CommandResult run_algebra(const RunConfig& cfg, const std::string& which) {
  CommandResult res;
  AlgebraPtr alg;
  try {
    if (which == "B") {
      alg = build_matrix_algebra(cfg.N, cfg.field);
    } else if (which == "A") {
      alg = build_special_algebra(cfg.N, cfg.field);
    } else if (which == "C") {
      alg = build_general_algebra(cfg.N, cfg.field);
    } else if (which == "Bdual") {
      alg = build_dual_algebra(cfg.N, cfg.field).presentation();
    } else if (which == "D") {
      alg = build_laurent_algebra(cfg.field);
    } else {
      res.exit_code = 2;
      res.report["error"] = "unknown algebra '" + which + "' (expected B, A, C, Bdual, D)";
      return res;
    }
  } catch (const Error& e) {
    res.exit_code = 2;
    res.report["error"] = e.what();
    return res;
  }

  if (!alg->system().certified() && !cfg.allowUncertified) {
    res.exit_code = 2;
    res.report["error"] = "presentation is not certified confluent; pass --allow-uncertified";
    return res;
  }

  int cutoff = std::min(cfg.dmax_or_default(), 8);
  res.report["schemaVersion"] = "1";
  res.report["command"] = "algebra";
  res.report["which"] = which;
  res.report["config"] = cfg.to_json();
  res.report["presentation"] = presentation_json(*alg, cutoff);
  if (alg->kind() == AlgebraKind::MatrixB || alg->kind() == AlgebraKind::SpecialA ||
      alg->kind() == AlgebraKind::GeneralC) {
    res.report["sigmaExponents"] = sigma_exponents_json(*alg);
    res.report["detq"] = poly_to_string(quantum_determinant(*alg));
  }
  res.files.push_back({"algebra_" + which + ".json", res.report.dump(2) + "\n"});
  return res;
}

}  // namespace qhom
