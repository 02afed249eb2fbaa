#include "qhom/report.hpp"

#include <fstream>
#include <sstream>

#include "qhom/rewrite.hpp"

namespace qhom {

std::string rat_str(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

std::string deg_str(const Deg& d) {
  std::string s;
  for (size_t i = 0; i < d.size(); ++i) {
    if (i) s += ":";
    s += std::to_string(d[i]);
  }
  return s;
}

Json field_json(const ScalarField& f) {
  Json j;
  if (f.symbolic_mode()) {
    j["mode"] = "symbolic";
  } else {
    j["mode"] = "specialized";
    j["q0"] = rat_str(f.q0);
    j["confirmQ0"] = rat_str(f.confirm_q0());
  }
  return j;
}

std::string homology_csv(const HomologyTable& t) {
  std::string out = "n,d,chainDim,rankOut,rankIn,homDim\n";
  for (const auto& r : t.rows) {
    out += std::to_string(r.n) + "," + deg_str(r.d) + "," + std::to_string(r.chain_dim) + "," +
           std::to_string(r.rank_out) + "," + std::to_string(r.rank_in) + "," +
           std::to_string(r.hom_dim) + "\n";
  }
  return out;
}

Json homology_json(const HomologyTable& t) {
  Json j;
  j["maxN"] = t.max_n;
  j["complete"] = t.complete;
  Json rows = Json::array();
  for (const auto& r : t.rows) {
    Json row;
    row["n"] = r.n;
    row["d"] = deg_str(r.d);
    row["chainDim"] = r.chain_dim;
    row["rankOut"] = r.rank_out;
    row["rankIn"] = r.rank_in;
    row["homDim"] = r.hom_dim;
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

Json duality_json(const DualityReport& r) {
  Json j;
  j["N"] = r.N;
  j["dMax"] = r.dMax;
  Json lines = Json::array();
  for (const auto& l : r.lines) {
    Json line;
    line["d"] = l.d;
    line["homology"] = l.homology;
    line["center"] = l.center;
    line["pass"] = l.pass;
    lines.push_back(std::move(line));
  }
  j["perDegree"] = std::move(lines);
  j["pass"] = r.pass;
  return j;
}

Json presentation_json(const PresentedAlgebra& alg, int dimCutoff) {
  Json j;
  j["generators"] = alg.gens()->names();
  j["weights"] = alg.system().weights();

  Json rules = Json::array();
  for (const auto& rule : alg.system().rules()) {
    Json r;
    r["lhs"] = word_to_string(*alg.gens(), rule.lhs);
    r["rhs"] = poly_to_string(rule.rhs);
    rules.push_back(std::move(r));
  }
  j["rules"] = std::move(rules);

  if (alg.system().certificate()) {
    Json c;
    c["overlapCount"] = alg.system().certificate()->overlap_count;
    c["allResolved"] = alg.system().certificate()->all_resolved;
    j["certificate"] = std::move(c);
  } else {
    j["certificate"] = nullptr;
  }

  // dimension counts: graded dimensions where the grading is by word length,
  // plus-minus graded for the Laurent pair, plain word counts otherwise
  bool unit_weights = true;
  for (int w : alg.system().weights()) unit_weights = unit_weights && w == 1;
  if (alg.system().certified() && unit_weights && alg.graded()) {
    Json dims = Json::array();
    for (int d = 0; d <= dimCutoff; ++d) dims.push_back(graded_dimension(alg.system(), d));
    j["gradedDims"] = std::move(dims);
  } else if (alg.kind() == AlgebraKind::LaurentD) {
    Json dims = Json::object();
    for (int d = -dimCutoff; d <= dimCutoff; ++d)
      dims[std::to_string(d)] = (long)laurent_basis_degree(alg, d).size();
    j["gradedDims"] = std::move(dims);
  } else {
    Json dims = Json::array();
    for (int d = 0; d <= dimCutoff; ++d)
      dims.push_back((long)normal_words_of_length(alg.system(), d).size());
    j["wordCountsByLength"] = std::move(dims);
  }
  return j;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(Errc::invalid_config, "cannot open output file: " + path);
  f << content;
  if (!f.good()) throw Error(Errc::invalid_config, "write failed: " + path);
}

}  // namespace qhom
