#include "qhom/rewrite.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace qhom {

RewriteSystem::RewriteSystem(GensPtr gens, std::vector<RewriteRule> rules, std::vector<int> weights)
    : gens_(std::move(gens)), rules_(std::move(rules)), weights_(std::move(weights)) {
  if (weights_.empty()) weights_.assign(gens_->size(), 1);
  if ((int)weights_.size() != gens_->size())
    throw Error(Errc::invalid_config, "weight vector length does not match generator count");
  by_first_.resize(gens_->size());
  std::set<Word> seen;
  for (size_t i = 0; i < rules_.size(); ++i) {
    const RewriteRule& r = rules_[i];
    if (r.lhs.empty()) throw Error(Errc::invalid_config, "rewrite rule with empty lhs");
    if (!seen.insert(r.lhs).second)
      throw Error(Errc::ambiguous_orientation,
                  "two rules share the leading word " + word_to_string(*gens_, r.lhs));
    for (const auto& [w, c] : r.rhs.terms())
      if (monomial_order_cmp(w, r.lhs) != Cmp::LT)
        throw Error(Errc::internal_consistency,
                    "rule rhs contains a word not below its lhs: " + word_to_string(*gens_, r.lhs));
    by_first_[r.lhs[0]].push_back((int)i);
  }
}

int RewriteSystem::word_weight(const Word& w) const {
  int s = 0;
  for (GenId g : w) s += weights_[g];
  return s;
}

bool RewriteSystem::homogeneous() const {
  for (const RewriteRule& r : rules_) {
    int lw = word_weight(r.lhs);
    for (const auto& [w, c] : r.rhs.terms())
      if (word_weight(w) != lw) return false;
  }
  return true;
}

RewriteSystem orient(const GensPtr& gens, const std::vector<NCPoly>& relations, const OrderSpec&,
                     std::vector<int> weights) {
  std::map<Word, NCPoly, WordDegLexLess> oriented;  // lhs -> normalized rhs
  for (const NCPoly& rel : relations) {
    if (rel.is_zero()) continue;
    require_compatible(gens, rel.gens());
    const Word& lead = rel.lead_word();
    if (lead.empty())
      throw Error(Errc::ambiguous_orientation, "relation with constant leading term cannot be oriented");
    Scalar invlead = rel.lead_coeff().inverse();
    // rhs = lhs - relation/lead  (i.e. minus the tail, normalized)
    NCPoly rhs(gens);
    for (const auto& [w, c] : rel.terms()) {
      if (w == lead) continue;
      rhs.add_term(w, -(c * invlead));
    }
    auto it = oriented.find(lead);
    if (it == oriented.end()) {
      oriented.emplace(lead, std::move(rhs));
    } else if (!(it->second == rhs)) {
      throw Error(Errc::ambiguous_orientation,
                  "two relations share the leading word " + word_to_string(*gens, lead) +
                      " with different tails; pre-reduce the relation set");
    }
  }
  std::vector<RewriteRule> rules;
  rules.reserve(oriented.size());
  for (auto& [lhs, rhs] : oriented) rules.push_back({lhs, std::move(rhs)});
  return RewriteSystem(gens, std::move(rules), std::move(weights));
}

namespace {

// Leftmost match of any rule lhs in w; on position ties prefer the longest
// lhs. Returns (position, rule index) or nullopt.
std::optional<std::pair<int, int>> find_redex(const RewriteSystem& sys, const Word& w) {
  for (size_t pos = 0; pos < w.size(); ++pos) {
    int best_rule = -1;
    size_t best_len = 0;
    for (int ri : sys.rules_by_first(w[pos])) {
      const Word& lhs = sys.rules()[ri].lhs;
      if (lhs.size() > w.size() - pos || lhs.size() <= best_len) continue;
      if (std::equal(lhs.begin(), lhs.end(), w.begin() + pos)) {
        best_rule = ri;
        best_len = lhs.size();
      }
    }
    if (best_rule >= 0) return std::pair{(int)pos, best_rule};
  }
  return std::nullopt;
}

}  // namespace

bool word_is_normal(const RewriteSystem& sys, const Word& w) {
  return !find_redex(sys, w).has_value();
}

NCPoly normal_form(const RewriteSystem& sys, const NCPoly& p) {
  require_compatible(sys.gens(), p.gens());
  NCPoly result = p;
  // Words to examine, largest first; a word needs examining at most once
  // since reducibility depends on the word alone.
  std::set<Word, WordDegLexLess> pending;
  for (const auto& [w, c] : result.terms()) pending.insert(w);
  while (!pending.empty()) {
    Word w = *pending.rbegin();
    pending.erase(std::prev(pending.end()));
    Scalar c = result.coeff(w);
    if (c.is_zero()) continue;  // cancelled along the way
    auto redex = find_redex(sys, w);
    if (!redex) continue;  // normal word: leave it
    auto [pos, ri] = *redex;
    const RewriteRule& rule = sys.rules()[ri];
    result.add_term(w, -c);
    Word prefix(w.begin(), w.begin() + pos);
    Word suffix(w.begin() + pos + rule.lhs.size(), w.end());
    for (const auto& [rw, rc] : rule.rhs.terms()) {
      Word nw = prefix;
      nw.insert(nw.end(), rw.begin(), rw.end());
      nw.insert(nw.end(), suffix.begin(), suffix.end());
      result.add_term(nw, c * rc);
      pending.insert(std::move(nw));
    }
  }
  return result;
}

ConfluenceReport check_confluence(RewriteSystem& sys) {
  ConfluenceReport report;
  const auto& rules = sys.rules();
  const GensPtr& gens = sys.gens();
  for (size_t i = 0; i < rules.size(); ++i) {
    for (size_t j = 0; j < rules.size(); ++j) {
      const Word& li = rules[i].lhs;
      const Word& lj = rules[j].lhs;
      // suffix-prefix: a proper suffix of lhs_i equals a proper prefix of lhs_j
      size_t smax = std::min(li.size(), lj.size()) - 1;
      for (size_t s = 1; s <= smax; ++s) {
        if (!std::equal(li.end() - s, li.end(), lj.begin())) continue;
        OverlapReport o;
        o.rule_i = (int)i;
        o.rule_j = (int)j;
        o.inclusion = false;
        o.position = (int)(li.size() - s);
        o.word = li;
        o.word.insert(o.word.end(), lj.begin() + s, lj.end());
        // route via rule i at position 0 vs route via rule j at position |li|-s
        Word tail(lj.begin() + s, lj.end());
        NCPoly via_i = rules[i].rhs * NCPoly::monomial(gens, tail, Scalar(1));
        Word head(li.begin(), li.begin() + (li.size() - s));
        NCPoly via_j = NCPoly::monomial(gens, head, Scalar(1)) * rules[j].rhs;
        o.discrepancy = normal_form(sys, via_i) - normal_form(sys, via_j);
        o.resolved = o.discrepancy->is_zero();
        report.overlaps.push_back(std::move(o));
      }
      // inclusion: lhs_j occurs inside the strictly longer lhs_i
      if (i != j && lj.size() < li.size()) {
        for (size_t pos = 0; pos + lj.size() <= li.size(); ++pos) {
          if (!std::equal(lj.begin(), lj.end(), li.begin() + pos)) continue;
          OverlapReport o;
          o.rule_i = (int)i;
          o.rule_j = (int)j;
          o.inclusion = true;
          o.position = (int)pos;
          o.word = li;
          NCPoly via_i = rules[i].rhs;
          Word head(li.begin(), li.begin() + pos);
          Word tail(li.begin() + pos + lj.size(), li.end());
          NCPoly via_j = NCPoly::monomial(gens, head, Scalar(1)) * rules[j].rhs *
                         NCPoly::monomial(gens, tail, Scalar(1));
          o.discrepancy = normal_form(sys, via_i) - normal_form(sys, via_j);
          o.resolved = o.discrepancy->is_zero();
          report.overlaps.push_back(std::move(o));
        }
      }
    }
  }
  report.overlap_count = (int)report.overlaps.size();
  report.confluent = std::all_of(report.overlaps.begin(), report.overlaps.end(),
                                 [](const OverlapReport& o) { return o.resolved; });
  sys.set_certificate({report.overlap_count, report.confluent});
  return report;
}

// ------------------------------------------------ normal-word enumeration

namespace {

// Prefix automaton over the lhs set: states are proper prefixes of rule
// lhs's; following a generator either dies (completes some lhs) or moves to
// the longest suffix that is again a proper prefix.
struct PrefixAutomaton {
  std::vector<Word> states;                 // state 0 = empty prefix
  std::vector<std::vector<int>> next;       // next[state][g]; -1 = reducible
  explicit PrefixAutomaton(const RewriteSystem& sys) {
    std::set<Word> protostates;
    protostates.insert(Word{});
    for (const RewriteRule& r : sys.rules())
      for (size_t len = 1; len < r.lhs.size(); ++len)
        protostates.insert(Word(r.lhs.begin(), r.lhs.begin() + len));
    states.assign(protostates.begin(), protostates.end());
    std::map<Word, int> index;
    for (size_t s = 0; s < states.size(); ++s) index[states[s]] = (int)s;
    int ng = sys.gens()->size();
    next.assign(states.size(), std::vector<int>(ng, 0));
    for (size_t s = 0; s < states.size(); ++s) {
      for (GenId g = 0; g < ng; ++g) {
        Word w = states[s];
        w.push_back(g);
        // dead if any lhs is a suffix of w
        bool dead = false;
        for (const RewriteRule& r : sys.rules()) {
          if (r.lhs.size() <= w.size() &&
              std::equal(r.lhs.begin(), r.lhs.end(), w.end() - r.lhs.size())) {
            dead = true;
            break;
          }
        }
        if (dead) {
          next[s][g] = -1;
          continue;
        }
        // longest suffix of w that is a known proper prefix
        for (size_t drop = 0; drop <= w.size(); ++drop) {
          Word suf(w.begin() + drop, w.end());
          auto it = index.find(suf);
          if (it != index.end()) {
            next[s][g] = it->second;
            break;
          }
        }
      }
    }
  }
};

void require_countable(const RewriteSystem& sys) {
  if (!sys.certified())
    throw Error(Errc::not_graded, "dimension counting requires a certified confluent system");
  if (!sys.homogeneous())
    throw Error(Errc::not_graded, "dimension counting requires weight-homogeneous rules");
}

}  // namespace

long graded_dimension(const RewriteSystem& sys, int d) {
  require_countable(sys);
  for (int w : sys.weights())
    if (w < 1) throw Error(Errc::not_graded, "graded_dimension requires all generator weights >= 1");
  if (d < 0) return 0;
  if (d == 0) return 1;
  PrefixAutomaton aut(sys);
  int ng = sys.gens()->size();
  // path counting over (state, accumulated weight)
  std::vector<std::vector<long>> count(aut.states.size(), std::vector<long>(d + 1, 0));
  count[0][0] = 1;
  for (int step = 0; step < d; ++step) {
    std::vector<std::vector<long>> nxt(aut.states.size(), std::vector<long>(d + 1, 0));
    bool any = false;
    for (size_t s = 0; s < aut.states.size(); ++s)
      for (int wgt = 0; wgt <= d; ++wgt) {
        if (!count[s][wgt]) continue;
        for (GenId g = 0; g < ng; ++g) {
          int t = aut.next[s][g];
          if (t < 0) continue;
          int nw = wgt + sys.weights()[g];
          if (nw > d) continue;
          nxt[t][nw] += count[s][wgt];
          any = true;
        }
      }
    count = std::move(nxt);
    if (!any) break;
  }
  long total = 0;
  for (size_t s = 0; s < aut.states.size(); ++s) total += count[s][d];
  return total;
}

namespace {

void enumerate_rec(const RewriteSystem& sys, const PrefixAutomaton& aut, int state, int remaining,
                   Word& current, std::vector<Word>& out, bool exact_only) {
  if (!exact_only || remaining == 0) out.push_back(current);
  if (remaining == 0) return;
  int ng = sys.gens()->size();
  for (GenId g = 0; g < ng; ++g) {
    int t = aut.next[state][g];
    if (t < 0) continue;
    current.push_back(g);
    enumerate_rec(sys, aut, t, remaining - 1, current, out, exact_only);
    current.pop_back();
  }
}

}  // namespace

std::vector<Word> normal_words_of_length(const RewriteSystem& sys, int len) {
  if (len < 0) return {};
  PrefixAutomaton aut(sys);
  std::vector<Word> out;
  Word current;
  enumerate_rec(sys, aut, 0, len, current, out, /*exact_only=*/true);
  return out;
}

std::vector<Word> normal_words_up_to_length(const RewriteSystem& sys, int len) {
  if (len < 0) return {};
  PrefixAutomaton aut(sys);
  std::vector<Word> out;
  Word current;
  enumerate_rec(sys, aut, 0, len, current, out, /*exact_only=*/false);
  // generated in DFS order; resort by (length, lex) for canonical indexing
  std::sort(out.begin(), out.end(), WordDegLexLess{});
  return out;
}

// ---------------------------------------------------- presentation text I/O

std::string presentation_to_string(const RewriteSystem& sys) {
  std::ostringstream out;
  out << "generators:";
  for (const std::string& n : sys.gens()->names()) out << " " << n;
  out << "\n";
  bool unit_weights = std::all_of(sys.weights().begin(), sys.weights().end(),
                                  [](int w) { return w == 1; });
  if (!unit_weights) {
    out << "weights:";
    for (int w : sys.weights()) out << " " << w;
    out << "\n";
  }
  out << "rules:\n";
  for (const RewriteRule& r : sys.rules())
    out << word_to_string(*sys.gens(), r.lhs) << " -> " << poly_to_string(r.rhs) << "\n";
  return out.str();
}

RewriteSystem presentation_parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  GensPtr gens;
  std::vector<int> weights;
  std::vector<RewriteRule> rules;
  bool in_rules = false;
  while (std::getline(in, line)) {
    // strip comments and whitespace-only lines
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    line = line.substr(first);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
      line.pop_back();

    if (line.rfind("generators:", 0) == 0) {
      std::istringstream gl(line.substr(11));
      std::vector<std::string> names;
      std::string n;
      while (gl >> n) names.push_back(n);
      if (names.empty()) throw Error(Errc::invalid_config, "presentation: empty generator list");
      gens = GeneratorSet::make(std::move(names));
    } else if (line.rfind("weights:", 0) == 0) {
      std::istringstream wl(line.substr(8));
      int w;
      while (wl >> w) weights.push_back(w);
    } else if (line == "rules:") {
      if (!gens) throw Error(Errc::invalid_config, "presentation: rules before generators");
      in_rules = true;
    } else if (in_rules) {
      auto arrow = line.find("->");
      if (arrow == std::string::npos)
        throw Error(Errc::invalid_config, "presentation: rule line without '->': " + line);
      NCPoly lhs_poly = poly_parse(gens, line.substr(0, arrow));
      NCPoly rhs = poly_parse(gens, line.substr(arrow + 2));
      if (lhs_poly.num_terms() != 1 || !lhs_poly.lead_coeff().is_one())
        throw Error(Errc::invalid_config, "presentation: rule lhs must be a single monic word");
      rules.push_back({lhs_poly.lead_word(), std::move(rhs)});
    } else {
      throw Error(Errc::invalid_config, "presentation: unrecognized line: " + line);
    }
  }
  if (!gens) throw Error(Errc::invalid_config, "presentation: missing generators");
  return RewriteSystem(gens, std::move(rules), std::move(weights));
}

}  // namespace qhom
