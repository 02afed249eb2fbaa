#pragma once

// Oriented rewrite systems, normal-form reduction, and diamond-lemma
// confluence certification. A rule rewrites its leading word (lhs) to a
// polynomial of strictly smaller words; reduction always fires on the
// order-largest reducible word, at its leftmost reducible position, with the
// longest matching lhs — a fixed strategy so traces are reproducible.

#include <optional>
#include <string>
#include <vector>

#include "qhom/freealg.hpp"

namespace qhom {

struct RewriteRule {
  Word lhs;
  NCPoly rhs;
};

struct ConfluenceCertificate {
  int overlap_count = 0;
  bool all_resolved = false;
};

class RewriteSystem {
 public:
  RewriteSystem(GensPtr gens, std::vector<RewriteRule> rules, std::vector<int> weights = {});

  const GensPtr& gens() const { return gens_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  // degree weight of each generator (all 1 unless set, e.g. dinv: -N, t: 1, tinv: -1)
  const std::vector<int>& weights() const { return weights_; }
  int word_weight(const Word& w) const;

  bool certified() const { return cert_.has_value() && cert_->all_resolved; }
  const std::optional<ConfluenceCertificate>& certificate() const { return cert_; }
  void set_certificate(ConfluenceCertificate c) { cert_ = c; }

  // true when every rule preserves the weighted degree
  bool homogeneous() const;

  // rule indices whose lhs starts with generator g (reduction accelerator)
  const std::vector<int>& rules_by_first(GenId g) const { return by_first_[g]; }

 private:
  GensPtr gens_;
  std::vector<RewriteRule> rules_;
  std::vector<int> weights_;
  std::vector<std::vector<int>> by_first_;
  std::optional<ConfluenceCertificate> cert_;
};

// Orient each relation by its leading word: lhs = leading word, rhs = minus
// the tail divided by the leading coefficient. Relations sharing a leading
// word must be equal after normalization (else ambiguous_orientation).
RewriteSystem orient(const GensPtr& gens, const std::vector<NCPoly>& relations,
                     const OrderSpec& order = {}, std::vector<int> weights = {});

NCPoly normal_form(const RewriteSystem& sys, const NCPoly& p);

struct OverlapReport {
  int rule_i = 0;
  int rule_j = 0;
  Word word;            // the ambiguity word
  bool inclusion = false;  // lhs_j occurs strictly inside lhs_i
  int position = 0;        // offset of the rule_j match inside word
  bool resolved = false;
  std::optional<NCPoly> discrepancy;  // NF via rule_i minus NF via rule_j; 0 iff resolved
};

struct ConfluenceReport {
  int overlap_count = 0;
  bool confluent = false;
  std::vector<OverlapReport> overlaps;  // ordered by (rule_i, rule_j, word)
};

// Enumerates suffix-prefix overlaps (including self-overlaps) and inclusion
// overlaps, reduces both routes to normal form, and records discrepancies.
// Attaches a certificate to the system.
ConfluenceReport check_confluence(RewriteSystem& sys);

// Number of normal words of weighted degree d. Requires a certificate and a
// homogeneous system with all weights >= 1.
long graded_dimension(const RewriteSystem& sys, int d);

bool word_is_normal(const RewriteSystem& sys, const Word& w);
std::vector<Word> normal_words_of_length(const RewriteSystem& sys, int len);
std::vector<Word> normal_words_up_to_length(const RewriteSystem& sys, int len);

// Presentation text I/O:
//   generators: a b c d
//   weights: 1 1 1 1        (optional)
//   rules:
//   b.a -> q^-1*a.b
std::string presentation_to_string(const RewriteSystem& sys);
RewriteSystem presentation_parse(const std::string& text);

}  // namespace qhom
