#ifndef VITALFILTER_EVAL_HPP
#define VITALFILTER_EVAL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "vitalfilter/topics.hpp"

namespace vitalfilter {

struct RunEntry {
  std::string entity_id;
  std::string doc_id;
  int confidence = 0;  // [0, 1000]
};

struct RunFile {
  std::string name;
  std::string config_hash;
  std::vector<RunEntry> entries;  // (entity_id, doc_id) pairs unique
};

// (entity_id, doc_id) -> raw label; vital is the positive class. The judged
// pairs define the candidate pool per entity: documents missing from a run
// are scored as confidence 0.
class JudgmentSet {
 public:
  void add(const std::string& entity_id, const std::string& doc_id,
           const std::string& raw_label);

  const std::map<std::string, std::map<std::string, std::string>>& by_entity() const {
    return by_entity_;
  }
  bool empty() const { return by_entity_.empty(); }
  std::size_t pair_count() const { return pairs_; }

 private:
  std::map<std::string, std::map<std::string, std::string>> by_entity_;
  std::size_t pairs_ = 0;
};

struct SweepPoint {
  int theta = 0;
  double avg_p = 0;
  double avg_r = 0;
  double h = 0;       // harmonic mean of avg_p and avg_r
  double avg_su = 0;  // over entities with at least one vital document
};

struct EntityScore {
  std::string entity_id;
  double p = 0;
  double r = 0;
  double f = 0;  // per-entity harmonic mean
  double su = 0;
};

struct SegmentStats {
  std::size_t entities = 0;
  double mean_p = 0;
  double mean_r = 0;
  double mean_f = 0;
  double mean_su = 0;
};

struct ScoreReport {
  std::vector<SweepPoint> curve;  // ascending theta; last point is sentinel 1001
  double f_macro = 0;             // max h over the curve
  int best_theta = 0;             // smallest maximizing theta
  double su_max = 0;              // max avg SU over the same sweep
  double su_at_theta = 0;
  std::vector<EntityScore> per_entity;  // at best_theta, sorted by entity_id
  double mean_p = 0, mean_r = 0, mean_f = 0, mean_su = 0;
  std::size_t entity_count = 0;
  std::size_t judged_pairs = 0;
  std::size_t zero_vital_entities = 0;  // excluded from SU averages, R fixed at 1
  std::optional<std::map<std::string, SegmentStats>> segments;  // keyed null/web/wiki
  std::vector<std::string> warnings;
};

// Threshold sweep over the distinct effective confidences (run entries plus
// the implicit 0 of judged documents absent from the run) and the sentinel
// 1001. Per entity, P = retrieved-vital / retrieved (0 when empty) and
// R = retrieved-vital / vital (1 for zero-vital entities); the curve carries
// the across-entity averages. Run entries for entities absent from the
// judgments produce a warning and are ignored.
ScoreReport sweep_f_macro(const RunFile& run, const JudgmentSet& judgments,
                          double min_u = -0.5);

struct SuResult {
  std::vector<std::pair<std::string, double>> per_entity;  // zero-vital excluded
  double average = 0;
  std::size_t excluded_zero_vital = 0;
};

// SU = (max(NormU, min_u) - min_u) / (1 - min_u), NormU = U / (2 * vitals),
// U = 2 * retrieved-vital - retrieved-non-vital, over explicit retrieval
// sets. min_u >= 1 is a parameter error.
SuResult scaled_utility(const std::map<std::string, std::set<std::string>>& retrieved,
                        const JudgmentSet& judgments, double min_u = -0.5);

// Per-entity P/R/F/SU at a fixed threshold; also fills the report means.
std::vector<EntityScore> per_entity_prf(const RunFile& run, const JudgmentSet& judgments,
                                        int theta, double min_u = -0.5);

// Mean P/R/F/SU per profile segment ({null, web, wiki}; empty segments are
// omitted). Every scored entity must exist in the registry.
std::map<std::string, SegmentStats> segment_report(const std::vector<EntityScore>& per_entity,
                                                   const Registry& registry);

struct TTestResult {
  double t = 0;
  double p = 0;  // two-sided
  std::size_t n = 0;
};

// Paired t-test with sample standard deviation (n-1) and p from the
// t-distribution CDF via the regularized incomplete beta function.
// Zero-variance differences: t=0/p=1 when the mean difference is also zero,
// otherwise a degenerate-case error.
TTestResult paired_t_test(const std::vector<double>& scores_a,
                          const std::vector<double>& scores_b);

struct CvFold {
  std::vector<std::string> train_ids;
  std::vector<std::string> test_ids;
};

// Seeded shuffle then a contiguous near-equal partition (sizes differ by at
// most 1); fold i tests on part i and trains on the rest.
std::vector<CvFold> cv_split_entities(const std::vector<std::string>& entity_ids,
                                      std::size_t folds, std::uint64_t seed);

// entity_id \t doc_id \t confidence; '#'-prefixed metadata lines optional.
RunFile read_run_file(const std::string& path);
void write_run_file(const RunFile& run, const std::string& path);

// entity_id \t doc_id \t raw_label.
JudgmentSet read_judgments(const std::string& path);
void write_judgments(const JudgmentSet& judgments, const std::string& path);

std::string report_to_json(const ScoreReport& report);
std::string report_to_text(const ScoreReport& report);

}  // namespace vitalfilter

#endif  // VITALFILTER_EVAL_HPP
