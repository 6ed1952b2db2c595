#include "vitalfilter/eval.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "vitalfilter/errors.hpp"
#include "vitalfilter/features.hpp"
#include "vitalfilter/rng.hpp"
#include "vitalfilter/util.hpp"

namespace vitalfilter {

namespace {

struct PoolDoc {
  int confidence = 0;
  bool vital = false;
};

struct EntityPool {
  std::vector<PoolDoc> docs;
  std::size_t vital_total = 0;
};

struct EntityCounts {
  std::size_t retrieved = 0;
  std::size_t retrieved_vital = 0;
};

double su_of(double norm_u, double min_u) {
  return (std::max(norm_u, min_u) - min_u) / (1.0 - min_u);
}

EntityCounts counts_at(const EntityPool& pool, int theta) {
  EntityCounts c;
  for (const auto& doc : pool.docs) {
    if (doc.confidence >= theta) {
      ++c.retrieved;
      if (doc.vital) ++c.retrieved_vital;
    }
  }
  return c;
}

double precision_of(const EntityCounts& c) {
  return c.retrieved == 0 ? 0.0
                          : static_cast<double>(c.retrieved_vital) /
                                static_cast<double>(c.retrieved);
}

double recall_of(const EntityCounts& c, std::size_t vital_total) {
  if (vital_total == 0) return 1.0;  // zero-vital convention, noted in reports
  return static_cast<double>(c.retrieved_vital) / static_cast<double>(vital_total);
}

double harmonic(double p, double r) { return (p + r) == 0.0 ? 0.0 : 2.0 * p * r / (p + r); }

// Entity pools with effective confidences: judged documents absent from the
// run carry confidence 0.
std::map<std::string, EntityPool> build_pools(const RunFile& run, const JudgmentSet& judgments,
                                              std::vector<std::string>* warnings) {
  std::map<std::string, std::map<std::string, int>> run_conf;
  for (const auto& entry : run.entries) {
    if (!judgments.by_entity().count(entry.entity_id)) {
      if (warnings)
        warnings->push_back("run entry for unknown entity '" + entry.entity_id + "' ignored");
      continue;
    }
    run_conf[entry.entity_id][entry.doc_id] = entry.confidence;
  }

  std::map<std::string, EntityPool> pools;
  for (const auto& [entity_id, docs] : judgments.by_entity()) {
    EntityPool pool;
    const auto conf_it = run_conf.find(entity_id);
    for (const auto& [doc_id, raw_label] : docs) {
      PoolDoc doc;
      doc.vital = (raw_label == "vital");
      if (conf_it != run_conf.end()) {
        auto it = conf_it->second.find(doc_id);
        if (it != conf_it->second.end()) doc.confidence = it->second;
      }
      if (doc.vital) ++pool.vital_total;
      pool.docs.push_back(doc);
    }
    pools.emplace(entity_id, std::move(pool));
  }
  return pools;
}

// Regularized incomplete beta function I_x(a, b) via Lentz's continued
// fraction; relative accuracy far beyond what a p-value needs.
double incomplete_beta(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  if (x > (a + 1.0) / (a + b + 2.0)) return 1.0 - incomplete_beta(b, a, 1.0 - x);

  const double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                           a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(log_front) / a;

  constexpr double kTiny = 1e-300;
  constexpr double kEps = 1e-15;
  double f = 1.0, c = 1.0, d = 0.0;
  for (int i = 0; i <= 300; ++i) {
    const int m = i / 2;
    double numerator;
    if (i == 0)
      numerator = 1.0;
    else if (i % 2 == 0)
      numerator = m * (b - m) * x / ((a + 2.0 * m - 1.0) * (a + 2.0 * m));
    else
      numerator = -((a + m) * (a + b + m) * x) / ((a + 2.0 * m) * (a + 2.0 * m + 1.0));

    d = 1.0 + numerator * d;
    if (std::abs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    c = 1.0 + numerator / c;
    if (std::abs(c) < kTiny) c = kTiny;
    const double step = c * d;
    f *= step;
    if (std::abs(1.0 - step) < kEps) break;
  }
  return front * (f - 1.0);
}

double student_t_two_sided_p(double t, double df) {
  const double x = df / (df + t * t);
  return incomplete_beta(df / 2.0, 0.5, x);
}

}  // namespace

void JudgmentSet::add(const std::string& entity_id, const std::string& doc_id,
                      const std::string& raw_label) {
  if (!is_valid_raw_label(raw_label))
    throw SchemaError("invalid raw label '" + raw_label + "' for (" + entity_id + ", " + doc_id +
                      ")");
  auto& docs = by_entity_[entity_id];
  if (docs.emplace(doc_id, raw_label).second) ++pairs_;
  else docs[doc_id] = raw_label;
}

ScoreReport sweep_f_macro(const RunFile& run, const JudgmentSet& judgments, double min_u) {
  if (judgments.empty()) throw EvalError("judgment set is empty");
  if (min_u >= 1.0) throw EvalError("min_u must be < 1");

  ScoreReport report;
  auto pools = build_pools(run, judgments, &report.warnings);
  report.entity_count = pools.size();
  report.judged_pairs = judgments.pair_count();
  for (const auto& [id, pool] : pools)
    if (pool.vital_total == 0) ++report.zero_vital_entities;

  std::set<int> thresholds;
  for (const auto& [id, pool] : pools)
    for (const auto& doc : pool.docs) thresholds.insert(doc.confidence);
  thresholds.insert(1001);  // retrieves nothing

  report.curve.reserve(thresholds.size());
  bool first = true;
  for (int theta : thresholds) {
    double sum_p = 0, sum_r = 0, sum_su = 0;
    std::size_t su_entities = 0;
    for (const auto& [id, pool] : pools) {
      const EntityCounts c = counts_at(pool, theta);
      sum_p += precision_of(c);
      sum_r += recall_of(c, pool.vital_total);
      if (pool.vital_total > 0) {
        const double u = 2.0 * static_cast<double>(c.retrieved_vital) -
                         static_cast<double>(c.retrieved - c.retrieved_vital);
        const double norm_u = u / (2.0 * static_cast<double>(pool.vital_total));
        sum_su += su_of(norm_u, min_u);
        ++su_entities;
      }
    }
    SweepPoint point;
    point.theta = theta;
    const double n = static_cast<double>(pools.size());
    point.avg_p = sum_p / n;
    point.avg_r = sum_r / n;
    point.h = harmonic(point.avg_p, point.avg_r);
    point.avg_su = su_entities > 0 ? sum_su / static_cast<double>(su_entities) : 0.0;
    report.curve.push_back(point);

    if (first || point.h > report.f_macro) {
      report.f_macro = point.h;
      report.best_theta = point.theta;
    }
    if (first || point.avg_su > report.su_max) report.su_max = point.avg_su;
    first = false;
  }

  // Per-entity table and SU at the best-F threshold.
  for (const auto& point : report.curve) {
    if (point.theta == report.best_theta) {
      report.su_at_theta = point.avg_su;
      break;
    }
  }
  for (const auto& [id, pool] : pools) {
    const EntityCounts c = counts_at(pool, report.best_theta);
    EntityScore score;
    score.entity_id = id;
    score.p = precision_of(c);
    score.r = recall_of(c, pool.vital_total);
    score.f = harmonic(score.p, score.r);
    if (pool.vital_total > 0) {
      const double u = 2.0 * static_cast<double>(c.retrieved_vital) -
                       static_cast<double>(c.retrieved - c.retrieved_vital);
      score.su = su_of(u / (2.0 * static_cast<double>(pool.vital_total)), min_u);
    }
    report.per_entity.push_back(std::move(score));
  }
  const double n = static_cast<double>(report.per_entity.size());
  double su_sum = 0;
  std::size_t su_entities = 0;
  for (const auto& s : report.per_entity) {
    report.mean_p += s.p / n;
    report.mean_r += s.r / n;
    report.mean_f += s.f / n;
    if (pools.at(s.entity_id).vital_total > 0) {
      su_sum += s.su;
      ++su_entities;
    }
  }
  report.mean_su = su_entities > 0 ? su_sum / static_cast<double>(su_entities) : 0.0;
  return report;
}

SuResult scaled_utility(const std::map<std::string, std::set<std::string>>& retrieved,
                        const JudgmentSet& judgments, double min_u) {
  if (min_u >= 1.0) throw EvalError("min_u must be < 1");
  SuResult result;
  double sum = 0;
  for (const auto& [entity_id, docs] : judgments.by_entity()) {
    std::size_t vital_total = 0, retrieved_vital = 0, retrieved_nonvital = 0;
    const auto set_it = retrieved.find(entity_id);
    for (const auto& [doc_id, raw_label] : docs) {
      const bool vital = (raw_label == "vital");
      if (vital) ++vital_total;
      if (set_it != retrieved.end() && set_it->second.count(doc_id)) {
        if (vital) ++retrieved_vital;
        else ++retrieved_nonvital;
      }
    }
    if (vital_total == 0) {
      ++result.excluded_zero_vital;
      continue;
    }
    const double u = 2.0 * static_cast<double>(retrieved_vital) -
                     static_cast<double>(retrieved_nonvital);
    const double norm_u = u / (2.0 * static_cast<double>(vital_total));
    const double su = su_of(norm_u, min_u);
    result.per_entity.emplace_back(entity_id, su);
    sum += su;
  }
  if (!result.per_entity.empty()) result.average = sum / static_cast<double>(result.per_entity.size());
  return result;
}

std::vector<EntityScore> per_entity_prf(const RunFile& run, const JudgmentSet& judgments,
                                        int theta, double min_u) {
  if (judgments.empty()) throw EvalError("judgment set is empty");
  if (theta < 0 || theta > 1001) throw EvalError("theta must lie in [0, 1001]");
  auto pools = build_pools(run, judgments, nullptr);
  std::vector<EntityScore> table;
  for (const auto& [id, pool] : pools) {
    const EntityCounts c = counts_at(pool, theta);
    EntityScore score;
    score.entity_id = id;
    score.p = precision_of(c);
    score.r = recall_of(c, pool.vital_total);
    score.f = harmonic(score.p, score.r);
    if (pool.vital_total > 0) {
      const double u = 2.0 * static_cast<double>(c.retrieved_vital) -
                       static_cast<double>(c.retrieved - c.retrieved_vital);
      score.su = su_of(u / (2.0 * static_cast<double>(pool.vital_total)), min_u);
    }
    table.push_back(std::move(score));
  }
  return table;
}

std::map<std::string, SegmentStats> segment_report(const std::vector<EntityScore>& per_entity,
                                                   const Registry& registry) {
  std::map<std::string, SegmentStats> segments;
  for (const auto& score : per_entity) {
    const EntityTopic* topic = registry.find(score.entity_id);
    if (!topic) throw EvalError("entity '" + score.entity_id + "' missing from the registry");
    auto& stats = segments[std::string(profile_kind_name(topic->profile.kind))];
    ++stats.entities;
    stats.mean_p += score.p;
    stats.mean_r += score.r;
    stats.mean_f += score.f;
    stats.mean_su += score.su;
  }
  for (auto& [kind, stats] : segments) {
    const double n = static_cast<double>(stats.entities);
    stats.mean_p /= n;
    stats.mean_r /= n;
    stats.mean_f /= n;
    stats.mean_su /= n;
  }
  return segments;
}

TTestResult paired_t_test(const std::vector<double>& scores_a,
                          const std::vector<double>& scores_b) {
  if (scores_a.size() != scores_b.size())
    throw EvalError("paired t-test requires aligned score lists");
  const std::size_t n = scores_a.size();
  if (n < 2) throw EvalError("paired t-test requires n >= 2");

  double mean = 0;
  for (std::size_t i = 0; i < n; ++i) mean += (scores_a[i] - scores_b[i]);
  mean /= static_cast<double>(n);
  double ss = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = (scores_a[i] - scores_b[i]) - mean;
    ss += d * d;
  }
  const double sd = std::sqrt(ss / static_cast<double>(n - 1));

  TTestResult result;
  result.n = n;
  if (sd == 0.0) {
    if (mean == 0.0) {
      result.t = 0.0;
      result.p = 1.0;
      return result;
    }
    throw EvalError("degenerate paired t-test: zero variance with nonzero mean difference");
  }
  result.t = mean / (sd / std::sqrt(static_cast<double>(n)));
  result.p = student_t_two_sided_p(result.t, static_cast<double>(n - 1));
  return result;
}

std::vector<CvFold> cv_split_entities(const std::vector<std::string>& entity_ids,
                                      std::size_t folds, std::uint64_t seed) {
  if (folds < 2) throw EvalError("cross-validation needs at least 2 folds");
  if (entity_ids.size() < folds)
    throw EvalError("fewer entities than folds (" + std::to_string(entity_ids.size()) + " < " +
                    std::to_string(folds) + ")");

  std::vector<std::string> shuffled = entity_ids;
  std::mt19937_64 rng(seed);
  shuffle(shuffled, rng);

  const std::size_t base = shuffled.size() / folds;
  const std::size_t extra = shuffled.size() % folds;
  std::vector<CvFold> result(folds);
  std::size_t cursor = 0;
  for (std::size_t fold = 0; fold < folds; ++fold) {
    const std::size_t size = base + (fold < extra ? 1 : 0);
    for (std::size_t i = 0; i < shuffled.size(); ++i) {
      if (i >= cursor && i < cursor + size)
        result[fold].test_ids.push_back(shuffled[i]);
      else
        result[fold].train_ids.push_back(shuffled[i]);
    }
    cursor += size;
  }
  return result;
}

RunFile read_run_file(const std::string& path) {
  std::istringstream in(read_file(path));
  RunFile run;
  std::set<std::pair<std::string, std::string>> seen;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty() || line[0] == '#') continue;
    auto fields = split(line, '\t');
    if (fields.size() != 3)
      throw ParseError("expected 'entity_id<TAB>doc_id<TAB>confidence'", line_number);
    RunEntry entry;
    entry.entity_id = std::string(fields[0]);
    entry.doc_id = std::string(fields[1]);
    const std::int64_t confidence = parse_int(fields[2]);
    if (confidence < 0 || confidence > 1000)
      throw SchemaError("confidence " + std::to_string(confidence) + " outside [0, 1000] at line " +
                        std::to_string(line_number));
    entry.confidence = static_cast<int>(confidence);
    if (!seen.emplace(entry.entity_id, entry.doc_id).second)
      throw SchemaError("duplicate run entry for (" + entry.entity_id + ", " + entry.doc_id +
                        ") at line " + std::to_string(line_number));
    run.entries.push_back(std::move(entry));
  }
  return run;
}

void write_run_file(const RunFile& run, const std::string& path) {
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& entry : run.entries) {
    if (entry.confidence < 0 || entry.confidence > 1000)
      throw SchemaError("confidence outside [0, 1000] for (" + entry.entity_id + ", " +
                        entry.doc_id + ")");
    if (!seen.emplace(entry.entity_id, entry.doc_id).second)
      throw SchemaError("duplicate run entry for (" + entry.entity_id + ", " + entry.doc_id + ")");
  }
  // Pure three-column TSV; run metadata lives in the experiment manifest.
  std::string out;
  for (const auto& entry : run.entries) {
    out += entry.entity_id;
    out += '\t';
    out += entry.doc_id;
    out += '\t';
    out += std::to_string(entry.confidence);
    out += '\n';
  }
  write_file(path, out);
}

JudgmentSet read_judgments(const std::string& path) {
  std::istringstream in(read_file(path));
  JudgmentSet judgments;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty() || line[0] == '#') continue;
    auto fields = split(line, '\t');
    if (fields.size() != 3)
      throw ParseError("expected 'entity_id<TAB>doc_id<TAB>label'", line_number);
    judgments.add(std::string(fields[0]), std::string(fields[1]), std::string(fields[2]));
  }
  return judgments;
}

void write_judgments(const JudgmentSet& judgments, const std::string& path) {
  std::string out;
  for (const auto& [entity_id, docs] : judgments.by_entity()) {
    for (const auto& [doc_id, raw_label] : docs) {
      out += entity_id;
      out += '\t';
      out += doc_id;
      out += '\t';
      out += raw_label;
      out += '\n';
    }
  }
  write_file(path, out);
}

std::string report_to_json(const ScoreReport& report) {
  nlohmann::ordered_json j;
  j["f_macro"] = report.f_macro;
  j["best_theta"] = report.best_theta;
  j["su_max"] = report.su_max;
  j["su_at_theta"] = report.su_at_theta;
  j["mean_p"] = report.mean_p;
  j["mean_r"] = report.mean_r;
  j["mean_f"] = report.mean_f;
  j["mean_su"] = report.mean_su;
  j["entity_count"] = report.entity_count;
  j["judged_pairs"] = report.judged_pairs;
  j["zero_vital_entities"] = report.zero_vital_entities;
  j["conventions"] =
      "zero-vital entities score R=1 at every threshold and are excluded from SU averages; "
      "judged documents absent from the run are scored at confidence 0";
  nlohmann::ordered_json curve = nlohmann::ordered_json::array();
  for (const auto& point : report.curve) {
    nlohmann::ordered_json pj;
    pj["theta"] = point.theta;
    pj["avg_p"] = point.avg_p;
    pj["avg_r"] = point.avg_r;
    pj["h"] = point.h;
    pj["avg_su"] = point.avg_su;
    curve.push_back(std::move(pj));
  }
  j["curve"] = std::move(curve);
  nlohmann::ordered_json entities = nlohmann::ordered_json::array();
  for (const auto& score : report.per_entity) {
    nlohmann::ordered_json ej;
    ej["entity_id"] = score.entity_id;
    ej["p"] = score.p;
    ej["r"] = score.r;
    ej["f"] = score.f;
    ej["su"] = score.su;
    entities.push_back(std::move(ej));
  }
  j["per_entity"] = std::move(entities);
  if (report.segments) {
    nlohmann::ordered_json sj;
    for (const auto& [kind, stats] : *report.segments) {
      nlohmann::ordered_json gj;
      gj["entities"] = stats.entities;
      gj["mean_p"] = stats.mean_p;
      gj["mean_r"] = stats.mean_r;
      gj["mean_f"] = stats.mean_f;
      gj["mean_su"] = stats.mean_su;
      sj[kind] = std::move(gj);
    }
    j["segments"] = std::move(sj);
  }
  j["warnings"] = report.warnings;
  return j.dump(2) + "\n";
}

namespace {

std::string fixed4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

void append_row(std::string& out, const std::vector<std::string>& cells,
                const std::vector<std::size_t>& widths) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += "  ";
    out += cells[i];
    if (i + 1 < cells.size())
      out.append(widths[i] > cells[i].size() ? widths[i] - cells[i].size() : 0, ' ');
  }
  out += '\n';
}

}  // namespace

std::string report_to_text(const ScoreReport& report) {
  std::string out;
  out += "f_macro=" + fixed4(report.f_macro) + "  best_theta=" + std::to_string(report.best_theta) +
         "  su_max=" + fixed4(report.su_max) + "  su_at_theta=" + fixed4(report.su_at_theta) + "\n";
  out += "mean_p=" + fixed4(report.mean_p) + "  mean_r=" + fixed4(report.mean_r) +
         "  mean_f=" + fixed4(report.mean_f) + "  mean_su=" + fixed4(report.mean_su) + "\n";
  out += "entities=" + std::to_string(report.entity_count) +
         "  judged_pairs=" + std::to_string(report.judged_pairs) +
         "  zero_vital=" + std::to_string(report.zero_vital_entities) + "\n";
  out += "note: zero-vital entities score R=1 and are excluded from SU averages;\n";
  out += "      judged documents absent from the run count as confidence 0\n";

  if (report.segments) {
    out += "\nsegment    n     P       R       F       SU\n";
    for (const auto& [kind, stats] : *report.segments) {
      std::vector<std::string> cells = {kind, std::to_string(stats.entities),
                                        fixed4(stats.mean_p), fixed4(stats.mean_r),
                                        fixed4(stats.mean_f), fixed4(stats.mean_su)};
      append_row(out, cells, {9, 4, 6, 6, 6, 6});
    }
  }

  out += "\nentity";
  std::size_t id_width = 6;
  for (const auto& s : report.per_entity) id_width = std::max(id_width, s.entity_id.size());
  out.append(id_width - 6, ' ');
  out += "  P       R       F       SU\n";
  for (const auto& s : report.per_entity) {
    std::vector<std::string> cells = {s.entity_id, fixed4(s.p), fixed4(s.r), fixed4(s.f),
                                      fixed4(s.su)};
    append_row(out, cells, {id_width, 6, 6, 6, 6});
  }
  for (const auto& w : report.warnings) out += "warning: " + w + "\n";
  return out;
}

}  // namespace vitalfilter
