#pragma once

#include <map>
#include <string>
#include <vector>

#include "embk/embedding.hpp"
#include "embk/pairing.hpp"
#include "json.hpp"

namespace embk {

struct MetricReport {
  std::string name;
  double value = 0.0;
  std::size_t n = 0;
  std::map<std::string, double> aux;

  nlohmann::json to_json() const;
};

/// Mean 1-D contrastive loss (first pair label) over `pairs`, computed on
/// dims [first_dim, first_dim + dims); dims = 0 means all.
MetricReport common_contrastive_metric(const Embedding& emb, const std::vector<PairRecord>& pairs,
                                       double margin = 1.0, std::size_t first_dim = 0,
                                       std::size_t dims = 0);

/// Two-sided Welch test. value = t; aux: df, p, reject, degenerate.
MetricReport welch_t_test(const std::vector<double>& a, const std::vector<double>& b,
                          double alpha = 0.05);

/// Rank correlation with average ranks for ties; 0 when either side is
/// constant.
double spearman(const std::vector<double>& x, const std::vector<double>& y);

/// Spearman rho between intensity and coordinate inside each group, averaged
/// over groups of size >= 3. value = |mean rho|; aux: mean_rho, mean_abs_rho,
/// majority_sign, groups.
MetricReport grouped_monotonicity(const std::vector<double>& coordinate,
                                  const std::vector<double>& intensity,
                                  const std::vector<std::size_t>& group);

/// Groups by source_id, intensity from the distortion.
MetricReport distortion_monotonicity(const Embedding& emb, std::size_t axis_dim);

/// NORB-style: groups by (category, instance, azimuth, lighting), intensity
/// is the elevation index.
MetricReport elevation_monotonicity(const Embedding& emb, std::size_t axis_dim);

/// Fisher-Lee circular correlation between atan2 of the centered points and
/// the given angles (radians). value = |rho|; aux: rho.
MetricReport cyclic_structure_score(const std::vector<double>& xy,
                                    const std::vector<double>& true_angles);

/// Uses dims [first_dim, first_dim + 2) and the NORB azimuth index.
MetricReport cyclic_structure_score(const Embedding& emb, std::size_t first_dim,
                                    int n_azimuth = kNorbAzimuths);

/// Mean within-pose cross-lighting distance over mean cross-pose distance.
MetricReport lighting_invariance_ratio(const Embedding& emb);

/// Fraction of points whose k nearest neighbors hold a strict majority of
/// their own class.
MetricReport knn_purity(const std::vector<double>& rows, std::size_t dims,
                        const std::vector<int>& labels, std::size_t k = 10);
MetricReport knn_purity(const Embedding& emb, std::size_t k = 10);

/// Best accuracy of a linear two-class split of 2-D points. Exact (every
/// projection order is visited) for n <= exact_limit, otherwise a sweep of
/// `angles` directions.
MetricReport linear_probe_2d(const std::vector<double>& xy, const std::vector<int>& labels,
                             std::size_t exact_limit = 200, std::size_t angles = 7200);

}  // namespace embk
