#pragma once

#include <string>
#include <vector>

#include "fewbranch/graph.hpp"
#include "fewbranch/shape.hpp"
#include "fewbranch/structure.hpp"

namespace fewbranch {

/// One cell of the counting partition: how many edges the independent
/// candidates send into `vertices`, against the most a minimal tree allows.
struct RegionBound {
  std::string name;
  VertexSet vertices;
  long count = 0;     ///< sum over u in I of |N(u) ∩ vertices|
  long capacity = 0;

  bool violated() const { return count > capacity; }
};

/// Which candidate set to count. SixSet drops s from the S1 set, giving
/// I = {u1..u5, t}; it applies to S1 only.
enum class CertificateVariant { SevenSet, SixSet };

/// Degree count of the special set I of a classified tree, split by region.
///
/// The regions partition V, so degree_sum always equals the sum of the
/// region counts. When every region respects its capacity, deg(I) is at most
/// capacity_total, and comparing that with sigma_|I| shows whether the
/// degree-sum hypothesis could hold at this tree.
struct CountingCertificate {
  Shape shape = Shape::Other;
  bool applicable = false;  ///< false for AtMostTwoBranch and Other
  int sigma_order = 0;      ///< |I|
  VertexSet special_set;
  bool special_set_independent = false;
  std::vector<RegionBound> regions;
  long degree_sum = 0;
  long capacity_total = 0;
  DegreeSumBound sigma_bound = DegreeSumBound::unbounded();
  long contradiction_margin = 0;  ///< capacity_total - degree_sum

  std::vector<std::string> violated_regions() const;
};

CountingCertificate counting_certificate(const Graph& g, const ShapeConfig& cfg,
                                         CertificateVariant variant = CertificateVariant::SevenSet);

}  // namespace fewbranch
