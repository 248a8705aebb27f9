#include "fewbranch/potential.hpp"

namespace fewbranch {

std::string Potential::to_string() const {
  return "(" + std::to_string(branch_flag) + "," + std::to_string(leaf_count) + "," + std::to_string(shape_rank) +
         "," + std::to_string(measure[0]) + "," + std::to_string(measure[1]) + "," + std::to_string(measure[2]) + ")";
}

int shape_rank(Shape shape) {
  switch (shape) {
    case Shape::AtMostTwoBranch: return 0;
    case Shape::S1: return 1;
    case Shape::S2: return 2;
    case Shape::S3: return 3;
    case Shape::S4: return 4;
    case Shape::Other: return 5;
  }
  return 5;
}

Potential potential_of(const ShapeConfig& cfg, const SpanningTree& t) {
  Potential p;
  p.leaf_count = static_cast<int>(cfg.leaves.size());
  if (cfg.shape == Shape::AtMostTwoBranch) return p;
  p.branch_flag = 1;
  p.shape_rank = shape_rank(cfg.shape);
  switch (cfg.shape) {
    case Shape::S1:
    case Shape::S2:
      p.measure = {cfg.r1, cfg.r2, 0};
      break;
    case Shape::S3:
      p.measure = {cfg.r1, cfg.r2, cfg.r3};
      break;
    case Shape::S4:
      p.measure = {static_cast<int>(cfg.p1.size() + cfg.p2.size() + cfg.p3.size()), 0, 0};
      break;
    default: {
      int spread = 0;
      const auto& b = cfg.branch_vertices;
      for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j) spread += t.distance(b[i], b[j]);
      p.measure = {spread, 0, 0};
      break;
    }
  }
  return p;
}

Potential potential(const Graph& g, const SpanningTree& t) { return potential_of(classify_shape(g, t), t); }

}  // namespace fewbranch
