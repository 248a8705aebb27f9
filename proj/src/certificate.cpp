#include "fewbranch/certificate.hpp"

#include <algorithm>
#include <iterator>

namespace fewbranch {

std::vector<std::string> CountingCertificate::violated_regions() const {
  std::vector<std::string> out;
  for (const auto& r : regions)
    if (r.violated()) out.push_back(r.name);
  return out;
}

namespace {

class RegionBuilder {
 public:
  RegionBuilder(const Graph& g, const VertexSet& special) : g_(g), special_(special) {}

  void add(std::string name, std::vector<Vertex> vertices, long slack) {
    RegionBound r;
    r.name = std::move(name);
    r.vertices = make_vertex_set(std::move(vertices));
    r.capacity = std::max(0L, static_cast<long>(r.vertices.size()) + slack);
    for (Vertex u : special_)
      for (Vertex x : r.vertices)
        if (g_.has_edge(u, x)) ++r.count;
    regions.push_back(std::move(r));
  }

  std::vector<RegionBound> regions;

 private:
  const Graph& g_;
  const VertexSet& special_;
};

std::vector<Vertex> join(std::initializer_list<const std::vector<Vertex>*> parts) {
  std::vector<Vertex> out;
  for (const auto* p : parts) out.insert(out.end(), p->begin(), p->end());
  return out;
}

std::string cell(int i) { return "B" + std::to_string(i + 1); }

}  // namespace

CountingCertificate counting_certificate(const Graph& g, const ShapeConfig& cfg, CertificateVariant variant) {
  CountingCertificate c;
  c.shape = cfg.shape;
  if (cfg.shape == Shape::AtMostTwoBranch || cfg.shape == Shape::Other) return c;
  const bool six = variant == CertificateVariant::SixSet && cfg.shape == Shape::S1;

  c.applicable = true;
  c.special_set = cfg.special_set;
  if (six) c.special_set.erase(std::find(c.special_set.begin(), c.special_set.end(), cfg.s));
  c.sigma_order = static_cast<int>(c.special_set.size());
  c.special_set_independent = is_independent(g, c.special_set);

  const auto& b = cfg.branch_sets;
  auto bv = [&](int i) -> const std::vector<Vertex>& { return b[static_cast<std::size_t>(i)].vertices; };
  RegionBuilder rb(g, c.special_set);

  switch (cfg.shape) {
    case Shape::S1:
      if (six) {
        for (int i : {0, 1, 4}) rb.add(cell(i), bv(i), -1);
        for (int i : {2, 3}) rb.add(cell(i), bv(i), 0);
        rb.add("{s,w}", {cfg.s, cfg.w}, -2);
      } else {
        for (int i : {0, 1, 2, 3}) rb.add(cell(i), bv(i), 0);
        rb.add(cell(4), bv(4), -1);
        rb.add("{w}", {cfg.w}, 0);
        rb.add("{s}", {cfg.s}, -1);
      }
      rb.add("P1", cfg.p1, 0);
      rb.add("P2", cfg.p2, 0);
      rb.add("{t}", {cfg.t}, -1);
      break;
    case Shape::S2:
      rb.add("B1+B2+B3+B6", join({&bv(0), &bv(1), &bv(2), &bv(5)}), -3);
      for (int i : {3, 4}) rb.add(cell(i), bv(i), 0);
      rb.add("{s}", {cfg.s}, -1);
      rb.add("{w}", {cfg.w}, 0);
      rb.add("P1", cfg.p1, 0);
      rb.add("P2", cfg.p2, 2);
      rb.add("{t}", {cfg.t}, -1);
      break;
    case Shape::S3:
      for (int i : {0, 1, 4, 5}) rb.add(cell(i), bv(i), -1);
      for (int i : {2, 3}) rb.add(cell(i), bv(i), 0);
      if (cfg.collapsed) {
        rb.add("{s,w}", {cfg.s, cfg.w}, 0);
        rb.add("P1+P2", join({&cfg.p1, &cfg.p2}), 0);
      } else {
        rb.add("{s,w,z}", {cfg.s, cfg.w, cfg.z}, 1);
        rb.add("Q1", cfg.q1, 0);
        rb.add("Q2", cfg.q2, 0);
        rb.add("P2", cfg.p2, 1);
      }
      rb.add("{t}", {cfg.t}, -1);
      break;
    case Shape::S4:
      for (int i = 0; i < 6; ++i) rb.add(cell(i), bv(i), -1);
      rb.add("P1+P2+P3", join({&cfg.p1, &cfg.p2, &cfg.p3}), 0);
      rb.add("{s,t,w}", {cfg.s, cfg.t, cfg.w}, 0);
      rb.add("{z}", {cfg.z}, -1);
      break;
    default:
      break;
  }

  c.regions = std::move(rb.regions);
  c.degree_sum = degree_sum(g, c.special_set);
  for (const auto& r : c.regions) c.capacity_total += r.capacity;
  c.contradiction_margin = c.capacity_total - c.degree_sum;
  c.sigma_bound = sigma_k(g, c.sigma_order);
  return c;
}

}  // namespace fewbranch
