#include "crystal/verify.hpp"

#include <random>
#include <stdexcept>

#include "crystal/oracles.hpp"
#include "crystal/serialize.hpp"
#include "crystal/tensor.hpp"

namespace crystal {

void SuiteResult::fail(std::string why) {
  ++failed;
  if (failures.size() < 20) failures.push_back(std::move(why));
}

void SuiteResult::absorb(const CheckReport& report, const std::string& context) {
  skipped += report.skipped;
  if (report.ok()) {
    pass();
    return;
  }
  const Violation& v = report.violations.front();
  fail(context + ": " + std::to_string(report.violations.size()) + " violation(s), first (" + v.rule + ") at node " +
       std::to_string(v.node) + ", k=" + std::to_string(v.k + 1) + ": " + v.detail);
}

namespace {

std::string show(const std::vector<Int>& lambda) { return "(" + format_ints(lambda) + ")"; }

std::vector<std::vector<Int>> weights_or_default(const RootDatum& rd, const VerifyParams& params) {
  if (!params.weights.empty()) {
    for (const auto& w : params.weights)
      if (w.size() != rd.rank()) throw std::invalid_argument("weight " + show(w) + " has the wrong length");
    return params.weights;
  }
  return dominant_weights(rd.rank(), params.max_entry);
}

// Tensor graphs of neighbouring weights, skipped when the product is large.
constexpr std::size_t kTensorLimit = 50'000;

template <class Check>
void check_graphs(const RootDatum& rd, const VerifyParams& params, SuiteResult& result, Check check) {
  const auto weights = weights_or_default(rd, params);
  std::vector<CrystalGraph> graphs;
  for (const auto& w : weights) {
    graphs.push_back(model_crystal(rd, w, params.depth, params.generate));
    result.absorb(check(graphs.back()), "B" + show(w));
  }
  for (std::size_t i = 0; i + 1 < graphs.size(); ++i) {
    if (graphs[i].has_frontier() || graphs[i + 1].has_frontier() ||
        graphs[i].size() * graphs[i + 1].size() > kTensorLimit) {
      ++result.skipped;
      continue;
    }
    const auto t = tensor_graph(rd, {&graphs[i], &graphs[i + 1]}, params.generate);
    result.absorb(check(t), "B" + show(weights[i]) + " (x) B" + show(weights[i + 1]));
  }
  if (graphs.size() >= 3 && !graphs[0].has_frontier() && !graphs[1].has_frontier() && !graphs[2].has_frontier() &&
      graphs[0].size() * graphs[1].size() * graphs[2].size() <= kTensorLimit) {
    const auto t = tensor_graph(rd, {&graphs[0], &graphs[1], &graphs[2]}, params.generate);
    result.absorb(check(t), "triple tensor");
  }
}

}  // namespace

std::vector<std::vector<Int>> dominant_weights(std::size_t rank, Int max_entry) {
  std::vector<std::vector<Int>> out;
  std::vector<Int> current(rank, 0);
  while (true) {
    out.push_back(current);
    std::size_t pos = rank;
    while (pos > 0) {
      --pos;
      if (++current[pos] <= max_entry) break;
      current[pos] = 0;
      if (pos == 0) return out;
    }
    if (rank == 0) return out;
  }
}

EmbeddingReport check_embedding(const CrystalGraph& model_graph, const GenerateOptions& options) {
  const RootDatum& rd = model_graph.root_datum();
  EmbeddingReport report;
  auto mismatch = [&report](std::string what) {
    ++report.mismatches;
    if (report.details.size() < 20) report.details.push_back(std::move(what));
  };

  // Element by element: each map evaluated on the model and through psi.
  std::optional<SlotWindow> global;
  for (NodeId id = 0; id < model_graph.size(); ++id) {
    const auto& x = model_graph.nodes[id].element.as<ModelElement>();
    global = global ? window_union(*global, embedding_window(x)) : embedding_window(x);
    for (std::size_t k = 0; k < rd.rank(); ++k) {
      ++report.compared;
      const auto up = model_raise(rd, x, k);
      const auto down = model_lower(rd, x, k);
      SlotWindow window = embedding_window(x);
      if (up) window = window_union(window, embedding_window(*up));
      if (down) window = window_union(window, embedding_window(*down));
      const TensorElement image = embed_psi(x, window);
      const std::string where = "node " + std::to_string(id) + " k=" + std::to_string(k + 1);

      if (tensor_wt(rd, image) != model_wt(x)) mismatch(where + ": wt");
      if (tensor_eps(rd, image, k) != ExtInt(model_eps(rd, x, k))) mismatch(where + ": eps");
      if (tensor_phi(rd, image, k) != ExtInt(model_phi(rd, x, k))) mismatch(where + ": phi");

      const auto t_up = tensor_raise(rd, image, k);
      if (t_up.has_value() != up.has_value() || (up && !(*t_up == embed_psi(*up, window)))) mismatch(where + ": e~");
      const auto t_down = tensor_lower(rd, image, k);
      if (t_down.has_value() != down.has_value() || (down && !(*t_down == embed_psi(*down, window))))
        mismatch(where + ": f~");
    }
  }
  if (!global) return report;

  // Graph level: explore the image of the generators in the capped tensor
  // crystal to the same depth and check the induced map is a strict embedding.
  std::vector<Element> images;
  for (NodeId gen : model_graph.generators)
    images.emplace_back(embed_psi(model_graph.nodes[gen].element.as<ModelElement>(), *global));
  const CrystalGraph tensor_side = generate(rd, images, model_graph.depth_bound, options);
  const SlotWindow window = *global;
  const NodeMap map = node_map_from(model_graph, tensor_side, [&window](const Element& e) -> std::optional<Element> {
    return Element(embed_psi(e.as<ModelElement>(), window));
  });
  report.strict = check_strict_morphism(map, model_graph, tensor_side);
  report.injective = is_injective(map);
  return report;
}

std::size_t telescoping_failures(const CrystalGraph& model_graph) {
  const RootDatum& rd = model_graph.root_datum();
  std::size_t failures = 0;
  for (const Node& node : model_graph.nodes) {
    const auto& x = node.element.as<ModelElement>();
    const SlotWindow win = evaluation_window(x);
    for (std::size_t k = 0; k < rd.rank(); ++k) {
      Int sum = 0;
      for (Int p = win.lo; p <= win.hi; ++p) sum += rank_complex(rd, x, k, p);
      if (sum != rd.pairing(k, node.wt)) ++failures;
    }
  }
  return failures;
}

SuiteResult verify_axioms(const RootDatum& rd, const VerifyParams& params) {
  SuiteResult result;
  result.name = "axioms";
  check_graphs(rd, params, result, [](const CrystalGraph& g) { return check_axioms(g); });
  return result;
}

SuiteResult verify_normal(const RootDatum& rd, const VerifyParams& params) {
  SuiteResult result;
  result.name = "normal";
  check_graphs(rd, params, result, [](const CrystalGraph& g) { return check_normal(g); });
  return result;
}

SuiteResult verify_closed(const RootDatum& rd, const VerifyParams& params) {
  SuiteResult result;
  result.name = "closed";
  const auto pool = weights_or_default(rd, params);
  std::mt19937_64 rng(params.seed);
  for (std::size_t i = 0; i < params.pairs; ++i) {
    const auto& lambda = pool[rng() % pool.size()];
    const auto& mu = pool[rng() % pool.size()];
    std::vector<Int> sum(rd.rank());
    for (std::size_t k = 0; k < rd.rank(); ++k) sum[k] = lambda[k] + mu[k];

    const Element top = tensor({Element(model_highest(lambda)), Element(model_highest(mu))});
    const CrystalGraph component = generate(rd, {top}, params.depth, params.generate);
    const CrystalGraph target = model_crystal(rd, sum, params.depth, params.generate);
    const auto iso = is_isomorphic(component, target);
    const std::string label = "b" + show(lambda) + " (x) b" + show(mu);
    if (iso.isomorphic) {
      result.pass();
      if (component.has_frontier()) ++result.skipped;
    } else {
      result.fail(label + ": " + iso.reason);
    }
  }
  return result;
}

SuiteResult verify_embedding(const RootDatum& rd, const VerifyParams& params) {
  SuiteResult result;
  result.name = "embedding";
  for (const auto& w : weights_or_default(rd, params)) {
    const CrystalGraph g = model_crystal(rd, w, params.depth, params.generate);
    const auto report = check_embedding(g, params.generate);
    if (report.ok())
      result.pass();
    else
      result.fail("B" + show(w) + ": " + std::to_string(report.mismatches) + " mismatch(es)" +
                  (report.details.empty() ? std::string() : ", first " + report.details.front()) +
                  (report.strict.ok() ? "" : ", strict-morphism violations") + (report.injective ? "" : ", not injective"));
    result.skipped += report.strict.skipped;
    if (const auto bad = telescoping_failures(g)) result.fail("B" + show(w) + ": telescoping failed " + std::to_string(bad) + " time(s)");
  }
  return result;
}

SuiteResult verify_oracle(const RootDatum& rd, const VerifyParams& params) {
  SuiteResult result;
  result.name = "oracle";
  if (!finite_type_check(rd)) throw std::invalid_argument("oracle suite needs a finite-type root datum");
  for (const auto& w : weights_or_default(rd, params)) {
    const Weight lambda = rd.weight_from_lambda(w);
    const CrystalGraph g = model_crystal(rd, w, params.depth, params.generate);
    if (g.has_frontier()) {
      result.fail("B" + show(w) + ": depth " + std::to_string(params.depth) + " too small");
      continue;
    }
    const Int dim = weyl_dim(rd, lambda);
    if (static_cast<Int>(g.size()) != dim)
      result.fail("B" + show(w) + ": " + std::to_string(g.size()) + " elements, weyl_dim " + std::to_string(dim));
    else
      result.pass();
    if (character(g) != freudenthal_multiplicities(rd, lambda))
      result.fail("B" + show(w) + ": character differs from Freudenthal");
    else
      result.pass();
  }
  return result;
}

SuiteResult run_suite(const std::string& suite, const RootDatum& rd, const VerifyParams& params) {
  if (suite == "axioms") return verify_axioms(rd, params);
  if (suite == "normal") return verify_normal(rd, params);
  if (suite == "closed") return verify_closed(rd, params);
  if (suite == "embedding") return verify_embedding(rd, params);
  if (suite == "oracle") return verify_oracle(rd, params);
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

}  // namespace crystal
