#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "crystal/explorer.hpp"
#include "crystal/quiver_model.hpp"

// Invariant suites shared by the CLI `verify` command and the test suites.

namespace crystal {

struct SuiteResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  std::vector<std::string> failures;

  bool ok() const { return failed == 0; }
  void pass() { ++passed; }
  void fail(std::string why);
  void absorb(const CheckReport& report, const std::string& context);
};

/// Compares the model structure maps on every node of a model graph with
/// the tensor-product rule evaluated on embed_psi images. Each (node, k)
/// counts once; any disagreement counts as failed.
struct EmbeddingReport {
  std::size_t compared = 0;
  std::size_t mismatches = 0;
  std::vector<std::string> details;
  CheckReport strict;     // graph-level check of the induced node map
  bool injective = true;
  bool ok() const { return mismatches == 0 && strict.ok() && injective; }
};

EmbeddingReport check_embedding(const CrystalGraph& model_graph, const GenerateOptions& options = {});

/// Sum over slots of rank_complex equals <h_k, wt> for every model node and
/// every k; returns the number of failures.
std::size_t telescoping_failures(const CrystalGraph& model_graph);

/// Dominant weights with every Lambda-coordinate in [0, max_entry].
std::vector<std::vector<Int>> dominant_weights(std::size_t rank, Int max_entry);

struct VerifyParams {
  std::vector<std::vector<Int>> weights;  // empty: all dominant up to max_entry
  Int max_entry = 1;
  std::size_t depth = 50;
  std::size_t pairs = 20;
  std::uint64_t seed = 0;
  GenerateOptions generate;
};

SuiteResult verify_axioms(const RootDatum& rd, const VerifyParams& params);
SuiteResult verify_normal(const RootDatum& rd, const VerifyParams& params);
/// Component of b_lambda (x) b_mu against B(lambda + mu) for random pairs.
SuiteResult verify_closed(const RootDatum& rd, const VerifyParams& params);
SuiteResult verify_embedding(const RootDatum& rd, const VerifyParams& params);
/// #B(lambda) = weyl_dim and character = Freudenthal; finite type only.
SuiteResult verify_oracle(const RootDatum& rd, const VerifyParams& params);

/// Dispatch by name: axioms, normal, closed, embedding, oracle. Throws
/// std::invalid_argument for an unknown suite.
SuiteResult run_suite(const std::string& suite, const RootDatum& rd, const VerifyParams& params);

}  // namespace crystal
