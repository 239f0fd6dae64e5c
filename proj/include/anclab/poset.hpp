#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "anclab/bits.hpp"
#include "anclab/forest.hpp"
#include "anclab/optimal_scheme.hpp"

namespace anclab {

/// Relation matrix over the ground set [1, m]. x <= y means x is below y; for tree
/// posets the ancestor is the smaller element.
class Poset {
 public:
  explicit Poset(std::size_t m) : m_(m), leq_((m + 1) * (m + 1), 0) {}

  std::size_t size() const { return m_; }
  bool leq(NodeId x, NodeId y) const { return leq_[x * (m_ + 1) + y] != 0; }
  void set_leq(NodeId x, NodeId y, bool value) { leq_[x * (m_ + 1) + y] = value; }

  bool reflexive() const;
  bool antisymmetric() const;
  bool transitive() const;
  bool is_partial_order() const { return reflexive() && antisymmetric() && transitive(); }

 private:
  std::size_t m_;
  std::vector<std::uint8_t> leq_;
};

/// k forests over one ground set; their intersection is a poset of tree-dimension <= k.
struct TreeExtensionSet {
  std::vector<RootedForest> forests;
  std::size_t ground_size() const { return forests.empty() ? 0 : forests.front().size(); }
};

/// x <= y iff x is an ancestor of y in every forest. Throws std::invalid_argument on
/// mismatched ground sets or an empty set.
Poset intersect_forests(const TreeExtensionSet& set);

/// k random recursive forests on [1, m] with randomly permuted ids and 1 to 3 roots each.
TreeExtensionSet random_extension_set(std::size_t m, std::size_t k, std::uint64_t seed);

using LabelTuple = std::vector<BitString>;

struct PosetEmbedding {
  std::uint64_t n = 0;
  std::vector<LabelTuple> tuples;  // slot 0 unused
};

/// x -> (L_1(x), ..., L_k(x)) with L_i the optimal labels of forest i for parameter n.
PosetEmbedding embed_poset(const TreeExtensionSet& set, std::uint64_t n);

/// Coordinatewise consistent decoder. Throws std::invalid_argument on arity mismatch.
bool poset_leq(const OptimalDecoder& decoder, const LabelTuple& t1, const LabelTuple& t2);
bool poset_leq(const LabelTuple& t1, const LabelTuple& t2, std::uint64_t n);

struct EmbeddingCheck {
  bool ok = true;
  NodeId a = 0;
  NodeId b = 0;
  std::string reason;
};

/// Checks a <=_P b <=> poset_leq(emb(a), emb(b)) for all pairs, and injectivity.
EmbeddingCheck verify_embedding(const Poset& poset, const PosetEmbedding& embedding);

/// 2^(k * l(n)) where l(n) is the optimal label length for n.
boost::multiprecision::cpp_int universal_domain_size(std::uint64_t n, std::uint64_t k);

}  // namespace anclab
