#include "anclab/poset.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "anclab/generators.hpp"

namespace anclab {

bool Poset::reflexive() const {
  for (NodeId x = 1; x <= m_; ++x) {
    if (!leq(x, x)) return false;
  }
  return true;
}

bool Poset::antisymmetric() const {
  for (NodeId x = 1; x <= m_; ++x) {
    for (NodeId y = x + 1; y <= m_; ++y) {
      if (leq(x, y) && leq(y, x)) return false;
    }
  }
  return true;
}

bool Poset::transitive() const {
  for (NodeId x = 1; x <= m_; ++x) {
    for (NodeId y = 1; y <= m_; ++y) {
      if (!leq(x, y)) continue;
      for (NodeId z = 1; z <= m_; ++z) {
        if (leq(y, z) && !leq(x, z)) return false;
      }
    }
  }
  return true;
}

Poset intersect_forests(const TreeExtensionSet& set) {
  if (set.forests.empty()) throw std::invalid_argument("empty tree extension set");
  const std::size_t m = set.ground_size();
  Poset out(m);
  std::vector<AncestorIndex> index;
  for (const auto& f : set.forests) {
    if (f.size() != m) throw std::invalid_argument("forests have different ground sets");
    index.emplace_back(f);
  }
  for (NodeId x = 1; x <= m; ++x) {
    for (NodeId y = 1; y <= m; ++y) {
      out.set_leq(x, y,
                  std::all_of(index.begin(), index.end(), [&](const AncestorIndex& i) { return i.is_ancestor(x, y); }));
    }
  }
  return out;
}

TreeExtensionSet random_extension_set(std::size_t m, std::size_t k, std::uint64_t seed) {
  if (m == 0 || k == 0) throw std::invalid_argument("m and k must be positive");
  std::mt19937_64 rng(seed);
  TreeExtensionSet out;
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t trees = 1 + uniform_below(rng, std::min<std::size_t>(3, m));
    const RootedForest base = generate(ShapeKind::kRandomRecursive, ShapeParams{.size = m, .trees = trees}, rng());
    std::vector<NodeId> perm(m + 1);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t j = m; j > 1; --j) std::swap(perm[j], perm[1 + uniform_below(rng, j)]);
    std::vector<NodeId> parents(m, kNoParent);
    for (NodeId v = 1; v <= m; ++v) parents[perm[v] - 1] = perm[base.parent(v)];
    out.forests.emplace_back(std::move(parents));
  }
  return out;
}

PosetEmbedding embed_poset(const TreeExtensionSet& set, std::uint64_t n) {
  const std::size_t m = set.ground_size();
  if (m > n) throw std::invalid_argument("ground set larger than n");
  PosetEmbedding out;
  out.n = n;
  out.tuples.assign(m + 1, {});
  for (const auto& f : set.forests) {
    const OptimalLabeling labeling = label_forest_optimal(f, n);
    for (NodeId x = 1; x <= m; ++x) out.tuples[x].push_back(labeling.labels[x]);
  }
  return out;
}

bool poset_leq(const OptimalDecoder& decoder, const LabelTuple& t1, const LabelTuple& t2) {
  if (t1.size() != t2.size()) throw std::invalid_argument("label tuples differ in arity");
  for (std::size_t i = 0; i < t1.size(); ++i) {
    if (!decoder.is_ancestor_consistent(t1[i], t2[i])) return false;
  }
  return true;
}

bool poset_leq(const LabelTuple& t1, const LabelTuple& t2, std::uint64_t n) {
  return poset_leq(OptimalDecoder(n), t1, t2);
}

EmbeddingCheck verify_embedding(const Poset& poset, const PosetEmbedding& embedding) {
  const std::size_t m = poset.size();
  if (embedding.tuples.size() != m + 1) return {false, 0, 0, "embedding does not cover the ground set"};
  const OptimalDecoder decoder(embedding.n);
  std::vector<std::vector<DecodedOptimal>> decoded(m + 1);
  for (NodeId x = 1; x <= m; ++x) {
    for (const auto& label : embedding.tuples[x]) {
      try {
        decoded[x].push_back(decoder.decode(label));
      } catch (const LabelError&) {
        return {false, x, x, "malformed label"};
      }
    }
  }
  std::set<LabelTuple, bool (*)(const LabelTuple&, const LabelTuple&)> seen(
      [](const LabelTuple& a, const LabelTuple& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                            [](const BitString& p, const BitString& q) {
                                              return p.size() != q.size() ? p.size() < q.size() : p.value() < q.value();
                                            });
      });
  for (NodeId x = 1; x <= m; ++x) {
    if (!seen.insert(embedding.tuples[x]).second) return {false, x, x, "two elements share a label tuple"};
  }
  for (NodeId a = 1; a <= m; ++a) {
    for (NodeId b = 1; b <= m; ++b) {
      const auto& ta = embedding.tuples[a];
      const auto& tb = embedding.tuples[b];
      if (ta.size() != tb.size()) return {false, a, b, "label tuples differ in arity"};
      bool below = true;
      for (std::size_t i = 0; i < ta.size() && below; ++i) {
        below = ta[i] == tb[i] || OptimalDecoder::consistent(decoded[a][i], decoded[b][i]);
      }
      if (below != poset.leq(a, b)) {
        return {false, a, b,
                below ? "labels comparable but elements are not" : "elements comparable but labels are not"};
      }
    }
  }
  return {};
}

boost::multiprecision::cpp_int universal_domain_size(std::uint64_t n, std::uint64_t k) {
  if (n == 0 || k == 0) throw std::invalid_argument("n and k must be positive");
  const unsigned bits = OptimalDecoder(n).label_length();
  boost::multiprecision::cpp_int out = 1;
  out <<= static_cast<unsigned>(bits * k);
  return out;
}

}  // namespace anclab
