#ifndef SHEAFFORGE_POSETS_HPP
#define SHEAFFORGE_POSETS_HPP

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "sheafforge/fields.hpp"

namespace sheafforge {

class GradedPoset;
using PosetPtr = std::shared_ptr<const GradedPoset>;

// Finite graded poset given by its Hasse diagram. Every cover raises the
// grading by exactly one. All derived index sets (order relation, maximal
// elements, the sets of maximal elements above each element, level sets) are
// computed at construction, so shared reads need no locking.
class GradedPoset {
 public:
  static PosetPtr from_hasse(std::vector<std::string> elements,
                             const std::vector<std::pair<std::string, std::string>>& covers,
                             const std::map<std::string, int>& grading);

  size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(size_t i) const { return labels_[i]; }
  size_t index(const std::string& label) const;
  bool has_label(const std::string& label) const { return index_.count(label) != 0; }
  int grading(size_t i) const { return grading_[i]; }
  int min_grading() const { return min_grading_; }
  int max_grading() const { return max_grading_; }

  bool leq(size_t a, size_t b) const { return leq_[a][b]; }
  const std::vector<size_t>& covers_above(size_t i) const { return up_[i]; }
  const std::vector<size_t>& covers_below(size_t i) const { return down_[i]; }

  // Maximal elements in insertion order; this fixes the canonical coordinate
  // order of every code built on the poset.
  const std::vector<size_t>& maximal() const { return maximal_; }
  bool is_maximal(size_t i) const { return up_[i].empty(); }
  // X_sigma: maximal elements above sigma, in canonical order.
  const std::vector<size_t>& max_above(size_t i) const { return max_above_[i]; }
  std::vector<std::string> max_above_labels(size_t i) const;
  // X(g): elements at grading g.
  std::vector<size_t> level(int g) const;
  // X_{>=sigma}.
  std::vector<size_t> up_set(size_t i) const;

  const std::vector<std::pair<std::string, std::string>>& cover_pairs() const { return cover_pairs_; }
  bool same_structure(const GradedPoset& other) const;

 private:
  GradedPoset() = default;
  std::vector<std::string> labels_;
  std::map<std::string, size_t> index_;
  std::vector<int> grading_;
  std::vector<std::vector<size_t>> up_, down_;
  std::vector<std::vector<bool>> leq_;
  std::vector<size_t> maximal_;
  std::vector<std::vector<size_t>> max_above_;
  std::vector<std::pair<std::string, std::string>> cover_pairs_;
  int min_grading_ = 0, max_grading_ = 0;
};

// Upward-closed subset of a poset.
struct OpenSet {
  PosetPtr poset;
  std::vector<size_t> members;  // sorted element indices

  OpenSet() = default;
  OpenSet(PosetPtr p, std::vector<size_t> m, bool validate = true);
  bool contains(size_t i) const;
  // X_U: for an upper set this is exactly the maximal elements inside U,
  // reported in canonical order.
  std::vector<size_t> support() const;
  std::vector<std::string> support_labels() const;
  std::vector<std::string> member_labels() const;
  bool operator==(const OpenSet& o) const { return members == o.members; }
};

OpenSet upper_closure(const PosetPtr& poset, const std::vector<std::string>& seeds);
OpenSet full_open_set(const PosetPtr& poset);

// Every upper set exactly once, in a deterministic order (depth-first over a
// fixed linear extension). The poset size is capped because the count is
// exponential in general.
std::vector<OpenSet> enumerate_open_sets(const PosetPtr& poset, size_t cap = 24);
void for_each_open_set(const PosetPtr& poset, size_t cap,
                       const std::function<void(const OpenSet&)>& fn);

// Group acting by permutations on a label set; given by generators only.
struct PermutationAction {
  std::vector<std::string> domain;
  std::vector<std::vector<size_t>> generators;  // each a permutation of indices

  static PermutationAction make(std::vector<std::string> domain,
                                std::vector<std::vector<size_t>> generators);
  size_t degree() const { return domain.size(); }
  std::vector<std::vector<size_t>> orbits() const;  // each orbit sorted; orbits by least element
  // Restriction to a subset of the domain (which must be invariant).
  PermutationAction restrict_to(const std::vector<size_t>& subset) const;
};

// Validates that the action preserves covers and grading on the poset.
void validate_poset_action(const PosetPtr& poset, const PermutationAction& action);

struct PosetMorphism {
  PosetPtr from;
  PosetPtr to;
  std::vector<size_t> map;  // image index per element of `from`

  static PosetMorphism make(PosetPtr from, PosetPtr to, std::vector<size_t> map);
  static PosetMorphism from_labels(PosetPtr from, PosetPtr to,
                                   const std::map<std::string, std::string>& images);
};

std::string orbit_label(const std::vector<std::string>& members);

PosetPtr poset_product(const PosetPtr& x, const PosetPtr& y);

struct QuotientPoset {
  PosetPtr quotient;
  PosetMorphism projection;
  std::vector<std::vector<size_t>> orbits;
};
QuotientPoset poset_quotient(const PosetPtr& x, const PermutationAction& action);

// Constructors for the named coded spaces.
PosetPtr default_space(const std::vector<std::string>& points);
PosetPtr default_space(size_t n);
PosetPtr cycle_poset(size_t len);
PosetPtr graph_poset(size_t vertices, const std::vector<std::pair<size_t, size_t>>& edges);
PosetPtr with_empty_face(const PosetPtr& x);
PosetPtr order_complex(const PosetPtr& x);

struct FlagComplex {
  PosetPtr poset;
  size_t depth = 0;                                // maximal flag size D
  std::vector<std::vector<std::string>> level_sets;  // V_1..V_D as vertex labels
  std::vector<size_t> regularity;                  // n_1..n_D
};
// The simplicial complex of chains of V, viewed as a subposet of the product
// of the levels' default spaces. All maximal chains must have equal size and
// each co-atom flag must extend in a level-constant number of ways.
FlagComplex flag_complex_from_poset(const PosetPtr& v);
FlagComplex complete_multipartite_flag(const std::vector<size_t>& parts);
FlagComplex a1_flag_complex(std::uint64_t q);

}  // namespace sheafforge

#endif
