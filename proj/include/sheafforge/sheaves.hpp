#ifndef SHEAFFORGE_SHEAVES_HPP
#define SHEAFFORGE_SHEAVES_HPP

#include "sheafforge/codes.hpp"

namespace sheafforge {

// A code with a hierarchical family of local codes indexed by a graded
// poset: each local code lives on the maximal elements above its index, and
// restricting any local codeword upward lands in the smaller local code.
// Maximal elements carry the full one-dimensional space.
class SheafCode {
 public:
  // `locals` maps element labels to codes on the matching support; codes for
  // maximal elements may be omitted. Column order is normalized to the
  // poset's canonical order. Hierarchy violations name the offending pair.
  static SheafCode make(PosetPtr x, FieldPtr f, const std::map<std::string, LinearCode>& locals);
  static SheafCode make_unchecked(PosetPtr x, FieldPtr f,
                                  const std::map<std::string, LinearCode>& locals);

  const PosetPtr& poset() const { return poset_; }
  const FieldPtr& field() const { return field_; }
  const LinearCode& local_code(size_t element) const { return locals_[element]; }
  const LinearCode& local_code(const std::string& label) const;
  const LinearCode& global_code() const;

  bool equals(const SheafCode& o) const;

 private:
  SheafCode() = default;
  static SheafCode build(PosetPtr x, FieldPtr f, const std::map<std::string, LinearCode>& locals,
                         bool validate);
  PosetPtr poset_;
  FieldPtr field_;
  std::vector<LinearCode> locals_;
  mutable std::optional<LinearCode> global_;
};

// First cover pair (sigma, tau) whose restriction fails, if any.
std::optional<std::pair<std::string, std::string>> find_hierarchy_violation(const SheafCode& f);

// Local sections on an open set: everything on X_U that satisfies every
// local constraint indexed by U.
LinearCode local_sections(const SheafCode& f, const OpenSet& u);

SheafCode constant_sheaf(const PosetPtr& x, const FieldPtr& f);
// A plain code viewed on its default coded space (one bottom element under
// every coordinate).
SheafCode default_sheaf(const LinearCode& c);

// Completion from codimension-one data: deeper local codes are joint kernels
// of the given level-one codes above them.
SheafCode tanner_completion(const PosetPtr& x, const FieldPtr& f,
                            const std::map<std::string, LinearCode>& level1);

SheafCode restriction_sheaf(const SheafCode& f, const OpenSet& u);
SheafCode union_sheaf(const PosetPtr& x,
                      const std::vector<std::pair<SheafCode, OpenSet>>& parts);
SheafCode product_sheaf(const SheafCode& a, const SheafCode& b);
SheafCode pullback_sheaf(const PosetMorphism& phi, const SheafCode& b);
SheafCode pushforward_sheaf(const PosetMorphism& phi, const SheafCode& a);
SheafCode quotient_sheaf(const SheafCode& f, const PermutationAction& action);
SheafCode balanced_product_sheaf(const SheafCode& a, const PermutationAction& act_a,
                                 const SheafCode& b, const PermutationAction& act_b);

// Replace every codimension-one local code by its dual and recomplete.
// Requires a pure poset and local codes that really are the completion of
// their codimension-one data.
SheafCode dual_sheaf_t(const SheafCode& f);

// Tensor code of the components punctured onto the maximal flags, with local
// codes obtained by restriction; components are indexed by the complex's
// vertex levels.
SheafCode flag_product_code(const FlagComplex& x, std::span<const LinearCode> components);

// Induced subposet of an upper set (open sets keep their Hasse diagram).
PosetPtr open_subposet(const OpenSet& u);

}  // namespace sheafforge

#endif
