#include "sheafforge/sheaves.hpp"

#include <algorithm>
#include <set>

namespace sheafforge {

namespace {

Matrix identity_with_labels(const FieldPtr& f, const std::vector<std::string>& labels) {
  Matrix m(f, labels.size(), labels);
  for (size_t i = 0; i < labels.size(); ++i) m.set(i, i, 1);
  return m;
}

std::vector<std::uint64_t> restrict_word(const std::vector<std::uint64_t>& word,
                                         const std::vector<std::string>& from,
                                         const std::vector<std::string>& to) {
  std::map<std::string, size_t> pos;
  for (size_t i = 0; i < from.size(); ++i) pos[from[i]] = i;
  std::vector<std::uint64_t> out(to.size());
  for (size_t i = 0; i < to.size(); ++i) {
    auto it = pos.find(to[i]);
    require(it != pos.end(), "restriction target is not a subset of the support");
    out[i] = word[it->second];
  }
  return out;
}

}  // namespace

SheafCode SheafCode::make(PosetPtr x, FieldPtr f, const std::map<std::string, LinearCode>& locals) {
  return build(std::move(x), std::move(f), locals, true);
}

SheafCode SheafCode::make_unchecked(PosetPtr x, FieldPtr f,
                                    const std::map<std::string, LinearCode>& locals) {
  return build(std::move(x), std::move(f), locals, false);
}

SheafCode SheafCode::build(PosetPtr x, FieldPtr f, const std::map<std::string, LinearCode>& locals,
                           bool validate) {
  SheafCode sheaf;
  sheaf.poset_ = std::move(x);
  sheaf.field_ = std::move(f);
  const GradedPoset& p = *sheaf.poset_;
  for (const auto& [label, code] : locals)
    require(p.has_label(label), "local code for unknown element " + label);
  sheaf.locals_.reserve(p.size());
  for (size_t i = 0; i < p.size(); ++i) {
    auto support = p.max_above_labels(i);
    auto it = locals.find(p.label(i));
    if (p.is_maximal(i)) {
      if (it != locals.end())
        require(it->second.dim() == 1 && it->second.length() == 1,
                "maximal element " + p.label(i) + " must carry the full one-dimensional space");
      sheaf.locals_.push_back(LinearCode::full_code(sheaf.field_, support));
      continue;
    }
    require(it != locals.end(), "missing local code for " + p.label(i));
    const LinearCode& given = it->second;
    require(given.field()->same(*sheaf.field_), "field mismatch at " + p.label(i));
    std::set<std::string> want(support.begin(), support.end());
    std::set<std::string> got(given.labels().begin(), given.labels().end());
    require(want == got, "local code at " + p.label(i) + " is not indexed by its support");
    // normalize column order to the canonical one
    sheaf.locals_.push_back(LinearCode::from_parity(given.parity().restrict_columns(support)));
  }
  if (validate) {
    auto bad = find_hierarchy_violation(sheaf);
    if (bad)
      fail("hierarchy violation: restriction of the local code at " + bad->first +
           " leaves the local code at " + bad->second);
  }
  return sheaf;
}

const LinearCode& SheafCode::local_code(const std::string& label) const {
  return locals_[poset_->index(label)];
}

const LinearCode& SheafCode::global_code() const {
  if (!global_) global_ = local_sections(*this, full_open_set(poset_));
  return *global_;
}

bool SheafCode::equals(const SheafCode& o) const {
  if (!poset_->same_structure(*o.poset_) || !field_->same(*o.field_)) return false;
  for (size_t i = 0; i < poset_->size(); ++i)
    if (!locals_[i].equals(o.locals_[i])) return false;
  return true;
}

std::optional<std::pair<std::string, std::string>> find_hierarchy_violation(const SheafCode& f) {
  const GradedPoset& p = *f.poset();
  // covers suffice: deeper containments compose
  for (size_t s = 0; s < p.size(); ++s) {
    const auto& gen = f.local_code(s).generator();
    for (size_t t : p.covers_above(s)) {
      auto target = p.max_above_labels(t);
      for (size_t r = 0; r < gen.rows(); ++r) {
        std::vector<std::uint64_t> row(gen.cols());
        for (size_t j = 0; j < gen.cols(); ++j) row[j] = gen.get(r, j);
        auto restricted = restrict_word(row, gen.labels(), target);
        if (!f.local_code(t).contains(restricted))
          return std::make_pair(p.label(s), p.label(t));
      }
    }
  }
  return std::nullopt;
}

LinearCode local_sections(const SheafCode& f, const OpenSet& u) {
  require(u.poset.get() == f.poset().get() || u.poset->same_structure(*f.poset()),
          "open set belongs to a different poset");
  auto support = u.support_labels();
  std::vector<Matrix> checks;
  for (size_t s : u.members) checks.push_back(f.local_code(s).parity());
  if (checks.empty()) return LinearCode::full_code(f.field(), support);
  return LinearCode::from_parity(Matrix::stack(checks, support));
}

SheafCode constant_sheaf(const PosetPtr& x, const FieldPtr& f) {
  std::map<std::string, LinearCode> locals;
  for (size_t i = 0; i < x->size(); ++i) {
    if (x->is_maximal(i)) continue;
    locals.emplace(x->label(i), LinearCode::repetition_code(f, x->max_above_labels(i)));
  }
  return SheafCode::make(x, f, locals);
}

SheafCode default_sheaf(const LinearCode& c) {
  auto x = default_space(c.labels());
  std::map<std::string, LinearCode> locals;
  locals.emplace("*", c);
  return SheafCode::make(x, c.field(), locals);
}

SheafCode tanner_completion(const PosetPtr& x, const FieldPtr& f,
                            const std::map<std::string, LinearCode>& level1) {
  int top = x->max_grading();
  std::map<std::string, LinearCode> locals;
  for (size_t i = 0; i < x->size(); ++i) {
    if (x->is_maximal(i)) continue;
    auto support = x->max_above_labels(i);
    if (x->grading(i) == top - 1) {
      auto it = level1.find(x->label(i));
      require(it != level1.end(), "missing level-1 code for " + x->label(i));
      locals.emplace(x->label(i), it->second);
      continue;
    }
    // joint kernel of every level-1 constraint above
    std::vector<Matrix> checks;
    for (size_t j = 0; j < x->size(); ++j) {
      if (x->grading(j) != top - 1 || x->is_maximal(j) || !x->leq(i, j)) continue;
      auto it = level1.find(x->label(j));
      require(it != level1.end(), "missing level-1 code for " + x->label(j));
      checks.push_back(it->second.parity());
    }
    if (checks.empty())
      locals.emplace(x->label(i), LinearCode::full_code(f, support));
    else
      locals.emplace(x->label(i), LinearCode::from_parity(Matrix::stack(checks, support)));
  }
  for (const auto& [label, code] : level1) {
    size_t i = x->index(label);
    require(!x->is_maximal(i) && x->grading(i) == top - 1,
            "level-1 code given for " + label + " which is not a codimension-one element");
    (void)code;
  }
  return SheafCode::make(x, f, locals);
}

PosetPtr open_subposet(const OpenSet& u) {
  const GradedPoset& p = *u.poset;
  std::vector<std::string> elements;
  std::map<std::string, int> grading;
  std::vector<std::pair<std::string, std::string>> covers;
  for (size_t i : u.members) {
    elements.push_back(p.label(i));
    grading[p.label(i)] = p.grading(i);
  }
  for (const auto& [a, b] : p.cover_pairs())
    if (u.contains(p.index(a)) && u.contains(p.index(b))) covers.emplace_back(a, b);
  require(!elements.empty(), "empty subposet");
  return GradedPoset::from_hasse(std::move(elements), covers, grading);
}

SheafCode restriction_sheaf(const SheafCode& f, const OpenSet& u) {
  auto sub = open_subposet(u);
  std::map<std::string, LinearCode> locals;
  for (size_t i : u.members)
    if (!f.poset()->is_maximal(i)) locals.emplace(f.poset()->label(i), f.local_code(i));
  return SheafCode::make(sub, f.field(), locals);
}

SheafCode union_sheaf(const PosetPtr& x,
                      const std::vector<std::pair<SheafCode, OpenSet>>& parts) {
  require(!parts.empty(), "union of no sheaves");
  const FieldPtr& f = parts[0].first.field();
  std::vector<bool> covered(x->size(), false);
  for (const auto& [sheaf, u] : parts) {
    require(u.poset->same_structure(*x), "open set lives on a different poset");
    require(sheaf.poset()->same_structure(*open_subposet(u)),
            "sheaf poset must be the open set it covers");
    for (size_t i : u.members) covered[i] = true;
  }
  require(std::all_of(covered.begin(), covered.end(), [](bool b) { return b; }),
          "open sets do not cover the poset");
  std::map<std::string, LinearCode> locals;
  for (size_t i = 0; i < x->size(); ++i) {
    if (x->is_maximal(i)) continue;
    auto support = x->max_above_labels(i);
    std::vector<Matrix> gens;
    for (const auto& [sheaf, u] : parts) {
      if (!u.contains(i)) continue;
      gens.push_back(sheaf.local_code(sheaf.poset()->index(x->label(i))).generator());
    }
    require(!gens.empty(), "element " + x->label(i) + " not covered");
    // subspace sum: stack the generators, zero-extended onto the support
    locals.emplace(x->label(i), LinearCode::from_generator(Matrix::stack(gens, support)));
  }
  return SheafCode::make(x, f, locals);
}

SheafCode product_sheaf(const SheafCode& a, const SheafCode& b) {
  require(a.field()->same(*b.field()), "field mismatch");
  auto prod = poset_product(a.poset(), b.poset());
  const FieldPtr& f = a.field();
  std::map<std::string, LinearCode> locals;
  for (size_t i = 0; i < a.poset()->size(); ++i)
    for (size_t j = 0; j < b.poset()->size(); ++j) {
      std::string label = "(" + a.poset()->label(i) + "," + b.poset()->label(j) + ")";
      size_t idx = prod->index(label);
      if (prod->is_maximal(idx)) continue;
      auto ia = identity_with_labels(f, a.local_code(i).labels());
      auto ib = identity_with_labels(f, b.local_code(j).labels());
      Matrix ha = Matrix::kronecker(a.local_code(i).parity(), ib);
      Matrix hb = Matrix::kronecker(ia, b.local_code(j).parity());
      std::vector<Matrix> checks = {ha, hb};
      locals.emplace(label, LinearCode::from_parity(Matrix::stack(checks, ha.labels())));
    }
  return SheafCode::make(prod, f, locals);
}

SheafCode pullback_sheaf(const PosetMorphism& phi, const SheafCode& b) {
  require(phi.to->same_structure(*b.poset()), "morphism target must carry the sheaf");
  // maximal elements must map to maximal elements for supports to align
  for (size_t m : phi.from->maximal())
    require(b.poset()->is_maximal(phi.map[m]),
            "morphism must send maximal elements to maximal elements");
  std::map<std::string, LinearCode> locals;
  for (size_t i = 0; i < phi.from->size(); ++i) {
    if (phi.from->is_maximal(i)) continue;
    auto support = phi.from->max_above_labels(i);
    const LinearCode& base = b.local_code(phi.map[i]);
    const Matrix& g = base.generator();
    std::map<std::string, size_t> base_pos;
    for (size_t j = 0; j < g.cols(); ++j) base_pos[g.labels()[j]] = j;
    Matrix lifted(b.field(), g.rows(), support);
    for (size_t c = 0; c < support.size(); ++c) {
      size_t xi = phi.from->index(support[c]);
      const std::string& img = b.poset()->label(phi.map[xi]);
      auto it = base_pos.find(img);
      require(it != base_pos.end(), "image of a maximal element misses the base support");
      for (size_t r = 0; r < g.rows(); ++r) lifted.set(r, c, g.get(r, it->second));
    }
    locals.emplace(phi.from->label(i), LinearCode::from_generator(lifted));
  }
  return SheafCode::make(phi.from, b.field(), locals);
}

SheafCode pushforward_sheaf(const PosetMorphism& phi, const SheafCode& a) {
  require(phi.from->same_structure(*a.poset()), "morphism source must carry the sheaf");
  for (size_t m : phi.from->maximal())
    require(phi.to->is_maximal(phi.map[m]),
            "morphism must send maximal elements to maximal elements");
  const PosetPtr& y = phi.to;
  std::map<std::string, LinearCode> locals;
  for (size_t s = 0; s < y->size(); ++s) {
    if (y->is_maximal(s)) continue;
    auto target_support = y->max_above_labels(s);
    // preimage of the principal open set above s
    std::vector<size_t> pre;
    for (size_t i = 0; i < phi.from->size(); ++i)
      if (y->leq(s, phi.map[i])) pre.push_back(i);
    if (pre.empty()) {
      locals.emplace(y->label(s), LinearCode::full_code(a.field(), target_support));
      continue;
    }
    OpenSet v(a.poset(), pre, true);
    LinearCode sections = local_sections(a, v);
    // composition with the morphism: word on Y_s pulled back to X_V
    const auto& from_labels = sections.labels();
    Matrix t(a.field(), from_labels.size(), target_support);
    std::map<std::string, size_t> tpos;
    for (size_t c = 0; c < target_support.size(); ++c) tpos[target_support[c]] = c;
    for (size_t r = 0; r < from_labels.size(); ++r) {
      size_t xi = a.poset()->index(from_labels[r]);
      const std::string& img = y->label(phi.map[xi]);
      auto it = tpos.find(img);
      require(it != tpos.end(), "maximal element maps outside the target support");
      t.set(r, it->second, 1);
    }
    locals.emplace(y->label(s), LinearCode::from_parity(sections.parity().mul(t)));
  }
  return SheafCode::make(y, a.field(), locals);
}

namespace {

void require_sheaf_g_code(const SheafCode& f, const PermutationAction& action) {
  validate_poset_action(f.poset(), action);
  const GradedPoset& p = *f.poset();
  for (const auto& g : action.generators) {
    for (size_t s = 0; s < p.size(); ++s) {
      size_t gs = g[s];
      const Matrix& gen = f.local_code(s).generator();
      const auto& from_labels = gen.labels();
      auto target = p.max_above_labels(gs);
      std::map<std::string, size_t> pos;
      for (size_t j = 0; j < from_labels.size(); ++j) pos[from_labels[j]] = j;
      for (size_t r = 0; r < gen.rows(); ++r) {
        std::vector<std::uint64_t> moved(target.size());
        for (size_t c = 0; c < target.size(); ++c) {
          // (g.c)(x) = c(g^{-1}.x)
          size_t x = p.index(target[c]);
          size_t preimage = 0;
          bool found = false;
          for (size_t i = 0; i < g.size() && !found; ++i)
            if (g[i] == x) {
              preimage = i;
              found = true;
            }
          require(found, "action is not a permutation");
          auto it = pos.find(p.label(preimage));
          require(it != pos.end(), "action does not respect supports");
          moved[c] = gen.get(r, it->second);
        }
        require(f.local_code(gs).contains(moved),
                "local codes are not equivariant at " + p.label(s));
      }
    }
  }
}

}  // namespace

SheafCode quotient_sheaf(const SheafCode& f, const PermutationAction& action) {
  require_sheaf_g_code(f, action);
  auto q = poset_quotient(f.poset(), action);
  std::map<std::string, LinearCode> locals;
  for (size_t s = 0; s < q.quotient->size(); ++s) {
    if (q.quotient->is_maximal(s)) continue;
    // open saturation of the orbit
    std::vector<std::string> seeds;
    for (size_t i : q.orbits[s]) seeds.push_back(f.poset()->label(i));
    OpenSet u = upper_closure(f.poset(), seeds);
    LinearCode sections = local_sections(f, u);
    auto support = u.support();
    auto restricted = action.restrict_to(support);
    locals.emplace(q.quotient->label(s), quotient_code(sections, restricted));
  }
  return SheafCode::make(q.quotient, f.field(), locals);
}

SheafCode balanced_product_sheaf(const SheafCode& a, const PermutationAction& act_a,
                                 const SheafCode& b, const PermutationAction& act_b) {
  require(act_a.generators.size() == act_b.generators.size(),
          "actions must share one generator list");
  auto prod = product_sheaf(a, b);
  const PosetPtr& p = prod.poset();
  std::vector<std::vector<size_t>> gens;
  for (size_t gi = 0; gi < act_a.generators.size(); ++gi) {
    std::vector<size_t> perm(p->size());
    for (size_t i = 0; i < a.poset()->size(); ++i)
      for (size_t j = 0; j < b.poset()->size(); ++j) {
        size_t from = p->index("(" + a.poset()->label(i) + "," + b.poset()->label(j) + ")");
        size_t to = p->index("(" + a.poset()->label(act_a.generators[gi][i]) + "," +
                             b.poset()->label(act_b.generators[gi][j]) + ")");
        perm[from] = to;
      }
    gens.push_back(std::move(perm));
  }
  auto action = PermutationAction::make(p->labels(), gens);
  return quotient_sheaf(prod, action);
}

SheafCode dual_sheaf_t(const SheafCode& f) {
  const GradedPoset& p = *f.poset();
  int top = p.max_grading();
  for (size_t m : p.maximal())
    require(p.grading(m) == top, "dual sheaf needs all maximal elements at the top grading");
  std::map<std::string, LinearCode> level1;
  for (size_t i = 0; i < p.size(); ++i)
    if (!p.is_maximal(i) && p.grading(i) == top - 1) level1.emplace(p.label(i), f.local_code(i));
  // the sheaf must really be the completion of its codimension-one data
  auto completed = tanner_completion(f.poset(), f.field(), level1);
  for (size_t i = 0; i < p.size(); ++i)
    require(completed.local_code(i).equals(f.local_code(i)),
            "input is not a completion of codimension-one codes (differs at " + p.label(i) + ")");
  std::map<std::string, LinearCode> duals;
  for (auto& [label, code] : level1) duals.emplace(label, code.dual());
  return tanner_completion(f.poset(), f.field(), duals);
}

SheafCode flag_product_code(const FlagComplex& x, std::span<const LinearCode> components) {
  require(components.size() == x.depth, "one component code per level");
  const FieldPtr& f = components[0].field();
  for (size_t i = 0; i < components.size(); ++i) {
    require(components[i].field()->same(*f), "field mismatch");
    require(components[i].labels() == x.level_sets[i],
            "component " + std::to_string(i + 1) + " must be indexed by its vertex level");
  }
  LinearCode tensor = LinearCode::tensor(components);
  std::map<std::string, LinearCode> locals;
  const GradedPoset& p = *x.poset;
  for (size_t i = 0; i < p.size(); ++i) {
    if (p.is_maximal(i)) continue;
    locals.emplace(p.label(i), tensor.puncture(p.max_above_labels(i)));
  }
  return SheafCode::make(x.poset, f, locals);
}

}  // namespace sheafforge
