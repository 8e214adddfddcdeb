#include "sheafforge/posets.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <sstream>

namespace sheafforge {

PosetPtr GradedPoset::from_hasse(std::vector<std::string> elements,
                                 const std::vector<std::pair<std::string, std::string>>& covers,
                                 const std::map<std::string, int>& grading) {
  auto p = std::shared_ptr<GradedPoset>(new GradedPoset());
  p->labels_ = std::move(elements);
  for (size_t i = 0; i < p->labels_.size(); ++i) {
    require(p->index_.emplace(p->labels_[i], i).second, "duplicate element label " + p->labels_[i]);
  }
  require(!p->labels_.empty(), "poset must be nonempty");
  p->grading_.resize(p->labels_.size());
  for (size_t i = 0; i < p->labels_.size(); ++i) {
    auto it = grading.find(p->labels_[i]);
    require(it != grading.end(), "missing grading for " + p->labels_[i]);
    p->grading_[i] = it->second;
  }
  for (const auto& [k, v] : grading) require(p->index_.count(k), "grading for unknown element " + k);
  p->up_.assign(p->size(), {});
  p->down_.assign(p->size(), {});
  std::set<std::pair<size_t, size_t>> seen;
  for (const auto& [a, b] : covers) {
    auto ia = p->index_.find(a);
    auto ib = p->index_.find(b);
    require(ia != p->index_.end(), "cover references unknown element " + a);
    require(ib != p->index_.end(), "cover references unknown element " + b);
    if (!seen.emplace(ia->second, ib->second).second) continue;
    if (p->grading_[ib->second] != p->grading_[ia->second] + 1)
      fail("cover " + a + " < " + b + " does not raise the grading by one");
    p->up_[ia->second].push_back(ib->second);
    p->down_[ib->second].push_back(ia->second);
    p->cover_pairs_.emplace_back(a, b);
  }
  // The grading constraint on covers rules out cycles; close the relation.
  size_t n = p->size();
  p->leq_.assign(n, std::vector<bool>(n, false));
  // process by decreasing grading so that all successors are closed first
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return p->grading_[a] > p->grading_[b]; });
  for (size_t i : order) {
    p->leq_[i][i] = true;
    for (size_t j : p->up_[i])
      for (size_t k = 0; k < n; ++k)
        if (p->leq_[j][k]) p->leq_[i][k] = true;
  }
  for (size_t i = 0; i < n; ++i)
    if (p->up_[i].empty()) p->maximal_.push_back(i);
  p->max_above_.assign(n, {});
  for (size_t i = 0; i < n; ++i)
    for (size_t m : p->maximal_)
      if (p->leq_[i][m]) p->max_above_[i].push_back(m);
  p->min_grading_ = *std::min_element(p->grading_.begin(), p->grading_.end());
  p->max_grading_ = *std::max_element(p->grading_.begin(), p->grading_.end());
  return p;
}

size_t GradedPoset::index(const std::string& label) const {
  auto it = index_.find(label);
  require(it != index_.end(), "unknown poset element " + label);
  return it->second;
}

std::vector<std::string> GradedPoset::max_above_labels(size_t i) const {
  std::vector<std::string> out;
  for (size_t m : max_above_[i]) out.push_back(labels_[m]);
  return out;
}

std::vector<size_t> GradedPoset::level(int g) const {
  std::vector<size_t> out;
  for (size_t i = 0; i < size(); ++i)
    if (grading_[i] == g) out.push_back(i);
  return out;
}

std::vector<size_t> GradedPoset::up_set(size_t i) const {
  std::vector<size_t> out;
  for (size_t j = 0; j < size(); ++j)
    if (leq_[i][j]) out.push_back(j);
  return out;
}

bool GradedPoset::same_structure(const GradedPoset& other) const {
  if (labels_ != other.labels_ || grading_ != other.grading_) return false;
  auto a = cover_pairs_;
  auto b = other.cover_pairs_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

OpenSet::OpenSet(PosetPtr p, std::vector<size_t> m, bool validate) : poset(std::move(p)), members(std::move(m)) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (validate) {
    for (size_t i : members) {
      require(i < poset->size(), "open set member out of range");
      for (size_t j : poset->covers_above(i))
        require(std::binary_search(members.begin(), members.end(), j),
                "set is not upward closed at " + poset->label(i));
    }
  }
}

bool OpenSet::contains(size_t i) const { return std::binary_search(members.begin(), members.end(), i); }

std::vector<size_t> OpenSet::support() const {
  std::vector<size_t> out;
  for (size_t m : poset->maximal())
    if (contains(m)) out.push_back(m);
  return out;
}

std::vector<std::string> OpenSet::support_labels() const {
  std::vector<std::string> out;
  for (size_t m : support()) out.push_back(poset->label(m));
  return out;
}

std::vector<std::string> OpenSet::member_labels() const {
  std::vector<std::string> out;
  for (size_t m : members) out.push_back(poset->label(m));
  return out;
}

OpenSet upper_closure(const PosetPtr& poset, const std::vector<std::string>& seeds) {
  std::vector<size_t> members;
  for (const auto& s : seeds) {
    size_t i = poset->index(s);
    for (size_t j = 0; j < poset->size(); ++j)
      if (poset->leq(i, j)) members.push_back(j);
  }
  return OpenSet(poset, std::move(members), false);
}

OpenSet full_open_set(const PosetPtr& poset) {
  std::vector<size_t> all(poset->size());
  std::iota(all.begin(), all.end(), 0);
  return OpenSet(poset, std::move(all), false);
}

void for_each_open_set(const PosetPtr& poset, size_t cap,
                       const std::function<void(const OpenSet&)>& fn) {
  size_t n = poset->size();
  if (n > cap)
    fail_budget("open-set enumeration needs " + std::to_string(n) +
                " elements <= cap " + std::to_string(cap));
  // Linear extension with maximal elements first: when an element is decided,
  // everything above it is already decided.
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return poset->grading(a) > poset->grading(b);
  });
  std::vector<bool> in(n, false);
  std::vector<size_t> chosen;
  std::function<void(size_t)> rec = [&](size_t pos) {
    if (pos == n) {
      fn(OpenSet(poset, chosen, false));
      return;
    }
    size_t e = order[pos];
    // excluded branch first
    rec(pos + 1);
    for (size_t j : poset->covers_above(e))
      if (!in[j]) return;
    in[e] = true;
    chosen.push_back(e);
    rec(pos + 1);
    chosen.pop_back();
    in[e] = false;
  };
  rec(0);
}

std::vector<OpenSet> enumerate_open_sets(const PosetPtr& poset, size_t cap) {
  std::vector<OpenSet> out;
  for_each_open_set(poset, cap, [&](const OpenSet& u) { out.push_back(u); });
  return out;
}

PermutationAction PermutationAction::make(std::vector<std::string> domain,
                                          std::vector<std::vector<size_t>> generators) {
  PermutationAction a;
  a.domain = std::move(domain);
  for (auto& g : generators) {
    require(g.size() == a.domain.size(), "generator size mismatch");
    std::vector<bool> hit(g.size(), false);
    for (size_t v : g) {
      require(v < g.size() && !hit[v], "generator is not a permutation");
      hit[v] = true;
    }
  }
  a.generators = std::move(generators);
  return a;
}

std::vector<std::vector<size_t>> PermutationAction::orbits() const {
  size_t n = domain.size();
  std::vector<size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<size_t(size_t)> find = [&](size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : generators)
    for (size_t i = 0; i < n; ++i) {
      size_t a = find(i), b = find(g[i]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::map<size_t, std::vector<size_t>> grouped;
  for (size_t i = 0; i < n; ++i) grouped[find(i)].push_back(i);
  std::vector<std::vector<size_t>> out;
  for (auto& [root, members] : grouped) out.push_back(std::move(members));
  return out;
}

PermutationAction PermutationAction::restrict_to(const std::vector<size_t>& subset) const {
  std::map<size_t, size_t> pos;
  std::vector<std::string> sub_domain;
  for (size_t i = 0; i < subset.size(); ++i) {
    pos[subset[i]] = i;
    sub_domain.push_back(domain[subset[i]]);
  }
  std::vector<std::vector<size_t>> gens;
  for (const auto& g : generators) {
    std::vector<size_t> h(subset.size());
    for (size_t i = 0; i < subset.size(); ++i) {
      auto it = pos.find(g[subset[i]]);
      require(it != pos.end(), "subset is not invariant under the action");
      h[i] = it->second;
    }
    gens.push_back(std::move(h));
  }
  return make(std::move(sub_domain), std::move(gens));
}

void validate_poset_action(const PosetPtr& poset, const PermutationAction& action) {
  require(action.domain == poset->labels(), "action domain must list the poset elements");
  for (const auto& g : action.generators) {
    for (size_t i = 0; i < poset->size(); ++i)
      require(poset->grading(g[i]) == poset->grading(i), "action does not preserve grading");
    for (const auto& [a, b] : poset->cover_pairs()) {
      size_t ia = g[poset->index(a)], ib = g[poset->index(b)];
      bool covered = false;
      for (size_t j : poset->covers_above(ia)) covered |= (j == ib);
      require(covered, "action does not preserve the order");
    }
  }
}

PosetMorphism PosetMorphism::make(PosetPtr from, PosetPtr to, std::vector<size_t> map) {
  require(map.size() == from->size(), "morphism must map every element");
  PosetMorphism phi;
  phi.from = std::move(from);
  phi.to = std::move(to);
  phi.map = std::move(map);
  for (size_t i = 0; i < phi.from->size(); ++i) {
    require(phi.map[i] < phi.to->size(), "morphism image out of range");
    require(phi.to->grading(phi.map[i]) == phi.from->grading(i),
            "morphism must preserve grading at " + phi.from->label(i));
  }
  for (const auto& [a, b] : phi.from->cover_pairs()) {
    size_t ia = phi.map[phi.from->index(a)], ib = phi.map[phi.from->index(b)];
    require(phi.to->leq(ia, ib), "morphism must preserve order on " + a + " < " + b);
  }
  return phi;
}

PosetMorphism PosetMorphism::from_labels(PosetPtr from, PosetPtr to,
                                         const std::map<std::string, std::string>& images) {
  std::vector<size_t> map(from->size());
  for (size_t i = 0; i < from->size(); ++i) {
    auto it = images.find(from->label(i));
    require(it != images.end(), "morphism missing image for " + from->label(i));
    map[i] = to->index(it->second);
  }
  return make(std::move(from), std::move(to), std::move(map));
}

std::string orbit_label(const std::vector<std::string>& members) {
  std::vector<std::string> sorted = members;
  std::sort(sorted.begin(), sorted.end());
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < sorted.size(); ++i) {
    if (i) os << ",";
    os << sorted[i];
  }
  os << "}";
  return os.str();
}

static std::string pair_label(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

PosetPtr poset_product(const PosetPtr& x, const PosetPtr& y) {
  std::vector<std::string> elements;
  std::map<std::string, int> grading;
  std::vector<std::pair<std::string, std::string>> covers;
  for (size_t a = 0; a < x->size(); ++a)
    for (size_t b = 0; b < y->size(); ++b) {
      std::string l = pair_label(x->label(a), y->label(b));
      elements.push_back(l);
      grading[l] = x->grading(a) + y->grading(b);
    }
  for (size_t a = 0; a < x->size(); ++a)
    for (size_t b = 0; b < y->size(); ++b) {
      for (size_t a2 : x->covers_above(a))
        covers.emplace_back(pair_label(x->label(a), y->label(b)),
                            pair_label(x->label(a2), y->label(b)));
      for (size_t b2 : y->covers_above(b))
        covers.emplace_back(pair_label(x->label(a), y->label(b)),
                            pair_label(x->label(a), y->label(b2)));
    }
  return GradedPoset::from_hasse(std::move(elements), covers, grading);
}

QuotientPoset poset_quotient(const PosetPtr& x, const PermutationAction& action) {
  validate_poset_action(x, action);
  QuotientPoset out;
  out.orbits = action.orbits();
  std::vector<size_t> orbit_of(x->size());
  std::vector<std::string> elements;
  std::map<std::string, int> grading;
  for (size_t o = 0; o < out.orbits.size(); ++o) {
    std::vector<std::string> members;
    for (size_t i : out.orbits[o]) {
      orbit_of[i] = o;
      members.push_back(x->label(i));
    }
    elements.push_back(orbit_label(members));
    grading[elements.back()] = x->grading(out.orbits[o][0]);
  }
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& [a, b] : x->cover_pairs()) {
    size_t oa = orbit_of[x->index(a)], ob = orbit_of[x->index(b)];
    covers.emplace_back(elements[oa], elements[ob]);
  }
  out.quotient = GradedPoset::from_hasse(elements, covers, grading);
  // Antisymmetry of the quotient order is implied by the grading; assert it.
  for (size_t i = 0; i < out.quotient->size(); ++i)
    for (size_t j = 0; j < out.quotient->size(); ++j)
      if (i != j && out.quotient->leq(i, j)) require(!out.quotient->leq(j, i), "quotient order not antisymmetric");
  std::vector<size_t> proj(x->size());
  for (size_t i = 0; i < x->size(); ++i) proj[i] = orbit_of[i];
  out.projection = PosetMorphism::make(x, out.quotient, std::move(proj));
  return out;
}

PosetPtr default_space(const std::vector<std::string>& points) {
  std::vector<std::string> elements = {"*"};
  std::map<std::string, int> grading = {{"*", 0}};
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& p : points) {
    require(p != "*", "point label '*' is reserved");
    elements.push_back(p);
    grading[p] = 1;
    covers.emplace_back("*", p);
  }
  return GradedPoset::from_hasse(std::move(elements), covers, grading);
}

PosetPtr default_space(size_t n) {
  std::vector<std::string> points;
  for (size_t i = 1; i <= n; ++i) points.push_back(std::to_string(i));
  return default_space(points);
}

PosetPtr cycle_poset(size_t len) {
  require(len >= 2, "cycle needs at least 2 vertices");
  std::vector<std::string> elements;
  std::map<std::string, int> grading;
  std::vector<std::pair<std::string, std::string>> covers;
  for (size_t i = 0; i < len; ++i) {
    elements.push_back("v" + std::to_string(i));
    grading[elements.back()] = 0;
  }
  for (size_t i = 0; i < len; ++i) {
    std::string e = "e" + std::to_string(i);
    elements.push_back(e);
    grading[e] = 1;
    covers.emplace_back("v" + std::to_string(i), e);
    covers.emplace_back("v" + std::to_string((i + 1) % len), e);
  }
  return GradedPoset::from_hasse(std::move(elements), covers, grading);
}

PosetPtr graph_poset(size_t vertices, const std::vector<std::pair<size_t, size_t>>& edges) {
  std::vector<std::string> elements;
  std::map<std::string, int> grading;
  std::vector<std::pair<std::string, std::string>> covers;
  for (size_t i = 0; i < vertices; ++i) {
    elements.push_back("v" + std::to_string(i));
    grading[elements.back()] = 0;
  }
  for (size_t e = 0; e < edges.size(); ++e) {
    require(edges[e].first != edges[e].second, "loops are not supported");
    std::string l = "e" + std::to_string(e);
    elements.push_back(l);
    grading[l] = 1;
    covers.emplace_back("v" + std::to_string(edges[e].first), l);
    covers.emplace_back("v" + std::to_string(edges[e].second), l);
  }
  return GradedPoset::from_hasse(std::move(elements), covers, grading);
}

PosetPtr with_empty_face(const PosetPtr& x) {
  std::vector<std::string> elements = {"{}"};
  std::map<std::string, int> grading;
  std::vector<std::pair<std::string, std::string>> covers = {};
  require(!x->has_label("{}"), "poset already has an empty face");
  int min_g = x->min_grading();
  grading["{}"] = min_g - 1;
  for (size_t i = 0; i < x->size(); ++i) {
    elements.push_back(x->label(i));
    grading[x->label(i)] = x->grading(i);
    if (x->covers_below(i).empty()) {
      require(x->grading(i) == min_g, "minimal elements must share one grading");
      covers.emplace_back("{}", x->label(i));
    }
  }
  for (const auto& c : x->cover_pairs()) covers.push_back(c);
  return GradedPoset::from_hasse(std::move(elements), covers, grading);
}

PosetPtr order_complex(const PosetPtr& x) {
  // faces = nonempty chains, ordered by inclusion
  std::vector<std::vector<size_t>> chains;
  std::function<void(std::vector<size_t>&)> extend = [&](std::vector<size_t>& chain) {
    chains.push_back(chain);
    size_t last = chain.back();
    for (size_t j = 0; j < x->size(); ++j) {
      if (j == last || !x->leq(last, j)) continue;
      chain.push_back(j);
      extend(chain);
      chain.pop_back();
    }
  };
  for (size_t i = 0; i < x->size(); ++i) {
    std::vector<size_t> chain = {i};
    extend(chain);
  }
  auto label_of = [&](const std::vector<size_t>& chain) {
    std::ostringstream os;
    os << "{";
    for (size_t k = 0; k < chain.size(); ++k) {
      if (k) os << ",";
      os << x->label(chain[k]);
    }
    os << "}";
    return os.str();
  };
  std::vector<std::string> elements;
  std::map<std::string, int> grading;
  std::map<std::string, std::vector<size_t>> by_label;
  for (const auto& c : chains) {
    std::string l = label_of(c);
    elements.push_back(l);
    grading[l] = static_cast<int>(c.size()) - 1;
    by_label[l] = c;
  }
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& [lb, big] : by_label) {
    if (big.size() < 2) continue;
    for (size_t drop = 0; drop < big.size(); ++drop) {
      std::vector<size_t> small;
      for (size_t k = 0; k < big.size(); ++k)
        if (k != drop) small.push_back(big[k]);
      covers.emplace_back(label_of(small), lb);
    }
  }
  return GradedPoset::from_hasse(std::move(elements), covers, grading);
}

FlagComplex flag_complex_from_poset(const PosetPtr& v) {
  FlagComplex out;
  size_t n = v->size();
  // level of a vertex: 1 + length of the longest chain strictly below it
  std::vector<int> lvl(n, -1);
  std::function<int(size_t)> level_of = [&](size_t i) -> int {
    if (lvl[i] >= 0) return lvl[i];
    int best = 0;
    for (size_t j = 0; j < n; ++j)
      if (j != i && v->leq(j, i)) best = std::max(best, level_of(j));
    return lvl[i] = best + 1;
  };
  int depth = 0;
  for (size_t i = 0; i < n; ++i) depth = std::max(depth, level_of(i));
  out.depth = static_cast<size_t>(depth);
  out.level_sets.assign(out.depth, {});
  for (size_t i = 0; i < n; ++i) out.level_sets[lvl[i] - 1].push_back(v->label(i));

  // enumerate all chains (flags), including the empty one; store each as a
  // sorted index set so subset tests work below
  std::vector<std::vector<size_t>> flags = {{}};
  std::function<void(std::vector<size_t>&)> extend = [&](std::vector<size_t>& chain) {
    auto sorted = chain;
    std::sort(sorted.begin(), sorted.end());
    flags.push_back(std::move(sorted));
    size_t last = chain.back();
    for (size_t j = 0; j < n; ++j) {
      if (j == last || !v->leq(last, j)) continue;
      chain.push_back(j);
      extend(chain);
      chain.pop_back();
    }
  };
  for (size_t i = 0; i < n; ++i) {
    std::vector<size_t> chain = {i};
    extend(chain);
  }
  auto tuple_label = [&](const std::vector<size_t>& flag) {
    std::vector<std::string> slots(out.depth, "*");
    for (size_t e : flag) {
      int l = lvl[e] - 1;
      require(slots[l] == "*", "chain with two elements on one level");
      slots[l] = v->label(e);
    }
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < slots.size(); ++i) {
      if (i) os << ",";
      os << slots[i];
    }
    os << ")";
    return os.str();
  };
  std::vector<std::string> elements;
  std::map<std::string, int> grading;
  std::map<std::string, std::vector<size_t>> by_label;
  for (const auto& f : flags) {
    std::string l = tuple_label(f);
    elements.push_back(l);
    grading[l] = static_cast<int>(f.size());
    by_label[l] = f;
  }
  std::vector<std::pair<std::string, std::string>> covers;
  size_t max_flags = 0;
  for (const auto& [lb, big] : by_label) {
    if (big.empty()) continue;
    for (size_t drop = 0; drop < big.size(); ++drop) {
      std::vector<size_t> small;
      for (size_t k = 0; k < big.size(); ++k)
        if (k != drop) small.push_back(big[k]);
      covers.emplace_back(tuple_label(small), lb);
    }
    if (big.size() == out.depth) ++max_flags;
  }
  require(max_flags > 0, "poset has no full flags");
  // all maximal chains must have size D
  for (const auto& [lb, f] : by_label) {
    if (f.size() == out.depth) continue;
    bool extendable = false;
    for (const auto& [lb2, g] : by_label)
      if (g.size() == f.size() + 1 && std::includes(g.begin(), g.end(), f.begin(), f.end()))
        extendable = true;
    require(extendable, "maximal flags have unequal sizes (stuck at " + lb + ")");
  }
  out.poset = GradedPoset::from_hasse(std::move(elements), covers, grading);
  // regularity: each flag missing exactly level i extends to the same number
  // of full flags
  out.regularity.assign(out.depth, 0);
  for (const auto& [lb, f] : by_label) {
    if (f.size() != out.depth - 1) continue;
    std::vector<bool> present(out.depth, false);
    for (size_t e : f) present[lvl[e] - 1] = true;
    size_t missing = 0;
    for (size_t i = 0; i < out.depth; ++i)
      if (!present[i]) missing = i;
    size_t count = 0;
    for (const auto& [lb2, g] : by_label)
      if (g.size() == out.depth && std::includes(g.begin(), g.end(), f.begin(), f.end())) ++count;
    if (out.regularity[missing] == 0)
      out.regularity[missing] = count;
    else
      require(out.regularity[missing] == count,
              "flag complex is not regular at level " + std::to_string(missing + 1));
  }
  return out;
}

FlagComplex complete_multipartite_flag(const std::vector<size_t>& parts) {
  std::vector<std::string> elements;
  std::map<std::string, int> grading;
  std::vector<std::pair<std::string, std::string>> covers;
  std::vector<std::vector<std::string>> level_labels;
  for (size_t lvl = 0; lvl < parts.size(); ++lvl) {
    level_labels.emplace_back();
    for (size_t i = 1; i <= parts[lvl]; ++i) {
      std::string l = std::to_string(lvl + 1) + ":" + std::to_string(i);
      elements.push_back(l);
      grading[l] = static_cast<int>(lvl);
      level_labels.back().push_back(l);
    }
  }
  for (size_t lvl = 0; lvl + 1 < parts.size(); ++lvl)
    for (const auto& a : level_labels[lvl])
      for (const auto& b : level_labels[lvl + 1]) covers.emplace_back(a, b);
  auto v = GradedPoset::from_hasse(std::move(elements), covers, grading);
  return flag_complex_from_poset(v);
}

FlagComplex a1_flag_complex(std::uint64_t q) {
  // points and lines of the projective plane over GF(q)
  std::uint64_t p = 0;
  unsigned t = 0;
  for (std::uint64_t d = 2; d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      std::uint64_t m = q;
      t = 0;
      while (m % d == 0) {
        m /= d;
        ++t;
      }
      require(m == 1, "q must be a prime power");
      break;
    }
  }
  require(p != 0, "q must be a prime power >= 2");
  auto f = Field::make(p, t);
  const Field& ff = *f;
  // normalized triples: first nonzero coordinate is 1
  std::vector<std::array<std::uint64_t, 3>> reps;
  for (std::uint64_t y = 0; y < q; ++y)
    for (std::uint64_t z = 0; z < q; ++z) reps.push_back({1, y, z});
  for (std::uint64_t z = 0; z < q; ++z) reps.push_back({0, 1, z});
  reps.push_back({0, 0, 1});

  auto name = [&](const char* kind, const std::array<std::uint64_t, 3>& v) {
    std::ostringstream os;
    os << kind << "(" << v[0] << ":" << v[1] << ":" << v[2] << ")";
    return os.str();
  };
  std::vector<std::string> elements;
  std::map<std::string, int> grading;
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& v : reps) {
    std::string l = name("p", v);
    elements.push_back(l);
    grading[l] = 0;
  }
  for (const auto& v : reps) {
    std::string l = name("l", v);
    elements.push_back(l);
    grading[l] = 1;
  }
  for (const auto& pt : reps)
    for (const auto& ln : reps) {
      std::uint64_t dot = 0;
      for (int i = 0; i < 3; ++i) dot = ff.add(dot, ff.mul(pt[i], ln[i]));
      if (dot == 0) covers.emplace_back(name("p", pt), name("l", ln));
    }
  auto v = GradedPoset::from_hasse(std::move(elements), covers, grading);
  return flag_complex_from_poset(v);
}

}  // namespace sheafforge
