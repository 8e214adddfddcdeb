#ifndef SHEAFFORGE_TESTUTIL_HPP
#define SHEAFFORGE_TESTUTIL_HPP

#include <random>

#include "sheafforge/sheaves.hpp"

namespace sheafforge::testutil {

inline Matrix random_matrix(const FieldPtr& f, size_t m, size_t n, std::mt19937_64& rng,
                            std::vector<std::string> labels = {}) {
  Matrix out = labels.empty() ? Matrix(f, m, n) : Matrix(f, m, std::move(labels));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < out.cols(); ++j) out.set(i, j, uniform_below(rng, f->order()));
  return out;
}

// Small sample posets with varying shapes; all pure enough for Tanner data.
inline PosetPtr random_small_poset(std::mt19937_64& rng) {
  switch (uniform_below(rng, 5)) {
    case 0:
      return default_space(2 + uniform_below(rng, 3));
    case 1:
      return cycle_poset(3 + uniform_below(rng, 2));
    case 2: {
      // star: one check vertex under a few maximal edges
      size_t deg = 2 + uniform_below(rng, 3);
      std::vector<std::string> els = {"c"};
      std::map<std::string, int> gr = {{"c", 0}};
      std::vector<std::pair<std::string, std::string>> cov;
      for (size_t i = 0; i < deg; ++i) {
        els.push_back("b" + std::to_string(i));
        gr[els.back()] = 1;
        cov.emplace_back("c", els.back());
      }
      return GradedPoset::from_hasse(els, cov, gr);
    }
    case 3:
      return poset_product(default_space(2), default_space(2));
    default:
      return graph_poset(3, {{0, 1}, {1, 2}, {0, 2}});
  }
}

// Random level-1 data completed into a sheaf; hierarchy holds by construction.
inline SheafCode random_tanner_sheaf(const PosetPtr& x, const FieldPtr& f, std::mt19937_64& rng) {
  int top = x->max_grading();
  std::map<std::string, LinearCode> level1;
  for (size_t i = 0; i < x->size(); ++i) {
    if (x->is_maximal(i) || x->grading(i) != top - 1) continue;
    auto support = x->max_above_labels(i);
    size_t rows = uniform_below(rng, support.size() + 1);
    level1.emplace(x->label(i),
                   LinearCode::from_parity(random_matrix(f, rows, 0, rng, support)));
  }
  return tanner_completion(x, f, level1);
}

}  // namespace sheafforge::testutil

#endif
