#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "testutil.hpp"

using namespace sheafforge;
using testutil::random_small_poset;
using testutil::random_tanner_sheaf;

namespace {

Matrix hamming_parity(const FieldPtr& f2) {
  std::vector<std::vector<std::uint64_t>> rows(3, std::vector<std::uint64_t>(7, 0));
  for (int col = 1; col <= 7; ++col)
    for (int bit = 0; bit < 3; ++bit) rows[bit][col - 1] = (col >> bit) & 1;
  return Matrix::from_rows(f2, rows);
}

}  // namespace

TEST_CASE("default sheaf carries the code as its bottom local code") {
  auto f2 = Field::make(2, 1);
  auto ham = LinearCode::from_parity(hamming_parity(f2));
  auto sheaf = default_sheaf(ham);
  CHECK(sheaf.local_code("*").equals(ham));
  CHECK(sheaf.global_code().equals(ham));
}

TEST_CASE("hierarchy violations name the offending cover") {
  auto f2 = Field::make(2, 1);
  // chain c < m < two tops: give m the zero code but c something nonzero
  auto x = GradedPoset::from_hasse({"c", "m", "t1", "t2"},
                                   {{"c", "m"}, {"m", "t1"}, {"m", "t2"}},
                                   {{"c", 0}, {"m", 1}, {"t1", 2}, {"t2", 2}});
  std::map<std::string, LinearCode> locals;
  locals.emplace("m", LinearCode::zero_code(f2, x->max_above_labels(x->index("m"))));
  locals.emplace("c", LinearCode::repetition_code(f2, x->max_above_labels(x->index("c"))));
  try {
    SheafCode::make(x, f2, locals);
    CHECK(false);
  } catch (const Error& e) {
    std::string msg = e.what();
    CHECK(msg.find("c") != std::string::npos);
    CHECK(msg.find("m") != std::string::npos);
  }
}

TEST_CASE("constant sheaf") {
  auto f2 = Field::make(2, 1);
  auto ds = default_space(3);
  auto cs = constant_sheaf(ds, f2);
  CHECK(cs.global_code().equals(LinearCode::repetition_code(f2, cs.global_code().labels())));

  auto single = GradedPoset::from_hasse({"a"}, {}, {{"a", 0}});
  auto cs1 = constant_sheaf(single, f2);
  CHECK(cs1.global_code().dim() == 1);

  auto torus = poset_product(cycle_poset(2), cycle_poset(2));
  auto ct = constant_sheaf(torus, f2);
  CHECK(ct.global_code().length() == 4);
  CHECK(ct.global_code().dim() == 1);  // connected
}

TEST_CASE("tanner completion") {
  auto f2 = Field::make(2, 1);

  // star with one check vertex: the global code is the level-1 code itself
  auto star = GradedPoset::from_hasse({"c", "b0", "b1", "b2"},
                                      {{"c", "b0"}, {"c", "b1"}, {"c", "b2"}},
                                      {{"c", 0}, {"b0", 1}, {"b1", 1}, {"b2", 1}});
  std::map<std::string, LinearCode> lvl;
  auto parity = LinearCode::from_parity(
      Matrix::from_rows(f2, {{1, 1, 1}}, {"b0", "b1", "b2"}));
  lvl.emplace("c", parity);
  auto tf = tanner_completion(star, f2, lvl);
  CHECK(tf.global_code().equals(parity));

  // bipartite check graph of the Hamming code
  std::vector<std::string> els;
  std::map<std::string, int> gr;
  std::vector<std::pair<std::string, std::string>> cov;
  for (int c = 0; c < 3; ++c) {
    els.push_back("chk" + std::to_string(c));
    gr[els.back()] = 0;
  }
  for (int b = 1; b <= 7; ++b) {
    els.push_back("x" + std::to_string(b));
    gr[els.back()] = 1;
    for (int c = 0; c < 3; ++c)
      if ((b >> c) & 1) cov.emplace_back("chk" + std::to_string(c), "x" + std::to_string(b));
  }
  auto tanner_graph = GradedPoset::from_hasse(els, cov, gr);
  std::map<std::string, LinearCode> checks;
  for (int c = 0; c < 3; ++c) {
    auto support = tanner_graph->max_above_labels(tanner_graph->index("chk" + std::to_string(c)));
    Matrix row(f2, 1, support);
    for (size_t j = 0; j < support.size(); ++j) row.set(0, j, 1);
    checks.emplace("chk" + std::to_string(c), LinearCode::from_parity(row));
  }
  auto ham_sheaf = tanner_completion(tanner_graph, f2, checks);
  CHECK(ham_sheaf.global_code().dim() == 4);
  // kernel equality with the direct matrix
  auto direct = LinearCode::from_parity(
      hamming_parity(f2).restrict_columns(Matrix::default_labels(7)));
  CHECK(ham_sheaf.global_code().parity().rank() == 3);
  CHECK(ham_sheaf.global_code().dim() == direct.dim());

  // repetition level-1 codes agree with the constant sheaf on connected posets
  std::mt19937_64 rng(5);
  for (int it = 0; it < 10; ++it) {
    auto x = cycle_poset(3 + it % 3);
    std::map<std::string, LinearCode> reps;
    for (size_t i = 0; i < x->size(); ++i)
      if (!x->is_maximal(i))
        reps.emplace(x->label(i), LinearCode::repetition_code(f2, x->max_above_labels(i)));
    auto completed = tanner_completion(x, f2, reps);
    auto constant = constant_sheaf(x, f2);
    CHECK(completed.global_code().equals(constant.global_code()));
  }
}

TEST_CASE("local sections") {
  auto f2 = Field::make(2, 1);
  std::mt19937_64 rng(7);
  for (int it = 0; it < 25; ++it) {
    auto x = random_small_poset(rng);
    auto f = it % 3 == 0 ? Field::make(2, 2) : f2;
    auto sheaf = random_tanner_sheaf(x, f, rng);

    CHECK(local_sections(sheaf, OpenSet(x, {})).length() == 0);
    CHECK(local_sections(sheaf, full_open_set(x)).equals(sheaf.global_code()));

    // principal open sets recover the local codes exactly
    for (size_t s = 0; s < x->size(); ++s) {
      OpenSet u(x, x->up_set(s), false);
      CHECK(local_sections(sheaf, u).equals(sheaf.local_code(s)));
    }
  }
}

TEST_CASE("restriction composes and columns restrict transitively") {
  auto f2 = Field::make(2, 1);
  std::mt19937_64 rng(11);
  auto x = poset_product(default_space(2), default_space(2));
  auto sheaf = random_tanner_sheaf(x, f2, rng);
  // two-step equals one-step restriction for a chain sigma <= tau <= pi
  size_t sigma = x->index("(*,*)");
  size_t tau = x->index("(1,*)");
  size_t pi = x->index("(1,1)");
  const Matrix& g = sheaf.local_code(sigma).generator();
  for (size_t r = 0; r < g.rows(); ++r) {
    std::vector<std::uint64_t> row(g.cols());
    for (size_t j = 0; j < g.cols(); ++j) row[j] = g.get(r, j);
    auto mid_labels = x->max_above_labels(tau);
    auto top_labels = x->max_above_labels(pi);
    auto mid = g.restrict_columns(mid_labels);
    auto direct = g.restrict_columns(top_labels);
    CHECK(mid.restrict_columns(top_labels).same_content(direct));
  }
}

TEST_CASE("restriction and union of sheaves") {
  auto f2 = Field::make(2, 1);
  auto ds = default_space(4);
  auto code = LinearCode::from_parity(
      Matrix::from_rows(f2, {{1, 1, 0, 0}, {0, 0, 1, 1}}, {"1", "2", "3", "4"}));
  auto sheaf = default_sheaf(code);

  auto whole = full_open_set(ds);
  auto restr = restriction_sheaf(sheaf, whole);
  CHECK(restr.equals(sheaf));

  std::vector<std::pair<SheafCode, OpenSet>> one = {{sheaf, whole}};
  CHECK(union_sheaf(ds, one).equals(sheaf));

  // disjoint cover: two halves of the default space's points plus the bottom
  // cannot be disjoint, so use a disjoint union of two stars instead
  auto two_stars = GradedPoset::from_hasse(
      {"c0", "a0", "a1", "c1", "b0", "b1"},
      {{"c0", "a0"}, {"c0", "a1"}, {"c1", "b0"}, {"c1", "b1"}},
      {{"c0", 0}, {"a0", 1}, {"a1", 1}, {"c1", 0}, {"b0", 1}, {"b1", 1}});
  OpenSet left = upper_closure(two_stars, {"c0"});
  OpenSet right = upper_closure(two_stars, {"c1"});
  std::map<std::string, LinearCode> l0, l1;
  l0.emplace("c0", LinearCode::repetition_code(f2, {"a0", "a1"}));
  l1.emplace("c1", LinearCode::from_parity(Matrix::from_rows(f2, {{1, 1}}, {"b0", "b1"})));
  auto fl = SheafCode::make(open_subposet(left), f2, l0);
  auto fr = SheafCode::make(open_subposet(right), f2, l1);
  std::vector<std::pair<SheafCode, OpenSet>> parts = {{fl, left}, {fr, right}};
  auto glued = union_sheaf(two_stars, parts);
  CHECK(glued.global_code().dim() == fl.global_code().dim() + fr.global_code().dim());
  // distance bound for unions
  auto du = glued.global_code().min_distance();
  auto dl = fl.global_code().min_distance();
  auto dr = fr.global_code().min_distance();
  REQUIRE(du);
  CHECK(*du >= std::min(dl.value_or(~0ull), dr.value_or(~0ull)));

  // non-covering families are rejected
  std::vector<std::pair<SheafCode, OpenSet>> partial = {{fl, left}};
  CHECK_THROWS_AS(union_sheaf(two_stars, partial), Error);
}

TEST_CASE("product sheaf") {
  auto f2 = Field::make(2, 1);
  auto point = GradedPoset::from_hasse({"pt"}, {}, {{"pt", 0}});
  auto cpoint = constant_sheaf(point, f2);

  auto rep2 = default_sheaf(LinearCode::repetition_code(f2, Matrix::default_labels(2)));
  auto with_point = product_sheaf(rep2, cpoint);
  CHECK(with_point.global_code().dim() == rep2.global_code().dim());

  auto four = product_sheaf(rep2, rep2);
  CHECK(four.global_code().length() == 4);
  CHECK(four.global_code().dim() == 1);
  CHECK(*four.global_code().min_distance() == 4);

  // global code of the product equals the tensor code
  auto c32 = LinearCode::from_parity(Matrix::from_rows(f2, {{1, 1, 1}}));
  auto c31 = LinearCode::repetition_code(f2, Matrix::default_labels(3));
  auto prod = product_sheaf(default_sheaf(c32), default_sheaf(c31));
  std::array<LinearCode, 2> pair = {c32, c31};
  auto tensor = LinearCode::tensor(pair);
  CHECK(prod.global_code().dim() == tensor.dim());
  CHECK(prod.global_code().parity().rank() == tensor.parity().rank());
}

TEST_CASE("pullback") {
  auto f2 = Field::make(2, 1);
  auto base_code = LinearCode::from_parity(Matrix::from_rows(f2, {{1, 1}}, {"1", "2"}));
  auto base = default_sheaf(base_code);

  // identity morphism
  auto id = PosetMorphism::make(base.poset(), base.poset(),
                                [&] {
                                  std::vector<size_t> m(base.poset()->size());
                                  for (size_t i = 0; i < m.size(); ++i) m[i] = i;
                                  return m;
                                }());
  CHECK(pullback_sheaf(id, base).equals(base));

  // Tanner lifting: 2 vertices joined by two labelled edges
  auto gamma = graph_poset(2, {{0, 1}, {0, 1}});
  std::map<std::string, std::string> images = {
      {"v0", "*"}, {"v1", "*"}, {"e0", "1"}, {"e1", "2"}};
  auto phi = PosetMorphism::from_labels(gamma, base.poset(), images);
  auto lifted = pullback_sheaf(phi, base);
  // direct construction: each vertex carries the base code on its edges
  std::map<std::string, LinearCode> lvl;
  lvl.emplace("v0", LinearCode::from_parity(Matrix::from_rows(f2, {{1, 1}}, {"e0", "e1"})));
  lvl.emplace("v1", LinearCode::from_parity(Matrix::from_rows(f2, {{1, 1}}, {"e0", "e1"})));
  auto direct = tanner_completion(gamma, f2, lvl);
  CHECK(lifted.equals(direct));
}

TEST_CASE("pushforward along the identity and along projections") {
  auto f2 = Field::make(2, 1);
  std::mt19937_64 rng(13);
  auto x = cycle_poset(4);
  auto sheaf = random_tanner_sheaf(x, f2, rng);
  std::vector<size_t> idm(x->size());
  for (size_t i = 0; i < idm.size(); ++i) idm[i] = i;
  auto id = PosetMorphism::make(x, x, idm);
  CHECK(pushforward_sheaf(id, sheaf).equals(sheaf));

  // rotation by two on the 4-cycle
  std::vector<size_t> rot(x->size());
  for (size_t i = 0; i < 4; ++i) {
    rot[x->index("v" + std::to_string(i))] = x->index("v" + std::to_string((i + 2) % 4));
    rot[x->index("e" + std::to_string(i))] = x->index("e" + std::to_string((i + 2) % 4));
  }
  auto act = PermutationAction::make(x->labels(), {rot});
  auto cs = constant_sheaf(x, f2);
  auto q = poset_quotient(x, act);
  auto via_push = pushforward_sheaf(q.projection, cs);
  auto via_quot = quotient_sheaf(cs, act);
  CHECK(via_push.equals(via_quot));
}

TEST_CASE("quotient sheaf of the constant sheaf on a cycle") {
  auto f2 = Field::make(2, 1);
  auto c4 = cycle_poset(4);
  auto cs = constant_sheaf(c4, f2);

  PermutationAction trivial = PermutationAction::make(c4->labels(), {});
  auto same = quotient_sheaf(cs, trivial);
  CHECK(same.global_code().dim() == cs.global_code().dim());

  std::vector<size_t> rot(c4->size());
  for (size_t i = 0; i < 4; ++i) {
    rot[c4->index("v" + std::to_string(i))] = c4->index("v" + std::to_string((i + 2) % 4));
    rot[c4->index("e" + std::to_string(i))] = c4->index("e" + std::to_string((i + 2) % 4));
  }
  auto act = PermutationAction::make(c4->labels(), {rot});
  auto q = quotient_sheaf(cs, act);
  CHECK(q.poset()->size() == cycle_poset(2)->size());
  // the quotient of the constant sheaf is the constant sheaf on the quotient
  auto expect = constant_sheaf(q.poset(), f2);
  CHECK(q.equals(expect));
}

TEST_CASE("balanced product with the trivial group is the product sheaf") {
  auto f2 = Field::make(2, 1);
  auto a = default_sheaf(LinearCode::repetition_code(f2, Matrix::default_labels(2)));
  auto b = default_sheaf(LinearCode::from_parity(Matrix::from_rows(f2, {{1, 1}})));
  PermutationAction ta = PermutationAction::make(a.poset()->labels(), {});
  PermutationAction tb = PermutationAction::make(b.poset()->labels(), {});
  auto bp = balanced_product_sheaf(a, ta, b, tb);
  auto prod = product_sheaf(a, b);
  CHECK(bp.global_code().dim() == prod.global_code().dim());
  CHECK(bp.poset()->size() == prod.poset()->size());
}

TEST_CASE("dual sheaf") {
  auto f2 = Field::make(2, 1);
  std::mt19937_64 rng(17);

  // involution on random completions
  for (int it = 0; it < 10; ++it) {
    auto x = random_small_poset(rng);
    auto sheaf = random_tanner_sheaf(x, f2, rng);
    CHECK(dual_sheaf_t(dual_sheaf_t(sheaf)).equals(sheaf));
  }

  // default sheaf: the transpose dual globalizes to the dual code
  auto code = LinearCode::from_parity(Matrix::from_rows(f2, {{1, 1, 0}, {0, 1, 1}}));
  auto ds = default_sheaf(code);
  CHECK(dual_sheaf_t(ds).global_code().equals(code.dual()));

  // product rule on small default sheaves
  auto a = default_sheaf(LinearCode::repetition_code(f2, Matrix::default_labels(2)));
  auto b = default_sheaf(LinearCode::from_parity(Matrix::from_rows(f2, {{1, 1, 1}})));
  auto lhs = dual_sheaf_t(product_sheaf(a, b));
  auto rhs = product_sheaf(dual_sheaf_t(a), dual_sheaf_t(b));
  CHECK(lhs.equals(rhs));

  // a non-completion input is rejected: shrink one deep local code
  auto prod = product_sheaf(a, b);
  std::map<std::string, LinearCode> locals;
  for (size_t i = 0; i < prod.poset()->size(); ++i) {
    if (prod.poset()->is_maximal(i)) continue;
    locals.emplace(prod.poset()->label(i), prod.local_code(i));
  }
  locals.at("(*,*)") = LinearCode::zero_code(f2, prod.local_code("(*,*)").labels());
  auto broken = SheafCode::make(prod.poset(), f2, locals);
  CHECK_THROWS_AS(dual_sheaf_t(broken), Error);
}

TEST_CASE("flag product codes") {
  auto f2 = Field::make(2, 1);
  // the complete multipartite complex reproduces the tensor code
  auto fc = complete_multipartite_flag({2, 3});
  auto c1 = LinearCode::repetition_code(f2, fc.level_sets[0]);
  auto c2 = LinearCode::from_parity(Matrix::from_rows(f2, {{1, 1, 1}}, fc.level_sets[1]));
  std::array<LinearCode, 2> comps = {c1, c2};
  auto fp = flag_product_code(fc, comps);
  auto tensor = LinearCode::tensor(comps);
  CHECK(fp.global_code().dim() == tensor.dim());

  // MDS components on a projective flag complex: dimension is the product
  auto a1 = a1_flag_complex(2);
  auto f8 = Field::make(2, 3);
  std::vector<std::vector<std::uint64_t>> g1рows;
  // evaluation-style [7,2] MDS over GF(8): rows (1..1) and 7 distinct points
  std::vector<std::vector<std::uint64_t>> rows = {
      {1, 1, 1, 1, 1, 1, 1}, {0, 1, 2, 3, 4, 5, 6}};
  auto mds1 = LinearCode::from_generator(Matrix::from_rows(f8, rows, a1.level_sets[0]));
  auto mds2 = LinearCode::from_generator(Matrix::from_rows(f8, rows, a1.level_sets[1]));
  REQUIRE(mds1.is_mds());
  std::array<LinearCode, 2> pcomps = {mds1, mds2};
  auto pfp = flag_product_code(a1, pcomps);
  CHECK(pfp.global_code().length() == 21);
  CHECK(pfp.global_code().dim() == 4);
}
