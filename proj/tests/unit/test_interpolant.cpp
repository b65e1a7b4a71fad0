#include <doctest.h>

#include <cmath>

#include "support/oracles.hpp"
#include "vandervolt/errors.hpp"
#include "vandervolt/interpolant.hpp"
#include "vandervolt/linalg.hpp"
#include "vandervolt/prng.hpp"
#include "vandervolt/sparse_grid.hpp"

using namespace vandervolt;

namespace {

/// A nonsingular random 5-node planar setup over the first five quadratic
/// monomials.
struct PlanarSetup {
  BasisSequence basis;
  NodeSet nodes;
};

PlanarSetup random_planar_setup(Xorshift64Star& rng) {
  const auto trial = BasisSequence::total_degree(BasisFamily::Monomial, 2, 2);
  while (true) {
    std::vector<double> coords(10);
    for (double& c : coords) c = rng.next_double();
    NodeSet nodes(2, std::move(coords));
    auto basis = trial.subset(std::vector<int>{0, 1, 2, 3, 4});
    if (std::fabs(determinant(build_square(basis, nodes))) > 1e-4)
      return {std::move(basis), std::move(nodes)};
  }
}

}  // namespace

TEST_CASE("fit recovers the linear function") {
  const auto basis = BasisSequence::total_degree(BasisFamily::Monomial, 1, 1);
  const NodeSet nodes(1, {0.0, 1.0});
  const std::vector<double> f = {0.0, 1.0};
  const auto p = fit(basis, nodes, f);
  CHECK(p.coefficients[0] == doctest::Approx(0.0));
  CHECK(p.coefficients[1] == doctest::Approx(1.0));

  const double x[] = {0.25};
  CHECK(evaluate(p, x) == doctest::Approx(0.25));
}

TEST_CASE("fit recovers the parabola from three samples") {
  const auto basis = BasisSequence::total_degree(BasisFamily::Monomial, 1, 2);
  const NodeSet nodes(1, {-1.0, 0.0, 1.0});
  const std::vector<double> f = {1.0, 0.0, 1.0};
  const auto p = fit(basis, nodes, f);
  CHECK(p.coefficients[0] == doctest::Approx(0.0));
  CHECK(p.coefficients[1] == doctest::Approx(0.0));
  CHECK(p.coefficients[2] == doctest::Approx(1.0));
}

TEST_CASE("fit on the Smolyak rule reproduces a pure basis element") {
  const auto grid = smolyak_sequence(2, 2);
  // phi_7 of the order-2 basis
  std::vector<double> f(static_cast<std::size_t>(grid.size()));
  for (int i = 0; i < grid.size(); ++i)
    f[static_cast<std::size_t>(i)] = basis_eval(grid.basis[6], grid.nodes.point(i));
  const auto p = fit(grid.basis, grid.nodes, f);
  for (int i = 0; i < grid.size(); ++i)
    CHECK(p.coefficients[static_cast<std::size_t>(i)] ==
          doctest::Approx(i == 6 ? 1.0 : 0.0).epsilon(1e-9));
}

TEST_CASE("a constant interpolant evaluates to its coefficient") {
  const BasisSequence basis(2, {{BasisFamily::Monomial, {0, 0}}});
  const NodeSet nodes(2, {0.3, 0.4});
  const Interpolant p{basis, nodes, {5.0}};
  const double x[] = {-2.0, 7.0};
  CHECK(evaluate(p, x) == doctest::Approx(5.0));
}

TEST_CASE("Smolyak interpolation is exact on a member of its span") {
  const auto grid = smolyak_sequence(2, 2);
  std::vector<double> f(static_cast<std::size_t>(grid.size()));
  for (int i = 0; i < grid.size(); ++i)
    f[static_cast<std::size_t>(i)] = chebyshev_eval(4, grid.nodes.point(i)[0]);
  const auto p = fit(grid.basis, grid.nodes, f);

  Xorshift64Star rng(401);
  for (int s = 0; s < 30; ++s) {
    const double x[] = {2.0 * rng.next_double() - 1.0, 2.0 * rng.next_double() - 1.0};
    CHECK(evaluate(p, x) == doctest::Approx(chebyshev_eval(4, x[0])).epsilon(1e-8));
  }
}

TEST_CASE("interpolation reproduces random span elements on the hull") {
  Xorshift64Star rng(402);
  const auto setup = random_planar_setup(rng);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<double> c(5);
    for (double& v : c) v = 2.0 * rng.next_double() - 1.0;
    const Interpolant target{setup.basis, setup.nodes, c};

    std::vector<double> f(5);
    for (int i = 0; i < 5; ++i) f[static_cast<std::size_t>(i)] = evaluate(target, setup.nodes.point(i));
    const auto p = fit(setup.basis, setup.nodes, f);

    for (int s = 0; s < 100; ++s) {
      const auto x = oracle::random_hull_point(setup.nodes, rng);
      CHECK(evaluate(p, x) == doctest::Approx(evaluate(target, x)).epsilon(1e-8));
    }
  }
}

TEST_CASE("cardinal functions on the univariate linear case") {
  const auto basis = BasisSequence::total_degree(BasisFamily::Monomial, 1, 1);
  const NodeSet nodes(1, {0.0, 1.0});
  const auto card = cardinal_functions(basis, nodes);
  // l_1 = 1 - x, l_2 = x
  const double x[] = {0.3};
  const auto l = card.values(x);
  CHECK(l[0] == doctest::Approx(0.7));
  CHECK(l[1] == doctest::Approx(0.3));
}

TEST_CASE("the middle quadratic cardinal function is 1 - x^2") {
  const auto basis = BasisSequence::total_degree(BasisFamily::Monomial, 1, 2);
  const NodeSet nodes(1, {-1.0, 0.0, 1.0});
  const auto card = cardinal_functions(basis, nodes);
  for (double x = -1.0; x <= 1.0; x += 0.125) {
    const double pt[] = {x};
    CHECK(card.values(pt)[1] == doctest::Approx(1.0 - x * x).epsilon(1e-12));
  }
}

TEST_CASE("cardinal functions satisfy the delta property and sum to one at nodes") {
  Xorshift64Star rng(403);
  const auto setup = random_planar_setup(rng);
  const auto card = cardinal_functions(setup.basis, setup.nodes);
  for (int j = 0; j < 5; ++j) {
    const auto l = card.values(setup.nodes.point(j));
    double sum = 0.0;
    for (int i = 0; i < 5; ++i) {
      CHECK(std::fabs(l[static_cast<std::size_t>(i)] - (i == j ? 1.0 : 0.0)) <= 1e-8);
      sum += l[static_cast<std::size_t>(i)];
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-8));
  }
}

TEST_CASE("add_node rebuilds the linear cardinal pair from a constant") {
  const BasisSequence basis(1, {{BasisFamily::Monomial, {0}}});
  const NodeSet nodes(1, {0.0});
  const auto card = cardinal_functions(basis, nodes);

  const double new_node[] = {1.0};
  const auto enlarged = add_node(card, new_node, {BasisFamily::Monomial, {1}});
  const double x[] = {0.25};
  const auto l = enlarged.values(x);
  CHECK(l[0] == doctest::Approx(0.75));
  CHECK(l[1] == doctest::Approx(0.25));
}

TEST_CASE("add_node agrees with the freshly inverted enlarged system") {
  const auto basis = BasisSequence::total_degree(BasisFamily::Monomial, 1, 1);
  const NodeSet nodes(1, {0.0, 1.0});
  const auto card = cardinal_functions(basis, nodes);

  const double new_node[] = {0.5};
  const BasisFunction new_phi{BasisFamily::Monomial, {2}};
  const auto updated = add_node(card, new_node, new_phi);

  const auto direct = cardinal_functions(BasisSequence::total_degree(BasisFamily::Monomial, 1, 2),
                                         NodeSet(1, {0.0, 1.0, 0.5}));
  Xorshift64Star rng(404);
  for (int s = 0; s < 50; ++s) {
    const double x[] = {rng.next_double()};
    const auto lu = updated.values(x);
    const auto ld = direct.values(x);
    for (int i = 0; i < 3; ++i)
      CHECK(lu[static_cast<std::size_t>(i)] == doctest::Approx(ld[static_cast<std::size_t>(i)]).epsilon(1e-8));
  }
  CHECK(updated.det_v() == doctest::Approx(determinant(build_square(direct.basis(), direct.nodes()))).epsilon(1e-10));
}

TEST_CASE("add_node in two dimensions matches direct inversion on random systems") {
  Xorshift64Star rng(405);
  const auto setup = random_planar_setup(rng);
  const auto card = cardinal_functions(setup.basis, setup.nodes);

  const auto interior = oracle::random_hull_point(setup.nodes, rng);
  const BasisFunction new_phi{BasisFamily::Monomial, {0, 2}};
  const auto updated = add_node(card, interior, new_phi);

  std::vector<BasisFunction> funcs = setup.basis.functions();
  funcs.push_back(new_phi);
  const auto direct = cardinal_functions(BasisSequence(2, std::move(funcs)),
                                         setup.nodes.with_point(interior));
  for (int s = 0; s < 50; ++s) {
    const auto x = oracle::random_hull_point(setup.nodes, rng);
    const auto lu = updated.values(x);
    const auto ld = direct.values(x);
    for (int i = 0; i < 6; ++i)
      CHECK(lu[static_cast<std::size_t>(i)] == doctest::Approx(ld[static_cast<std::size_t>(i)]).epsilon(1e-8));
  }
}

TEST_CASE("add_node rejects duplicate nodes and duplicate basis functions") {
  const BasisSequence basis(1, {{BasisFamily::Monomial, {0}}});
  const NodeSet nodes(1, {0.0});
  const auto card = cardinal_functions(basis, nodes);

  const double same_node[] = {0.0};
  CHECK_THROWS_AS(add_node(card, same_node, BasisFunction{BasisFamily::Monomial, {1}}),
                  InvalidNodeSetError);

  const double new_node[] = {1.0};
  CHECK_THROWS_AS(add_node(card, new_node, BasisFunction{BasisFamily::Monomial, {0}}),
                  DimensionError);
}

TEST_CASE("add_node reports a vanishing Schur denominator") {
  // Nodes on the parabola x2 = x1^2: the function x1^2 agrees with x2
  // everywhere on the node set and at the new node, so the bordered system
  // is singular.
  const BasisSequence basis(2, {{BasisFamily::Monomial, {0, 0}}, {BasisFamily::Monomial, {0, 1}}});
  const NodeSet nodes(2, {0.0, 0.0, 1.0, 1.0});
  const auto card = cardinal_functions(basis, nodes);
  const double new_node[] = {0.5, 0.25};
  CHECK_THROWS_AS(add_node(card, new_node, BasisFunction{BasisFamily::Monomial, {2, 0}}),
                  EnlargedSystemSingularError);
}

TEST_CASE("schur_border_det vanishes at existing nodes") {
  Xorshift64Star rng(406);
  const auto setup = random_planar_setup(rng);
  const auto card = cardinal_functions(setup.basis, setup.nodes);
  const BasisFunction border{BasisFamily::Monomial, {0, 2}};

  std::vector<double> border_at_nodes(5);
  for (int i = 0; i < 5; ++i)
    border_at_nodes[static_cast<std::size_t>(i)] = basis_eval(border, setup.nodes.point(i));

  const auto xk = setup.nodes.point(2);
  const double value = schur_border_det(card, border_at_nodes, basis_eval(border, xk),
                                        basis_eval_vector(setup.basis, xk));
  CHECK(value == doctest::Approx(0.0).epsilon(1e-8));
}

TEST_CASE("schur_border_det on the one-node system") {
  const BasisSequence basis(1, {{BasisFamily::Monomial, {0}}});
  const NodeSet nodes(1, {0.0});
  const auto card = cardinal_functions(basis, nodes);
  const std::vector<double> border_at_nodes = {0.0};  // x at node 0
  const std::vector<double> basis_at_x = {1.0};       // constant at x=1
  CHECK(schur_border_det(card, border_at_nodes, 1.0, basis_at_x) == doctest::Approx(1.0));
}

TEST_CASE("schur_border_det equals the directly bordered determinant") {
  Xorshift64Star rng(407);
  const auto trial = BasisSequence::total_degree(BasisFamily::Monomial, 2, 2);
  const auto basis = trial.subset(std::vector<int>{0, 1, 2, 3});
  const BasisFunction border{BasisFamily::Monomial, {1, 1}};

  for (int instance = 0; instance < 5; ++instance) {
    std::vector<double> coords(8);
    for (double& c : coords) c = rng.next_double();
    const NodeSet nodes(2, std::move(coords));
    const auto v = build_square(basis, nodes);
    if (std::fabs(determinant(v)) < 1e-6) continue;
    const auto card = cardinal_functions(basis, nodes);

    std::vector<double> border_at_nodes(4);
    for (int i = 0; i < 4; ++i)
      border_at_nodes[static_cast<std::size_t>(i)] = basis_eval(border, nodes.point(i));

    for (int s = 0; s < 20; ++s) {
      const double x[] = {rng.next_double(), rng.next_double()};
      const auto phis = basis_eval_vector(basis, x);

      DenseMatrix big(5, 5);
      for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) big(i, j) = v(i, j);
        big(i, 4) = phis[static_cast<std::size_t>(i)];
        big(4, i) = border_at_nodes[static_cast<std::size_t>(i)];
      }
      big(4, 4) = basis_eval(border, x);

      const double via_schur =
          schur_border_det(card, border_at_nodes, basis_eval(border, x), phis);
      const double direct = determinant(big);
      CHECK(via_schur == doctest::Approx(direct).epsilon(1e-8));
    }
  }
}

TEST_CASE("the new cardinal function satisfies Cramer's identity") {
  Xorshift64Star rng(408);
  const auto setup = random_planar_setup(rng);
  const auto card = cardinal_functions(setup.basis, setup.nodes);

  const auto interior = oracle::random_hull_point(setup.nodes, rng);
  const BasisFunction new_phi{BasisFamily::Monomial, {0, 2}};
  const auto updated = add_node(card, interior, new_phi);

  std::vector<double> border_at_nodes(5);
  for (int i = 0; i < 5; ++i)
    border_at_nodes[static_cast<std::size_t>(i)] = basis_eval(new_phi, setup.nodes.point(i));

  for (int s = 0; s < 20; ++s) {
    const auto x = oracle::random_hull_point(setup.nodes, rng);
    const double lhs = updated.values(x)[5] * updated.det_v();
    const double rhs = schur_border_det(card, border_at_nodes, basis_eval(new_phi, x),
                                        basis_eval_vector(setup.basis, x));
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-8));
  }
}
