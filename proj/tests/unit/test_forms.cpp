#include "doctest.h"
#include "laws.hpp"

using namespace gfc;
using namespace gfc::testing;

namespace {

SquareMatrix<Q> rows(std::vector<std::vector<Q>> r) { return SquareMatrix<Q>(std::move(r)); }

// B^∧ by the Leibniz sum over the reversed-row matrix.
Q extended_oracle(const SquareMatrix<Q>& m, Blade a, Blade b) {
  const auto ia = a.indices();
  const auto ib = b.indices();
  std::vector<std::vector<Q>> k;
  for (auto it = ia.rbegin(); it != ia.rend(); ++it) {
    std::vector<Q> row;
    for (int j : ib) row.push_back(m(*it, j));
    k.push_back(std::move(row));
  }
  return leibniz_det(k);
}

}  // namespace

TEST_CASE("extend_form examples") {
  Random rng(41);
  const SquareMatrix<Q> m = rng.matrix(3);
  const ExtendedForm<Q> f = extend_form(BilinearForm<Q>(m));
  CHECK(f(Blade{}, Blade{}) == Q(1));
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) CHECK(f(Blade::generator(i), Blade::generator(j)) == m(i, j));
  }
  const ExtendedForm<Q> id = extend_form(BilinearForm<Q>(SquareMatrix<Q>::identity(2)));
  CHECK(id(Blade(3), Blade(3)) == Q(-1));
}

TEST_CASE("eval_extended examples") {
  const Q a(2), b(3), c(5), d(7);
  const ExtendedForm<Q> f = extend_form(BilinearForm<Q>(rows({{a, b}, {c, d}})));
  const int n = 2;
  CHECK(eval_extended(f, MV::generator(n, 1), make(n, {{{1, 2}, Q(1)}})) == Q(0));
  CHECK(eval_extended(f, MV::generator(n, 1) * Q(2), MV::generator(n, 2) * Q(3)) == Q(6) * b);
  CHECK(eval_extended(f, make(n, {{{1, 2}, Q(1)}}), make(n, {{{1, 2}, Q(1)}})) == b * c - a * d);
  CHECK_THROWS_AS(eval_extended(f, MV(3), MV(3)), SignatureMismatch);
}

TEST_CASE("B^∧ matches the Leibniz oracle and vanishes across grades, n <= 4") {
  Random rng(42);
  for (int n = 1; n <= 4; ++n) {
    for (int k = 0; k < 4; ++k) {
      const SquareMatrix<Q> m = rng.form_matrix(n, k);
      const ExtendedForm<Q> f = extend_form(BilinearForm<Q>(m));
      for (Blade a : basis(n)) {
        for (Blade b : basis(n)) {
          if (a.grade() != b.grade()) {
            CHECK(f(a, b) == Q(0));
          } else {
            CHECK(f(a, b) == extended_oracle(m, a, b));
          }
        }
      }
    }
  }
}

TEST_CASE("Laplace consistency: B^∧ equals ε of the iterated Chevalley contraction") {
  Random rng(43);
  for (int n = 1; n <= 4; ++n) {
    for (int k = 0; k < 4; ++k) {
      const BilinearForm<Q> b(rng.form_matrix(n, k));
      const ExtendedForm<Q> f(b);
      for (Blade x : basis(n)) {
        for (Blade y : basis(n)) {
          if (x.grade() != y.grade()) continue;
          CHECK(f(x, y) == counit(chevalley_oracle(b, MV::blade(n, x), MV::blade(n, y))));
        }
      }
    }
  }
}

TEST_CASE("identity form: B^∧(e_I, e_I) = (-1)^{r(r-1)/2}") {
  for (int n = 1; n <= 4; ++n) {
    const ExtendedForm<Q> f = extend_form(BilinearForm<Q>(SquareMatrix<Q>::identity(n)));
    for (Blade a : basis(n)) {
      const int r = a.grade();
      CHECK(f(a, a) == Q((r * (r - 1) / 2) % 2 ? -1 : 1));
    }
  }
}

TEST_CASE("degenerate forms are legal") {
  const ExtendedForm<Q> zero = extend_form(BilinearForm<Q>(SquareMatrix<Q>(3)));
  CHECK(zero(Blade(3), Blade(3)) == Q(0));
  CHECK(zero(Blade{}, Blade{}) == Q(1));
  const ExtendedForm<Q> rank1 = extend_form(BilinearForm<Q>(rows({{1, 2}, {2, 4}})));
  CHECK(rank1(Blade(3), Blade(3)) == Q(0));
}

TEST_CASE("extend_coscalar examples") {
  const int n = 2;
  CHECK(extend_coscalar(Coscalar<Q>(SquareMatrix<Q>(n))) == make_tensor(n, {{{}, {}, Q(1)}}));
  const Q c(5);
  CHECK(extend_coscalar(Coscalar<Q>(rows({{0, c}, {0, 0}}))) ==
        make_tensor(n, {{{}, {}, Q(1)}, {{1}, {2}, c}}));
  // (1/2) C·C on the generic 2×2 coscalar: the four products C_ij C_kl
  // (e_i ⊗ e_j)(e_k ⊗ e_l) = -(e_i ∧ e_k) ⊗ (e_j ∧ e_l) collapse onto e12 ⊗ e12
  // with coefficient -(C11 C22 - C12 C21) = -det C.
  const Q c11(1), c12(2), c21(3), c22(4);
  const T2 ext = extend_coscalar(Coscalar<Q>(rows({{c11, c12}, {c21, c22}})));
  const Q kappa = -(c11 * c22 - c12 * c21);
  CHECK(ext == make_tensor(n, {{{}, {}, Q(1)},
                               {{1}, {1}, c11},
                               {{1}, {2}, c12},
                               {{2}, {1}, c21},
                               {{2}, {2}, c22},
                               {{1, 2}, {1, 2}, kappa}}));
}

TEST_CASE("extend_coscalar pairs equal grades and stays inside the algebra") {
  Random rng(44);
  for (int n = 1; n <= 4; ++n) {
    const T2 ext = extend_coscalar(Coscalar<Q>(rng.matrix(n)));
    for (const auto& [k, c] : ext.terms()) {
      CHECK(k[0].grade() == k[1].grade());
      CHECK(k[0].fits(n));
    }
  }
}

TEST_CASE("coscalar extension needs exact scalars") {
  const Coscalar<double> c(std::vector<std::vector<double>>{{1.0}});
  CHECK_THROWS_AS(extend_coscalar(c), UnsupportedScalarMode);
}

TEST_CASE("general_bf") {
  const int n = 2;
  GeneralBF<Q> counit_pairing = general_bf<Q>(n, {{{Blade{}, Blade{}}, Q(1)}});
  Random rng(45);
  for (int i = 0; i < 20; ++i) {
    const MV u = rng.multivector(n);
    const MV v = rng.multivector(n);
    CHECK(clifford_product<Q>(counit_pairing, u, v) == wedge(u, v));
  }
  counit_pairing.set(Blade(1), Blade(1), Q(0));
  CHECK(counit_pairing.table().size() == 1);
  CHECK_THROWS_AS(counit_pairing.set(Blade(4), Blade(1), Q(1)), DomainError);
}

TEST_CASE("non-square matrices are rejected") {
  CHECK_THROWS_AS(rows({{1, 2}, {3}}), DomainError);
}

TEST_CASE("memo cache fills once per pair") {
  const ExtendedForm<Q> f = extend_form(BilinearForm<Q>(SquareMatrix<Q>::identity(3)));
  CHECK(f.cached_entries() == 0);
  (void)f(Blade(3), Blade(3));
  (void)f(Blade(3), Blade(3));
  CHECK(f.cached_entries() == 1);
  const ExtendedForm<Q> copy = f;
  (void)copy(Blade(5), Blade(3));
  CHECK(f.cached_entries() == 2);
}

TEST_CASE("float forms use pivoted elimination") {
  const ExtendedForm<double> f =
      extend_form(BilinearForm<double>(std::vector<std::vector<double>>{{0.0, 2.0}, {3.0, 0.5}}));
  // reversed rows: det [[3, 0.5], [0, 2]] = 6
  CHECK(f(Blade(3), Blade(3)) == doctest::Approx(6.0));
}
