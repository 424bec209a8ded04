#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "oracles.hpp"

using namespace gfc;
using namespace gfc::testing;

TEST_CASE("blade basics") {
  const Blade b = Blade::from_indices(std::vector<int>{3, 1});
  CHECK(b.mask() == 0b101u);
  CHECK(b.grade() == 2);
  CHECK(b.indices() == std::vector<int>{1, 3});
  CHECK(b.contains(3));
  CHECK_FALSE(b.contains(2));
  CHECK(b.fits(3));
  CHECK_FALSE(b.fits(2));
  CHECK(Blade::full(16).grade() == 16);
  CHECK(Blade{}.is_scalar());
  CHECK_THROWS_AS(Blade::generator(0), DomainError);
  CHECK_THROWS_AS(Blade::generator(17), DomainError);
  CHECK_THROWS_AS(Blade::from_indices(std::vector<int>{2, 2}), DomainError);
}

TEST_CASE("blade names") {
  CHECK(to_string(Blade{}, 3) == "Id");
  CHECK(to_string(Blade(0b11), 3) == "e12");
  CHECK(to_string(Blade::generator(12), 12) == "e12");
  CHECK(to_string(Blade::from_indices(std::vector<int>{1, 12}), 12) == "e{1,12}");
}

TEST_CASE("merge sign agrees with the bubble-sort parity for every disjoint pair, n = 6") {
  for (Blade a : basis(6)) {
    for (Blade b : basis(6)) {
      if (!a.disjoint(b)) continue;
      CHECK(merge_sign(a, b) == normalize_word(concat(a.indices(), b.indices()))->sign);
    }
  }
}

TEST_CASE("wedge examples") {
  const int n = 3;
  const MV e1 = MV::generator(n, 1);
  const MV e2 = MV::generator(n, 2);
  CHECK(wedge(e1, e1).is_zero());
  CHECK(wedge(e2, e1) == make(n, {{{1, 2}, Q(-1)}}));
  const MV one = MV::scalar(n, Q(1));
  CHECK(wedge(one + e1, one + e2) == make(n, {{{}, Q(1)}, {{1}, Q(1)}, {{2}, Q(1)}, {{1, 2}, Q(1)}}));
}

TEST_CASE("wedge associativity, exhaustive on blades, n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    for (Blade a : basis(n)) {
      for (Blade b : basis(n)) {
        const MV ab = wedge(MV::blade(n, a), MV::blade(n, b));
        CHECK(ab == wedge_oracle(MV::blade(n, a), MV::blade(n, b)));
        for (Blade c : basis(n)) {
          const MV x = MV::blade(n, a), y = MV::blade(n, b), z = MV::blade(n, c);
          if (wedge(wedge(x, y), z) != wedge(x, wedge(y, z))) FAIL("non-associative");
        }
        for (const auto& [r, coeff] : ab.terms()) CHECK(r.grade() == a.grade() + b.grade());
      }
    }
  }
}

TEST_CASE("wedge of a permuted word equals parity times the ascending wedge") {
  Random rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int len = rng.integer(1, 6);
    std::vector<int> word(6);
    std::iota(word.begin(), word.end(), 1);
    std::shuffle(word.begin(), word.end(), rng.engine());
    word.resize(len);
    MV product = MV::scalar(6, Q(1));
    for (int i : word) product = wedge(product, MV::generator(6, i));
    int inversions = 0;
    for (int i = 0; i < len; ++i) {
      for (int j = i + 1; j < len; ++j) inversions += word[i] > word[j];
    }
    std::vector<int> sorted = word;
    std::sort(sorted.begin(), sorted.end());
    CHECK(product == MV::blade(6, Blade::from_indices(sorted), Q(inversions % 2 ? -1 : 1)));
  }
}

TEST_CASE("grade projection") {
  const int n = 2;
  const MV x = make(n, {{{}, Q(1)}, {{1}, Q(1)}, {{1, 2}, Q(1)}});
  CHECK(grade_project(x, 1) == MV::generator(n, 1));
  CHECK(grade_project(make(n, {{{1, 2}, Q(1)}}), 0).is_zero());
  CHECK(grade_project(make(n, {{{1, 2}, Q(1)}}), 2) == make(n, {{{1, 2}, Q(1)}}));
  CHECK_THROWS_AS(grade_project(x, 3), DomainError);
  CHECK_THROWS_AS(grade_project(x, -1), DomainError);
  for (int k = 0; k <= n; ++k) CHECK(grade_project(MV(n), k).is_zero());
  Random rng(12);
  for (int i = 0; i < 50; ++i) {
    const MV u = rng.multivector(4, 6);
    MV sum(4);
    for (int k = 0; k <= 4; ++k) sum += grade_project(u, k);
    CHECK(sum == u);
  }
}

TEST_CASE("grade involution") {
  const int n = 2;
  CHECK(grade_involution(MV::generator(n, 1)) == -MV::generator(n, 1));
  CHECK(grade_involution(make(n, {{{1, 2}, Q(1)}})) == make(n, {{{1, 2}, Q(1)}}));
  CHECK(grade_involution(make(n, {{{}, Q(1)}, {{1}, Q(1)}, {{1, 2}, Q(1)}})) ==
        make(n, {{{}, Q(1)}, {{1}, Q(-1)}, {{1, 2}, Q(1)}}));
  Random rng(13);
  for (int i = 0; i < 50; ++i) {
    const MV u = rng.multivector(4);
    CHECK(grade_involution(grade_involution(u)) == u);
  }
}

TEST_CASE("graded switch") {
  const int n = 3;
  CHECK(graded_switch(make_tensor(n, {{{1}, {2}, Q(1)}})) == make_tensor(n, {{{2}, {1}, Q(-1)}}));
  CHECK(graded_switch(make_tensor(n, {{{}, {1}, Q(1)}})) == make_tensor(n, {{{1}, {}, Q(1)}}));
  CHECK(graded_switch(make_tensor(n, {{{1, 2}, {3}, Q(1)}})) == make_tensor(n, {{{3}, {1, 2}, Q(1)}}));
  Random rng(14);
  for (int i = 0; i < 50; ++i) {
    const T2 t = tensor(rng.multivector(4), rng.multivector(4));
    CHECK(graded_switch(graded_switch(t)) == t);
  }
}

TEST_CASE("module axioms") {
  Random rng(15);
  for (int i = 0; i < 100; ++i) {
    const MV u = rng.multivector(4), v = rng.multivector(4), w = rng.multivector(4);
    const Q a = rng.scalar(), b = rng.scalar();
    CHECK(u + v == v + u);
    CHECK((u + v) + w == u + (v + w));
    CHECK(u - u == MV(4));
    CHECK((u + v) * a == u * a + v * a);
    CHECK(u * (a + b) == u * a + u * b);
    CHECK(u * (a * b) == (u * a) * b);
    CHECK(wedge(u, v + w) == wedge(u, v) + wedge(u, w));
  }
}

TEST_CASE("zero coefficients are never stored") {
  MV u(3);
  u.add_term(Blade(1), Q(2));
  u.add_term(Blade(1), Q(-2));
  CHECK(u.is_zero());
  u.add_term(Blade(2), Q(0));
  CHECK(u.size() == 0);
}

TEST_CASE("signature checks") {
  CHECK_THROWS_AS(wedge(MV(2), MV(3)), SignatureMismatch);
  CHECK_THROWS_AS(MV(2) + MV(3), SignatureMismatch);
  CHECK_THROWS_AS(MV(0), DomainError);
  CHECK_THROWS_AS(MV(17), DomainError);
  CHECK_THROWS_AS(MV::generator(2, 3), DomainError);
  MV u(2);
  CHECK_THROWS_AS(u.add_term(Blade(4), Q(1)), DomainError);
  CHECK(make_signature(4).dim == 4);
}

TEST_CASE("float coefficients follow the same algebra") {
  using MD = Multivector<double>;
  const MD a = MD::generator(2, 1) * 0.5;
  const MD b = MD::generator(2, 2) * 4.0;
  CHECK(wedge(a, b).coefficient(Blade(3)) == 2.0);
  CHECK(wedge(b, a).coefficient(Blade(3)) == -2.0);
}
