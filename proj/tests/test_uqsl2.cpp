#include <doctest.h>

#include "oracles.hpp"
#include "tlq/errors.hpp"

using namespace tlq;
using namespace tlq::testing;

namespace {

const Field kGeneric = Field::generic();

TensorVector B(const char* bits) { return TensorVector::from_bits(bits); }

HWVector top(int n) { return {TensorVector::basis(n, 0), n}; }

}  // namespace

TEST_CASE("tensor vectors") {
  CHECK(bitstring(1, 3) == "001");
  CHECK(weight(0b011, 3) == -1);
  const TensorVector v = B("01") + Scalar(2) * B("10");
  CHECK(v.to_string() == "(1)*|01| + (2)*|10|");
  CHECK((v - v).is_zero());
  CHECK(tensor(B("0"), B("1")) == B("01"));
  CHECK(TensorVector::from_column(v.to_column()) == v);
}

TEST_CASE("generator actions") {
  CHECK(act(Generator::kK, B("01"), kGeneric) == B("01"));
  CHECK(act(Generator::kX, B("1"), kGeneric) == B("0"));
  CHECK(act(Generator::kY, B("0"), kGeneric) == B("1"));
  CHECK(act(Generator::kX, B("10"), kGeneric) == kGeneric.q_pow(1) * B("00"));
  CHECK(act_Y_power(0, B("01"), kGeneric) == B("01"));
  CHECK(act_Y_power(1, B("00"), kGeneric) == kGeneric.q_pow(-1) * B("01") + B("10"));
  CHECK(act_Y_power(2, B("0"), kGeneric).is_zero());
}

TEST_CASE("Hopf relations on tensor powers") {
  for (int n = 1; n <= 4; ++n) {
    const Matrix& k = generator_matrix(Generator::kK, n, kGeneric);
    const Matrix& ki = generator_matrix(Generator::kKinv, n, kGeneric);
    const Matrix& x = generator_matrix(Generator::kX, n, kGeneric);
    const Matrix& y = generator_matrix(Generator::kY, n, kGeneric);
    CHECK(k * ki == Matrix::identity(1 << n));
    CHECK(k * x * ki == kGeneric.q_pow(2) * x);
    CHECK(k * y * ki == kGeneric.q_pow(-2) * y);
    CHECK((x * y - y * x) * (kGeneric.q_pow(1) - kGeneric.q_pow(-1)) == k - ki);
  }
}

TEST_CASE("coproduct consistency") {
  // The action on V^{⊗(n+m)} is Δ applied to V^{⊗n} ⊗ V^{⊗m}.
  for (int n = 1; n <= 2; ++n) {
    for (int m = 1; m <= 2; ++m) {
      const Matrix& kn = generator_matrix(Generator::kK, n, kGeneric);
      const Matrix& km = generator_matrix(Generator::kK, m, kGeneric);
      const Matrix& kin = generator_matrix(Generator::kKinv, n, kGeneric);
      const Matrix idn = Matrix::identity(1 << n), idm = Matrix::identity(1 << m);
      CHECK(generator_matrix(Generator::kK, n + m, kGeneric) == kron(kn, km));
      CHECK(generator_matrix(Generator::kX, n + m, kGeneric) ==
            kron(idn, generator_matrix(Generator::kX, m, kGeneric)) + kron(generator_matrix(Generator::kX, n, kGeneric), km));
      CHECK(generator_matrix(Generator::kY, n + m, kGeneric) ==
            kron(kin, generator_matrix(Generator::kY, m, kGeneric)) + kron(generator_matrix(Generator::kY, n, kGeneric), idm));
      for (int i = 0; i <= 3; ++i) {
        for (BasisIndex x = 0; x < (BasisIndex{1} << (n + m)); ++x) {
          TensorVector expected = TensorVector::basis(n + m, x);
          for (int j = 0; j < i; ++j) expected = act(Generator::kY, expected, kGeneric);
          CHECK(act_Y_power(i, TensorVector::basis(n + m, x), kGeneric, n) == expected);
        }
      }
    }
  }
}

TEST_CASE("elementary morphisms") {
  const auto& e = elementary_morphisms(kGeneric);
  CHECK(apply(e.d, B("10")) == -kGeneric.q_pow(-1) * TensorVector::basis(0, 0));
  CHECK(apply(e.d, B("01")) == TensorVector::basis(0, 0));
  CHECK(TensorVector::from_column(e.b) == B("10") - kGeneric.q_pow(1) * B("01"));
  CHECK(e.d * e.b == Matrix::column({-(kGeneric.q_pow(1) + kGeneric.q_pow(-1))}));
  CHECK(e.c == kGeneric.a_pow(1) * Matrix::identity(4) + kGeneric.a_pow(-1) * (e.b * e.d));
  CHECK(e.c == braiding_vv_table(kGeneric));
  CHECK(e.c * e.c_inv == Matrix::identity(4));
  CHECK(e.theta == kGeneric.a_pow(3) * Matrix::identity(2));
  CHECK(e.alpha * e.alpha_inv == Matrix::identity(2));
  CHECK(e.alpha(1, 0).is_one());
  CHECK(e.alpha(0, 1) == -kGeneric.q_pow(-1));
  // d and b are intertwiners.
  const auto& hom20 = rep_hom_basis(2, 0, kGeneric);
  REQUIRE(hom20.size() == 1);
  CHECK(rank(hconcat(hom20[0].transpose(), e.d.transpose())) == 1);
  const auto& hom02 = rep_hom_basis(0, 2, kGeneric);
  REQUIRE(hom02.size() == 1);
  CHECK(rank(hconcat(hom02[0], e.b)) == 1);
}

TEST_CASE("highest weight vectors") {
  const auto h11 = highest_weight_basis(1, 1, kGeneric);
  REQUIRE(h11.size() == 1);
  CHECK(h11[0].vector == B("0"));
  const auto h20 = highest_weight_basis(2, 0, kGeneric);
  REQUIRE(h20.size() == 1);
  const TensorVector expected = B("01") - kGeneric.q_pow(-1) * B("10");
  CHECK(rank(hconcat(h20[0].vector.to_column(), expected.to_column())) == 1);
  CHECK(highest_weight_basis(4, 0, kGeneric).size() == 2);
  // Multiplicities agree with iterated Clebsch-Gordan counting.
  for (int n = 1; n <= 6; ++n) {
    std::map<int, int> mult{{1, 1}};
    for (int step = 2; step <= n; ++step) {
      std::map<int, int> next;
      for (auto [k, c] : mult) {
        for (auto [j, d] : cg_dims(k, 1, kGeneric).multiplicities) next[j] += c * d;
      }
      mult = next;
    }
    for (int k = n % 2; k <= n; k += 2) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(static_cast<int>(highest_weight_basis(n, k, kGeneric).size()) == mult[k]);
    }
  }
}

TEST_CASE("Clebsch-Gordan vectors") {
  CHECK(cg_vector(top(1), top(1), 0, kGeneric).vector == B("00"));
  CHECK(cg_vector(top(1), top(1), 1, kGeneric).vector == B("01") - kGeneric.q_pow(-1) * B("10"));
  for (int n = 1; n <= 4; ++n) {
    for (int m = 1; m <= 4; ++m) {
      for (int p = 0; p <= std::min(n, m); ++p) {
        const HWVector v = cg_vector(top(n), top(m), p, kGeneric);
        CHECK(v.weight == n + m - 2 * p);
        CHECK(!v.vector.is_zero());
        CHECK(act(Generator::kX, v.vector, kGeneric).is_zero());
        CHECK(act(Generator::kK, v.vector, kGeneric) == kGeneric.q_pow(v.weight) * v.vector);
      }
    }
  }
}

TEST_CASE("Clebsch-Gordan dimensions") {
  CHECK(cg_dims(1, 1, kGeneric).multiplicities == std::map<int, int>{{0, 1}, {2, 1}});
  CHECK(!cg_dims(1, 1, kGeneric).negligible);
  const CGDims r3 = cg_dims(1, 1, Field::root(3));
  CHECK(r3.multiplicities == std::map<int, int>{{0, 1}});
  CHECK(r3.negligible);
  CHECK(cg_dims(2, 3, kGeneric).multiplicities == std::map<int, int>{{1, 1}, {3, 1}, {5, 1}});
  CHECK_THROWS_AS(cg_dims(2, 1, Field::root(3)), InvalidArgument);
}

TEST_CASE("intertwiner spaces") {
  CHECK(rep_hom_basis(1, 1, kGeneric).size() == 1);
  CHECK(rep_hom_basis(1, 1, kGeneric)[0] == Matrix::identity(2));
  CHECK(rep_hom_basis(2, 0, kGeneric).size() == 1);
  CHECK(rep_hom_basis(2, 2, kGeneric).size() == 2);
  CHECK(rep_hom_basis(3, 3, kGeneric).size() == 5);
  CHECK(rep_hom_basis(1, 2, kGeneric).empty());
  for (int k = 0; k <= 3; ++k) {
    for (int l = 0; l <= 3; ++l) {
      for (const Matrix& m : rep_hom_basis(k, l, kGeneric)) {
        for (Generator g : {Generator::kK, Generator::kX, Generator::kY}) {
          CHECK(m * generator_matrix(g, k, kGeneric) == generator_matrix(g, l, kGeneric) * m);
        }
      }
    }
  }
}

TEST_CASE("intertwiners at roots preserve weights exactly") {
  // Commuting with K only forces weights to agree modulo 2r; the solutions
  // found nevertheless all preserve weight exactly.
  for (int r = 3; r <= 5; ++r) {
    const Field f = Field::root(r);
    for (int k = 0; k <= 4; ++k) {
      for (int l = 0; k + l <= 6; ++l) {
        CHECK(rep_hom_basis(k, l, f).size() == rep_hom_basis_graded(k, l, f).size());
      }
    }
  }
}

TEST_CASE("highest-weight projectors") {
  CHECK(hw_projector(1, kGeneric) == Matrix::identity(2));
  for (int n = 1; n <= 4; ++n) {
    const Matrix p = hw_projector(n, kGeneric);
    CHECK(p * p == p);
    for (Generator g : {Generator::kK, Generator::kX, Generator::kY}) {
      CHECK(p * generator_matrix(g, n, kGeneric) == generator_matrix(g, n, kGeneric) * p);
    }
    CHECK(rank(p) == n + 1);
  }
  const Matrix p2 = hw_projector(2, kGeneric);
  CHECK(apply(p2, cg_vector(top(1), top(1), 1, kGeneric).vector).is_zero());
  CHECK(apply(p2, B("00")) == B("00"));
}

TEST_CASE("rep-side ribbon structure") {
  CHECK(rep_braiding(1, 1, kGeneric) == elementary_morphisms(kGeneric).c);
  CHECK(rep_twist(1, kGeneric) == elementary_morphisms(kGeneric).theta);
  for (int n = 0; n <= 2; ++n) {
    const Matrix id = Matrix::identity(1 << n);
    CHECK(kron(id, rep_ev(n, kGeneric)) * kron(rep_coev(n, kGeneric), id) == id);
    CHECK(kron(rep_ev(n, kGeneric), id) * kron(id, rep_coev(n, kGeneric)) == id);
  }
}
