#include <doctest.h>

#include "oracles.hpp"
#include "tlq/errors.hpp"

using namespace tlq;
using namespace tlq::testing;

namespace {

const Field kGeneric = Field::generic();

ObjectSeq S(const char* text) { return ObjectSeq::parse(text); }

// Number of k with a (n,m) -> (k) hom: |n-m| <= k <= n+m, same parity.
int lem2_dim(int n, int m, int k) {
  return (k >= std::abs(n - m) && k <= n + m && (n + m - k) % 2 == 0) ? 1 : 0;
}

}  // namespace

TEST_CASE("object sequences") {
  CHECK(S("1,2").colors() == std::vector<int>{1, 2});
  CHECK(S("(1, 2)").colors() == std::vector<int>{1, 2});
  CHECK(S("").empty());
  CHECK(S("()").empty());
  CHECK(S("0").empty());
  CHECK(S("0,2,0").colors() == std::vector<int>{2});
  CHECK(S("1,2,3").dual() == S("3,2,1"));
  CHECK(S("2,3").strands() == 5);
  CHECK(S("2,1").block_of_strand() == std::vector<int>{0, 0, 1});
  CHECK(S("1,2").to_string() == "(1,2)");
  CHECK(S("").to_string() == "()");
  CHECK_THROWS_AS(S("1,,2"), ParseError);
  CHECK_THROWS_AS(S("1,x"), ParseError);
  CHECK_THROWS_AS(S("-1"), ParseError);
  CHECK_THROWS_AS(S("2").validate(Field::root(3)), InvalidArgument);
  CHECK_NOTHROW(S("3").validate(Field::root(5)));
}

TEST_CASE("hat") {
  CHECK(hat(TLMorphism::identity(2, kGeneric), S("1,1"), S("1,1")).value == TLMorphism::identity(2, kGeneric));
  CHECK(hat(TLMorphism::e_generator(1, 2, kGeneric), S("2"), S("2")).value.is_zero());
  CHECK(hat(TLMorphism::identity(2, kGeneric), S("2"), S("2")).value == jones_wenzl(2, kGeneric));
  CHECK_THROWS_AS(hat(TLMorphism::identity(2, kGeneric), S("1"), S("1")), ArityMismatch);
  std::mt19937 rng(17);
  for (int trial = 0; trial < 15; ++trial) {
    const ObjectSeq s = random_object(rng, 4, 3), t = random_object(rng, 4, 3);
    if ((s.strands() + t.strands()) % 2) continue;
    const TLMorphism g = random_morphism(rng, s.strands(), t.strands(), kGeneric);
    const TLMorphism h = hat(g, s, t).value;
    CHECK(hat(h, s, t).value == h);
  }
}

TEST_CASE("good-type diagrams") {
  const auto d = good_type_diagrams(S("1,1"), S("2"));
  REQUIRE(d.size() == 1);
  CHECK(d[0].is_identity());
  CHECK(good_type_diagrams(S("2"), S("")).empty());
  CHECK(good_type_diagrams(S("1,1,1,1"), S("")).size() == 2);
  CHECK(good_type_diagrams(S("1"), S("2")).empty());
}

TEST_CASE("good type means nonzero after hatting") {
  // A simple diagram is good exactly when f_t D f_s != 0.
  for (const ObjectSeq& s : all_objects(4, 3)) {
    for (const ObjectSeq& t : all_objects(4, 3)) {
      if ((s.strands() + t.strands()) % 2 || s.strands() + t.strands() > 6) continue;
      const auto good = good_type_diagrams(s, t);
      for (const SimpleDiagram& d : enumerate_simple(s.strands(), t.strands())) {
        const bool is_good = std::find(good.begin(), good.end(), d) != good.end();
        CHECK(is_good == !hat(TLMorphism(d, kGeneric), s, t).value.is_zero());
      }
    }
  }
}

TEST_CASE("hom bases") {
  for (int n = 1; n <= 6; ++n) {
    for (int m = 1; m <= 6 - n + 2 && m <= 6; ++m) {
      for (int k = 0; k <= 6; ++k) {
        if (n + m + k > 12) continue;
        CAPTURE(n);
        CAPTURE(m);
        CAPTURE(k);
        const ObjectSeq s({n, m}), t({k});
        CHECK(static_cast<int>(good_type_diagrams(s, t).size()) == lem2_dim(n, m, k));
      }
    }
  }
  const auto unit = hom_basis(S(""), S(""), kGeneric);
  REQUIRE(unit.size() == 1);
  CHECK(unit[0].value == TLMorphism::identity(0, kGeneric));
  CHECK(hom_basis(S("1"), S("2"), kGeneric).empty());
  // Absorption.
  for (const HattedMorphism& h : hom_basis(S("2,1"), S("1,2"), kGeneric)) {
    CHECK(compose(jw_tensor({1, 2}, kGeneric), compose(h.value, jw_tensor({2, 1}, kGeneric))) == h.value);
  }
}

TEST_CASE("d_nmj") {
  CHECK(d_nmj(2, 3, 0) == SimpleDiagram::identity(5));
  CHECK(d_nmj(1, 1, 1) == SimpleDiagram::cap());
  const SimpleDiagram d = d_nmj(2, 2, 1);
  CHECK(d.to_string() == "[5,3,2,6,1,4]");
  CHECK(std::find(enumerate_simple(4, 2).begin(), enumerate_simple(4, 2).end(), d) != enumerate_simple(4, 2).end());
  CHECK_THROWS_AS(d_nmj(1, 2, 2), InvalidArgument);
  // D_{n,m,j} is the good-type diagram (n,m) -> (n+m-2j).
  for (int n = 1; n <= 4; ++n) {
    for (int m = 1; m <= 4; ++m) {
      for (int j = 0; j <= std::min(n, m); ++j) {
        const auto good = good_type_diagrams(ObjectSeq({n, m}), ObjectSeq({n + m - 2 * j}));
        REQUIRE(good.size() == 1);
        CHECK(good[0] == d_nmj(n, m, j));
      }
    }
  }
}

TEST_CASE("recursive basis of Hom(s, (k))") {
  // Every good-type diagram s -> (k) factors as D_{b,n_last,l} ∘ (D' ⊗ id)
  // with D' good-type from s minus its last block to some (b); the set of
  // such composites is exactly good_type_diagrams(s, (k)).
  for (const ObjectSeq& s : all_objects(6, 3)) {
    if (s.length() < 2) continue;
    std::vector<int> head(s.colors().begin(), s.colors().end() - 1);
    const int last = s.colors().back();
    const ObjectSeq sh(head);
    for (int k = 0; k <= s.strands(); ++k) {
      std::vector<SimpleDiagram> built;
      for (int b = 0; b <= sh.strands(); ++b) {
        for (const SimpleDiagram& dp : good_type_diagrams(sh, ObjectSeq({b}))) {
          if ((b + last - k) % 2) continue;
          const int l = (b + last - k) / 2;
          if (l < 0 || l > std::min(b, last)) continue;
          const SimpleDiagram outer = b == 0 ? SimpleDiagram::identity(last) : d_nmj(b, last, l);
          const Stacked st = stack(outer, juxtapose(dp, SimpleDiagram::identity(last)));
          CHECK(st.loops == 0);
          built.push_back(st.diagram);
        }
      }
      std::sort(built.begin(), built.end());
      CAPTURE(s.to_string());
      CAPTURE(k);
      CHECK(built == good_type_diagrams(s, ObjectSeq({k})));
    }
  }
}

TEST_CASE("ribbon data") {
  const RibbonData r = ribbon_data(S("1"), S(""), kGeneric);
  CHECK(r.braiding == TLMorphism::identity(1, kGeneric));
  CHECK(r.twist == kGeneric.a_pow(3) * TLMorphism::identity(1, kGeneric));
  for (const char* text : {"2", "1,2", "2,1"}) {
    const ObjectSeq s = S(text);
    const RibbonData d = ribbon_data(s, s, kGeneric);
    const int n = s.strands();
    const TLMorphism fs = jw_tensor(s.colors(), kGeneric);
    const TLMorphism fsd = jw_tensor(s.dual().colors(), kGeneric);
    CHECK(compose(tensor(fs, d.ev), tensor(d.coev, fs)) == fs);
    CHECK(compose(tensor(d.ev, fsd), tensor(fsd, d.coev)) == fsd);
    CHECK(d.twist.inputs() == n);
  }
}

TEST_CASE("Gram matrices") {
  const Matrix g1 = gram_matrix(S("1"), S("1"), kGeneric);
  REQUIRE(g1.rows() == 1);
  CHECK(g1(0, 0) == -kGeneric.delta());  // trace sign: see decisions
  CHECK(gram_matrix(S("1"), S("2"), kGeneric).empty());
  CHECK(rank(gram_matrix(S("1,1"), S("1,1"), kGeneric)) == 2);
  CHECK(purified_hom_dim(S("1,1"), S("1,1"), kGeneric) == 2);
  CHECK(purified_hom_dim(S("1,1"), S("1,1"), Field::root(3)) == 1);
  CHECK(purified_hom_dim(S(""), S(""), kGeneric) == 1);
  // Entries agree with closure_trace on the hatted composites.
  const ObjectSeq s = S("1,2"), t = S("2,1");
  const Matrix g = gram_matrix(s, t, kGeneric);
  const auto left = hom_basis(s, t, kGeneric);
  const auto right = hom_basis(t, s, kGeneric);
  for (std::size_t i = 0; i < left.size(); ++i) {
    for (std::size_t j = 0; j < right.size(); ++j) {
      CHECK(g(static_cast<int>(i), static_cast<int>(j)) == closure_trace(compose(left[i].value, right[j].value)));
    }
  }
}

TEST_CASE("purified dimension at roots never exceeds the generic one") {
  for (int r = 3; r <= 5; ++r) {
    const Field f = Field::root(r);
    for (const ObjectSeq& s : all_objects(4, r - 2)) {
      for (const ObjectSeq& t : all_objects(4, r - 2)) {
        if ((s.strands() + t.strands()) % 2 || s.strands() + t.strands() > 6) continue;
        const Matrix g = gram_matrix(s, t, f);
        const int rk = rank(g);
        CHECK(rk <= static_cast<int>(good_type_diagrams(s, t).size()));
        // Rank does not depend on the order of the basis.
        std::vector<int> rev(static_cast<std::size_t>(g.cols()));
        for (int j = 0; j < g.cols(); ++j) rev[static_cast<std::size_t>(j)] = g.cols() - 1 - j;
        CHECK(rank(g.select_columns(rev)) == rk);
      }
    }
  }
}
