#include <doctest.h>

#include "oracles.hpp"
#include "tlq/errors.hpp"

using namespace tlq;
using namespace tlq::testing;

namespace {

const Field kGeneric = Field::generic();

TLMorphism E(int i, int k) { return TLMorphism::e_generator(i, k, kGeneric); }
TLMorphism Id(int k) { return TLMorphism::identity(k, kGeneric); }

}  // namespace

TEST_CASE("simple diagram validation") {
  CHECK_NOTHROW(SimpleDiagram(2, 2, {1, 0, 3, 2}));
  CHECK_THROWS_AS(SimpleDiagram(2, 2, {3, 2, 1, 0}), InvalidArgument);  // crossing strands
  CHECK_THROWS_AS(SimpleDiagram(1, 2, {1, 0, 2}), InvalidArgument);
  CHECK_THROWS_AS(SimpleDiagram(2, 0, {0, 1}), InvalidArgument);  // fixed points
  CHECK(SimpleDiagram::identity(2).to_string() == "[3,4,1,2]");
  CHECK(SimpleDiagram::e(1, 2).to_string() == "[2,1,4,3]");
  CHECK(SimpleDiagram::cup().to_string() == "[2,1]");
  CHECK(SimpleDiagram::identity(3).through_strands() == 3);
  CHECK(SimpleDiagram::e(1, 3).flipped() == SimpleDiagram::e(1, 3));
}

TEST_CASE("enumeration counts are Catalan numbers") {
  for (int total = 0; total <= 12; ++total) {
    for (int k = 0; k <= total; ++k) {
      const auto& ds = enumerate_simple(k, total - k);
      CHECK(static_cast<long>(ds.size()) == (total % 2 ? 0 : catalan(total / 2)));
    }
  }
  CHECK(enumerate_simple(0, 0).size() == 1);
  CHECK(enumerate_simple(1, 1).front().is_identity());
  const auto& d33 = enumerate_simple(3, 3);
  CHECK(std::is_sorted(d33.begin(), d33.end()));
}

TEST_CASE("composition and loops") {
  const TLMorphism cup(SimpleDiagram::cup(), kGeneric), cap(SimpleDiagram::cap(), kGeneric);
  const TLMorphism circle = compose(cap, cup);
  CHECK(circle.coefficient(SimpleDiagram()) == kGeneric.delta());
  CHECK((kGeneric.delta() * kGeneric.delta()).to_string() == "a^4 + 2 + a^-4");
  CHECK(compose(E(1, 2), E(1, 2)) == kGeneric.delta() * E(1, 2));
  CHECK(compose(Id(3), E(2, 3)) == E(2, 3));
  CHECK_THROWS_AS(compose(Id(2), Id(3)), ArityMismatch);
  CHECK(tensor(Id(1), Id(1)) == Id(2));
  CHECK(tensor(cup, cap) == TLMorphism(SimpleDiagram::e(1, 2), kGeneric));
  CHECK(tensor(E(1, 2), TLMorphism::identity(0, kGeneric)) == E(1, 2));
}

TEST_CASE("Temperley-Lieb relations for k <= 6") {
  const Scalar delta = kGeneric.delta();
  for (int k = 2; k <= 6; ++k) {
    for (int i = 1; i < k; ++i) {
      CHECK(compose(E(i, k), E(i, k)) == delta * E(i, k));
      if (i + 1 < k) {
        CHECK(compose(E(i, k), compose(E(i + 1, k), E(i, k))) == E(i, k));
        CHECK(compose(E(i + 1, k), compose(E(i, k), E(i + 1, k))) == E(i + 1, k));
      }
      for (int j = i + 2; j < k; ++j) CHECK(compose(E(i, k), E(j, k)) == compose(E(j, k), E(i, k)));
    }
  }
}

TEST_CASE("compose and tensor are associative, bilinear and interchange") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const int k = static_cast<int>(rng() % 4), l = static_cast<int>(rng() % 4), m = static_cast<int>(rng() % 4), n = static_cast<int>(rng() % 4);
    if ((k + l) % 2 || (l + m) % 2 || (m + n) % 2) continue;
    const TLMorphism f = random_morphism(rng, m, n, kGeneric);
    const TLMorphism g = random_morphism(rng, l, m, kGeneric);
    const TLMorphism g2 = random_morphism(rng, l, m, kGeneric);
    const TLMorphism h = random_morphism(rng, k, l, kGeneric);
    CHECK(compose(f, compose(g, h)) == compose(compose(f, g), h));
    CHECK(compose(f, g + g2) == compose(f, g) + compose(f, g2));
    CHECK(tensor(f, tensor(g, h)) == tensor(tensor(f, g), h));
    CHECK(tensor(compose(f, g), compose(g, h)) == compose(tensor(f, g), tensor(g, h)));
  }
}

TEST_CASE("generator word parsing") {
  const GeneratorWord w = GeneratorWord::parse("# comment\ncup 1 of 0\n\nx+ 1 of 2\ncap 1 of 2\n");
  CHECK(w.layers().size() == 3);
  CHECK(w.crossings() == 1);
  CHECK(GeneratorWord::parse(w.to_string()).layers() == w.layers());
  try {
    GeneratorWord::parse("cup 1 of 0\nx+ 3 of 2\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(GeneratorWord::parse("cup 1 of 0\ncap 1 of 4\n"), ParseError);
  CHECK_THROWS_AS(GeneratorWord::parse("twist 1 of 2\n"), ParseError);
  CHECK(GeneratorWord::parse("").empty());
}

TEST_CASE("Kauffman resolution") {
  const Scalar a = kGeneric.a_pow(1), ai = kGeneric.a_pow(-1);
  CHECK(resolve(GeneratorWord::parse("x+ 1 of 2"), kGeneric) == a * Id(2) + ai * E(1, 2));
  CHECK(resolve(GeneratorWord::parse("x- 1 of 2"), kGeneric) == ai * Id(2) + a * E(1, 2));
  CHECK(resolve(GeneratorWord::parse("x+ 1 of 2\nx- 1 of 2"), kGeneric) == Id(2));
  // Positive curl closed on one strand.
  const TLMorphism curl = resolve(GeneratorWord::parse("cup 2 of 1\nx+ 1 of 3\ncap 2 of 3"), kGeneric);
  CHECK(curl == -kGeneric.a_pow(3) * Id(1));
}

TEST_CASE("bracket values") {
  CHECK(bracket(GeneratorWord::parse("cup 1 of 0\ncap 1 of 2"), kGeneric).to_string() == "-a^2 - a^-2");
  CHECK(bracket(GeneratorWord(), kGeneric).is_one());
  CHECK(bracket(GeneratorWord::parse("cup 1 of 0\ncup 1 of 2\ncap 1 of 4\ncap 1 of 2"), kGeneric) ==
        kGeneric.delta() * kGeneric.delta());
  const GeneratorWord trefoil =
      GeneratorWord::parse("cup 1 of 0\ncup 1 of 2\nx+ 2 of 4\nx+ 2 of 4\nx+ 2 of 4\ncap 1 of 4\ncap 1 of 2");
  CHECK(bracket(trefoil, kGeneric) == state_sum_bracket(trefoil, kGeneric));
  CHECK(bracket(trefoil, kGeneric).to_string() == "a^7 + a^3 + a^-1 - a^-9");
  CHECK(writhe(trefoil) == 3);
  CHECK_THROWS_AS(bracket(GeneratorWord::parse("x+ 1 of 2"), kGeneric), InvalidArgument);
}

TEST_CASE("bracket agrees with the state sum on random words") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    const GeneratorWord w = random_closed_word(rng, 1 + static_cast<int>(rng() % 3), static_cast<int>(rng() % 7));
    CAPTURE(w.to_string());
    CHECK(bracket(w, kGeneric) == state_sum_bracket(w, kGeneric));
  }
  const Field r5 = Field::root(5);
  for (int trial = 0; trial < 10; ++trial) {
    const GeneratorWord w = random_closed_word(rng, 2, 4);
    CHECK(bracket(w, r5) == state_sum_bracket(w, r5));
  }
}

TEST_CASE("Reidemeister II and III invariance") {
  for (const auto& [x, y] : reidemeister_corpus()) {
    CAPTURE(x.to_string());
    CAPTURE(y.to_string());
    CHECK(bracket(x, kGeneric) == bracket(y, kGeneric));
  }
  // The local moves themselves, before closing up.
  CHECK(resolve(GeneratorWord::parse("x+ 1 of 3\nx+ 2 of 3\nx+ 1 of 3"), kGeneric) ==
        resolve(GeneratorWord::parse("x+ 2 of 3\nx+ 1 of 3\nx+ 2 of 3"), kGeneric));
  CHECK(resolve(GeneratorWord::parse("x- 2 of 3\nx+ 2 of 3"), kGeneric) == Id(3));
}

TEST_CASE("writhe") {
  // Negative curl on an unknot: a single crossing whose strands point the same way.
  CHECK(writhe(GeneratorWord::parse("cup 1 of 0\ncup 1 of 2\nx- 2 of 4\ncap 1 of 4\ncap 1 of 2")) == -1);
  CHECK(writhe(GeneratorWord::parse("cup 1 of 0\ncap 1 of 2")) == 0);
  // Hopf link drawn as a 2-braid closure: both crossings count the same way.
  const GeneratorWord hopf = GeneratorWord::parse("cup 1 of 0\ncup 1 of 2\nx+ 2 of 4\nx+ 2 of 4\ncap 1 of 4\ncap 1 of 2");
  CHECK(std::abs(writhe(hopf)) == 2);
}

TEST_CASE("presentations resolve back to the diagram") {
  for (int total = 0; total <= 8; total += 2) {
    for (int k = 0; k <= total; ++k) {
      for (const SimpleDiagram& d : enumerate_simple(k, total - k)) {
        const GeneratorWord w = presentation(d);
        CHECK(w.crossings() == 0);
        CHECK(resolve(w, kGeneric) == TLMorphism(d, kGeneric));
      }
    }
  }
}
