#include <doctest.h>

#include <map>
#include <random>

#include "support/random_spec.hpp"
#include "wshift/classifier.hpp"
#include "wshift/fixtures.hpp"

using namespace wshift;

namespace {

Rational sq(const Rational& x) { return x * x; }

WeightSpec constant_spec(const Rational& c) {
  WeightSpec s;
  s.window_values = {c, c};
  s.left_tail = TailSpec::constant(c);
  s.right_tail = TailSpec::constant(c);
  return s;
}

}  // namespace

TEST_CASE("check_hyponormal examples") {
  const HyponormalCheck c2 = check_hyponormal(fixtures::example2());
  REQUIRE(c2.hyponormal);
  CHECK(c2.profile->left.shape == Shape::StrictIncrease);
  CHECK(c2.profile->right.shape == Shape::StrictIncrease);
  CHECK(c2.profile->left.equalities.empty());
  CHECK(c2.profile->right.equalities.empty());
  CHECK_FALSE(c2.profile->first_equality_index);

  const HyponormalCheck c3 = check_hyponormal(fixtures::example3());
  REQUIRE(c3.hyponormal);
  CHECK(c3.profile->left.shape == Shape::Constant);
  CHECK(c3.profile->left.value == 1);
  CHECK(c3.profile->right.shape == Shape::Constant);
  CHECK(c3.profile->right.value == 2);

  WeightSpec bad = fixtures::example3();
  bad.window_values = {Rational(2), Rational(1)};
  bad.right_tail = TailSpec::constant(2);
  const HyponormalCheck cb = check_hyponormal(bad);
  CHECK_FALSE(cb.hyponormal);
  CHECK(cb.witness == 0);
}

TEST_CASE("non-hyponormal witness has the smallest |n|, ties toward negative") {
  WeightSpec s;
  s.window_start = -2;
  // moduli ... 4 | 4 5 4 5 4 | 5 ...: drops at n = -1 and n = 1
  s.window_values = {Rational(4), Rational(5), Rational(4), Rational(5), Rational(4)};
  s.left_tail = TailSpec::constant(4);
  s.right_tail = TailSpec::constant(5);
  const HyponormalCheck c = check_hyponormal(s);
  CHECK_FALSE(c.hyponormal);
  CHECK(c.witness == -1);
  const Verdict v = classify(s);
  CHECK(v.verdict == VerdictClass::NotHyponormal);
  CHECK(v.witness == -1);

  // decreasing right tail
  WeightSpec t = fixtures::example3();
  t.right_tail = TailSpec::rational(RationalFunction(
      Polynomial({Rational(3), Rational(2)}), Polynomial({Rational(0), Rational(1)})));  // 2 + 3/n
  const HyponormalCheck ct = check_hyponormal(t);
  CHECK_FALSE(ct.hyponormal);
  // |beta_1| = 5 > |beta_2| = 7/2
  CHECK(ct.witness == 1);
}

TEST_CASE("fixture verdicts") {
  const Verdict v1 = classify(fixtures::example1());
  CHECK(v1.verdict == VerdictClass::NearSubnormal);
  CHECK(v1.via == TheoremTag::Theorem2);
  CHECK(v1.k == 0);
  CHECK(v1.certificate.gamma.left_limit->value == 0);
  CHECK(v1.certificate.gamma.sup_gamma_sq == Rational(4));
  CHECK(v1.certificate.gamma.sup_argmax == -1);
  CHECK(v1.certificate.gamma.flat_zero_from == 0);

  const Verdict v2 = classify(fixtures::example2());
  CHECK(v2.verdict == VerdictClass::NearSubnormal);
  CHECK(v2.via == TheoremTag::Theorem1);
  CHECK(v2.certificate.gamma.right_limit->value == 4);
  CHECK(v2.certificate.gamma.left_limit->value == 0);

  const Verdict v3 = classify(fixtures::example3());
  CHECK(v3.verdict == VerdictClass::HyponormalNotNearSubnormal);
  CHECK(v3.via == TheoremTag::Theorem3);
  CHECK(v3.witness == 1);

  const Verdict v4 = classify(fixtures::theorem4());
  CHECK(v4.verdict == VerdictClass::HyponormalNotNearSubnormal);
  CHECK(v4.via == TheoremTag::Theorem4);
  CHECK(v4.j0 == 0);
  CHECK(v4.obstruction == 1);
}

TEST_CASE("constant sequences are normal") {
  const Verdict v = classify(constant_spec(Rational(3, 2)));
  CHECK(v.verdict == VerdictClass::Normal);
  CHECK(v.via == TheoremTag::None);
}

TEST_CASE("example 3 for other lambda < mu") {
  for (auto [l, m] : {std::pair{Rational(1, 3), Rational(1, 2)}, std::pair{Rational(5), Rational(6)}}) {
    const Verdict v = classify(fixtures::example3(l, m));
    CHECK(v.verdict == VerdictClass::HyponormalNotNearSubnormal);
    CHECK(v.via == TheoremTag::Theorem3);
  }
}

TEST_CASE("properties over random specs") {
  std::mt19937_64 rng(77);
  std::vector<WeightSpec> specs;
  for (const auto& f : fixtures::all()) specs.push_back(f.spec);
  for (int i = 0; i < 300; ++i) specs.push_back(testing::random_spec(rng));
  const std::vector<Verdict> verdicts = classify_all(specs);

  std::map<TheoremTag, int> tags;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const WeightSpec& s = specs[i];
    const Verdict& v = verdicts[i];
    CAPTURE(i);
    CHECK(v.verdict != VerdictClass::Undecided);
    ++tags[v.via];

    // parallel batch matches the serial call
    const Verdict again = classify(s);
    CHECK(again.verdict == v.verdict);
    CHECK(again.via == v.via);

    CHECK(replay(v.certificate, s).consistent);

    if (v.via == TheoremTag::Theorem2 || v.via == TheoremTag::Theorem2Converse ||
        v.via == TheoremTag::Theorem4) {
      REQUIRE(v.k);
      const Index k = *v.k;
      CHECK(eval_exact(s, k - 1) < eval_exact(s, k));
      CHECK(eval_exact(s, k) == eval_exact(s, k + 1));
      for (Index n = k - 1; n >= k - 200; --n) CHECK(eval_exact(s, n) < eval_exact(s, n + 1));
    }
    if (v.via == TheoremTag::Theorem2) {
      for (Index n = *v.k; n <= *v.k + 200; ++n) CHECK(eval_exact(s, n) == eval_exact(s, *v.k));
    }
    if (v.via == TheoremTag::Theorem3) {
      const QDiagonal q(s);
      REQUIRE(v.j0);
      CHECK(q.at(*v.j0) == 0);
      CHECK(q.at(*v.j0 + 1) > 0);
      CHECK(eval_exact(s, *v.witness) > eval_exact(s, s.window_start - 1));
    }
    if (v.via == TheoremTag::Theorem4) {
      const Index j = *v.j0;
      CHECK(eval_exact(s, j - 1) < eval_exact(s, j));
      CHECK(eval_exact(s, j) == eval_exact(s, j + 1));
      CHECK(eval_exact(s, j + 1) < eval_exact(s, j + 2));
    }
    // exclusivity of near subnormality and the flat-pair pattern
    if (v.verdict == VerdictClass::NearSubnormal) {
      CHECK(v.via != TheoremTag::Theorem4);
      for (Index j = s.window_start - 3; j <= s.window_end() + 3; ++j) {
        const bool pattern = eval_exact(s, j - 1) < eval_exact(s, j) &&
                             eval_exact(s, j) == eval_exact(s, j + 1) &&
                             eval_exact(s, j + 1) < eval_exact(s, j + 2);
        CHECK_FALSE(pattern);
      }
    }
  }
  // the generator reaches every in-family verdict
  CHECK(tags[TheoremTag::Theorem1] > 0);
  CHECK(tags[TheoremTag::Theorem2] > 0);
  CHECK(tags[TheoremTag::Theorem3] > 0);
  CHECK(tags[TheoremTag::Theorem4] > 0);
  CHECK(tags[TheoremTag::None] > 0);
}

TEST_CASE("scale invariance") {
  std::mt19937_64 rng(5);
  std::vector<WeightSpec> specs;
  for (const auto& f : fixtures::all()) specs.push_back(f.spec);
  for (int i = 0; i < 20; ++i) specs.push_back(testing::random_spec(rng));
  for (const WeightSpec& s : specs) {
    const Verdict base = classify(s);
    for (int i = 0; i < 10; ++i) {
      const Rational c = testing::random_rational(rng, 50, 20);
      const WeightSpec sc = scaled(s, c);
      const Verdict v = classify(sc);
      CHECK(v.verdict == base.verdict);
      CHECK(v.via == base.via);
      CHECK(v.k == base.k);
      CHECK(v.j0 == base.j0);
      if (base.certificate.gamma.sup_gamma_sq) {
        CHECK(*v.certificate.gamma.sup_gamma_sq == sq(c) * *base.certificate.gamma.sup_gamma_sq);
      }
    }
  }
}

TEST_CASE("replay") {
  const WeightSpec s1 = fixtures::example1();
  const Verdict v1 = classify(s1);
  CHECK(replay(v1.certificate, s1).consistent);

  const ReplayResult wrong = replay(v1.certificate, fixtures::example2());
  CHECK_FALSE(wrong.consistent);
  CHECK_FALSE(wrong.detail.empty());

  Certificate tampered = v1.certificate;
  bool changed = false;
  for (auto& p : tampered.replay_points) {
    if (p.quantity == ReplayPoint::Quantity::GammaSq && p.index == -2) {
      p.value = *p.value + Rational(1, 1000);
      changed = true;
    }
  }
  REQUIRE(changed);
  const ReplayResult t = replay(tampered, s1);
  CHECK_FALSE(t.consistent);
  CHECK(t.detail.find("n = -2") != std::string::npos);

  Certificate wrong_theorem = v1.certificate;
  wrong_theorem.theorem_applied = TheoremTag::Theorem1;
  CHECK_FALSE(replay(wrong_theorem, s1).consistent);

  WeightSpec invalid = s1;
  invalid.window_values = {Rational(0)};
  CHECK_FALSE(replay(v1.certificate, invalid).consistent);
}

TEST_CASE("tag strings round trip") {
  for (auto t : {TheoremTag::None, TheoremTag::Theorem1, TheoremTag::Theorem2,
                 TheoremTag::Theorem1Converse, TheoremTag::Theorem2Converse, TheoremTag::Theorem3,
                 TheoremTag::Theorem4}) {
    CHECK(theorem_tag_from_string(to_string(t)) == t);
  }
  CHECK(verdict_class_from_string("NearSubnormal") == VerdictClass::NearSubnormal);
  CHECK_THROWS_AS(verdict_class_from_string("Subnormal"), ParseError);
}
