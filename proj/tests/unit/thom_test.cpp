#include <blowchern/error.hpp>
#include <blowchern/thom.hpp>

#include <gtest/gtest.h>

using namespace blowchern;

TEST(ThomRing, OverAPointWithZeroEuler) {
  const Ring pt = make_ring({}, {}, 0);
  const ThomRing t = thom_ring(pt, pt.zero());
  EXPECT_EQ(t.ring.truncation(), 1);
  EXPECT_TRUE((t.x * t.x).is_zero());
  EXPECT_EQ(relative_class_chern(TotalClass(pt.one(), 3), 3, t).value(), t.ring.one() + t.x * Integer(3));
}

TEST(ThomRing, OverTheFiberOfAPointBlowup) {
  const Ring p2 = make_ring({{"t", 1}}, {"t^3"}, 2);
  const ThomRing th = thom_ring(p2, p2.gen("t"));
  const Element t = th.inclusion(p2.gen("t"));
  const Element x = th.x;
  EXPECT_TRUE((x * x + x * t).is_zero());
  EXPECT_EQ(x * (t * x), -(t * t * x));
  // the Thom subgroup has basis 1, x, t x, t^2 x
  for (const Element& b : {x, t * x, t * t * x}) {
    const ThomElement te = to_thom_element(th, b);
    EXPECT_EQ(te.constant, 0);
    EXPECT_EQ(from_thom_element(th, te), b);
  }
  EXPECT_FALSE((t * t * x).is_zero());
}

TEST(ThomRing, EulerMustHaveWeightOne) {
  const Ring r = make_ring({{"a", 1}, {"b", 2}}, {}, 3);
  try {
    thom_ring(r, r.gen("b"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegreeMismatch);
  }
}

TEST(RelativeClass, TautologicalLine) {
  const Ring p2 = make_ring({{"t", 1}}, {"t^3"}, 2);
  const ThomRing th = thom_ring(p2, p2.gen("t"));
  const Element t = th.inclusion(p2.gen("t"));
  const TotalClass rel = relative_class_chern(TotalClass(p2.element("1 + t"), 1), 1, th);
  EXPECT_EQ(rel.value() * (th.ring.one() + t), th.ring.one() + th.x + t);
}

TEST(RelativeClass, TrivialRankThreeOverP2) {
  const Ring p2 = make_ring({{"t", 1}}, {"t^3"}, 2);
  const ThomRing th = thom_ring(p2, p2.gen("t"));
  const Element t = th.inclusion(p2.gen("t"));
  const Element x = th.x;
  const TotalClass rel = relative_class_chern(TotalClass(p2.one(), 3), 3, th);
  EXPECT_EQ(rel.value(), th.ring.one() + x * Integer(3) - t * x * Integer(3) + t * t * x);
  // brute force: (1+x)^3 = 1 + 3x + 3x^2 + x^3 with x^2 = -tx
  EXPECT_EQ(rel.value(), (th.ring.one() + x).pow(3));
}

TEST(ThomElement, SubgroupViolation) {
  const Ring p2 = make_ring({{"t", 1}}, {"t^3"}, 2);
  const ThomRing th = thom_ring(p2, p2.gen("t"));
  try {
    to_thom_element(th, th.inclusion(p2.gen("t")));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SubgroupViolation);
  }
  EXPECT_EQ(to_thom_element(th, th.ring.constant(4)).constant, 4);
}
