#include <gtest/gtest.h>

#include "qfano/membership.hpp"
#include "qfano/parse.hpp"
#include "support.hpp"

using namespace qfano;

namespace {

RingPtr ring3() {
  static RingPtr r = make_ring({"a", "b", "c"}, {1, 1, 1});
  return r;
}

Poly P(const char* s) { return parse_poly(s, ring3()); }

// Re-expansion done here rather than trusting the certificate constructor.
Poly expand(const MembershipCertificate& c, const GeneratorSet& g) {
  Poly s(g.ring());
  for (std::size_t i = 0; i < g.size(); ++i) s += c.coefficients()[i] * g[i];
  return s;
}

}  // namespace

TEST(Membership, FindsCertificatesThatReexpand) {
  GeneratorSet g({P("a^2 - b*c"), P("a*b - c^2")});
  Poly target = P("(a + c)*(a^2 - b*c) - 3*b*(a*b - c^2)");
  auto cert = find_certificate(target, g);
  ASSERT_TRUE(cert);
  EXPECT_EQ(expand(*cert, g), target);
  EXPECT_FALSE(cert->serialize().empty());
}

TEST(Membership, NoCertificateOutsideTheIdeal) {
  GeneratorSet g({P("a^2")});
  EXPECT_FALSE(find_certificate(P("a"), g));
  EXPECT_FALSE(find_certificate(P("a*b + c^2"), g));
  // Twisted cubic: the three 2x2 minors; b^2 alone is not in it.
  GeneratorSet tc({P("a*c - b^2"), P("a*b - c"), P("b - a^2")});
  EXPECT_FALSE(find_certificate(P("b^2"), tc, 2, Ansatz::full));
}

TEST(Membership, DegreeBoundLimitsTheSearch) {
  GeneratorSet g({P("a")});
  EXPECT_TRUE(find_certificate(P("a*b^3"), g));
  EXPECT_FALSE(find_certificate(P("a*b^3"), g, 2));
}

TEST(Membership, BrokenCertificateIsRejected) {
  GeneratorSet g({P("a"), P("b")});
  EXPECT_THROW(MembershipCertificate(P("a + b"), {P("1"), P("2")}, g, std::nullopt), std::logic_error);
  EXPECT_NO_THROW(MembershipCertificate(P("a + 2*b"), {P("1"), P("2")}, g, std::nullopt));
}

TEST(Membership, SpanMatricesAndCoordinates) {
  auto r = ring3();
  PolyMap cyc(r, r, {P("b"), P("c"), P("a")});
  auto m = linear_span_matrix({P("a"), P("b"), P("c")}, cyc);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->trace(), 0);
  EXPECT_EQ(rat_det(*m), 1);
  EXPECT_FALSE(linear_span_matrix({P("a"), P("b")}, cyc));
  EXPECT_THROW(linear_span_matrix({P("a"), P("2*a")}, cyc), std::invalid_argument);
  auto co = span_coordinates(P("3*a - b"), {P("a + b"), P("b")});
  ASSERT_TRUE(co);
  EXPECT_EQ((*co)[0], 3);
  EXPECT_EQ((*co)[1], -4);
}

TEST(Membership, MapPreservation) {
  auto r = ring3();
  GeneratorSet g({P("a*b"), P("c")});
  PolyMap m(r, r, {P("b"), P("a"), P("c + a*b")});
  auto certs = map_preserves(m, g, g);
  ASSERT_TRUE(certs);
  EXPECT_EQ(certs->size(), 2u);
  auto eq = equal_mod_ideal(P("a*b + c^2"), P("c^2"), GeneratorSet({P("a")}));
  EXPECT_TRUE(eq);
}

TEST(Membership, CoreCheckPasses) {
  auto res = testing_support::run_check("core.membership");
  EXPECT_EQ(res.status, Status::pass) << testing_support::describe(res);
  EXPECT_EQ(res.certificates.size(), 1u);
}
