#include <gtest/gtest.h>

#include "fibfull/error.hpp"
#include "fibfull/monomial.hpp"
#include "fibfull/order.hpp"
#include "fibfull/poly.hpp"
#include "support.hpp"

using namespace fibfull;
using fibfull::test::P;

TEST(Monomial, Basics) {
  Monomial a{2, 1, 0}, b{1, 1, 1};
  EXPECT_EQ(a.degree(), 3);
  EXPECT_EQ(lcm(a, b), (Monomial{2, 1, 1}));
  EXPECT_EQ(gcd(a, b), (Monomial{1, 1, 0}));
  EXPECT_TRUE((Monomial{1, 1, 0}).divides(a));
  EXPECT_FALSE(a.is_squarefree());
  EXPECT_EQ(a * b / b, a);
  EXPECT_EQ(a.to_string(variable_names(3)), "x0^2*x1");
}

TEST(Monomial, Counting) {
  EXPECT_EQ(monomials_of_degree(3, 2).size(), 6u);
  EXPECT_EQ(count_monomials(4, 3), 20);
  EXPECT_EQ(count_monomials(4, -1), 0);
  auto ms = monomials_of_degree(2, 2);
  EXPECT_EQ(ms.front(), (Monomial{2, 0}));
}

TEST(Order, LexGrevlexWeight) {
  Monomial a{1, 0, 2}, b{0, 2, 0};
  EXPECT_TRUE(MonomialOrder::lex().greater(a, b));
  EXPECT_FALSE(MonomialOrder::grevlex().greater(Monomial{1, 0, 1}, Monomial{0, 2, 0}));
  EXPECT_TRUE(MonomialOrder::grevlex().greater(a, Monomial{0, 1, 1}));
  EXPECT_TRUE(MonomialOrder::grevlex().greater(Monomial{0, 1, 1}, Monomial{0, 0, 2}));
  auto w = MonomialOrder::weight(WeightVector({1, 5, 1}));
  EXPECT_TRUE(w.greater(Monomial{0, 1, 0}, Monomial{1, 0, 0}));
  EXPECT_EQ(w.name(), "weight(1,5,1;grevlex)");
  EXPECT_THROW(WeightVector({1, 0}), InputError);
}

TEST(Order, Parse) {
  EXPECT_EQ(parse_order("lex", 3).name(), "lex");
  EXPECT_EQ(parse_order("weight 3,2,1", 3).name(), "weight(3,2,1;grevlex)");
  EXPECT_THROW(parse_order("weight 1,2", 3), InputError);
  EXPECT_THROW(parse_order("revlex", 3), InputError);
}

TEST(Poly, ParseAndPrint) {
  Poly f = P("x0*x2 - x1^2");
  EXPECT_EQ(f.size(), 2u);
  EXPECT_TRUE(f.is_homogeneous());
  EXPECT_EQ(P("x0x2 - x1 x1"), f);
  EXPECT_EQ(P("(x0 + x1)^2"), P("x0^2 + 2*x0*x1 + x1^2"));
  EXPECT_EQ(P("x0/2 + 1/2*x1"), P("1/2*(x0 + x1)"));
  EXPECT_EQ(parse_poly(f.to_string(false), variable_names(4)), f);
}

TEST(Poly, ParseErrors) {
  EXPECT_THROW(P("x0 +"), InputError);
  EXPECT_THROW(P("x9"), InputError);
  EXPECT_THROW(P("x0^"), InputError);
  EXPECT_THROW(P("(x0"), InputError);
  EXPECT_THROW(P("x0/x1"), InputError);
}

TEST(Poly, Arithmetic) {
  Poly a = P("x0 + x1"), b = P("x0 - x1");
  EXPECT_EQ(a * b, P("x0^2 - x1^2"));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(a.leading(MonomialOrder::lex()).mon, (Monomial{1, 0, 0, 0}));
  EXPECT_EQ(P("2*x1 + 4*x0").monic(MonomialOrder::lex()), P("x0 + 1/2*x1"));
}

TEST(Poly, FamilyOperations) {
  auto names = variable_names(2, true);
  Poly f = parse_poly("x1 - t*x0", names);
  EXPECT_TRUE(f.is_homogeneous_prefix(2));
  EXPECT_FALSE(f.is_homogeneous());
  EXPECT_EQ(f.drop_last(Scalar(0)), parse_poly("x1", variable_names(2)));
  EXPECT_EQ(f.drop_last(Scalar(2)), parse_poly("x1 - 2*x0", variable_names(2)));
  EXPECT_EQ(f.t_coefficient(Monomial{1, 0, 0}).to_string(), "-t");
}

TEST(Poly, OmegaHomogenize) {
  WeightVector w({8, 4, 2, 1});
  Poly f = P("x0*x2 - x1^2");
  EXPECT_EQ(weight_degree(w, f), 10);
  EXPECT_EQ(omega_initial(w, f), P("x0*x2"));
  Poly h = omega_homogenize(w, f);
  EXPECT_EQ(h, parse_poly("x0*x2 - t^2*x1^2", variable_names(4, true)));
}
