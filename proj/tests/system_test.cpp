#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace permspec;
using namespace permspec::test;

namespace {

std::set<Term> as_set(const std::vector<Term> &ts) { return {ts.begin(), ts.end()}; }

Term T(const Permutation &root, std::vector<Restriction> children) { return Term{root, std::move(children)}; }

// Normalized blocks (index intervals) of any basis element of size >= 2.
std::set<Permutation> blocks_of(const std::vector<Permutation> &patterns)
{
  auto v = normalized_blocks(patterns);
  return {v.begin(), v.end()};
}

} // namespace

TEST(MakeBasis, ValidatesInput)
{
  EXPECT_NO_THROW(make_basis(Ps({"132"})));
  EXPECT_NO_THROW(make_basis(Ps({"21"})));
  EXPECT_THROW(make_basis(Ps({"12", "132"})), InvalidInput);
  EXPECT_THROW(make_basis(Ps({"1"})), DomainError);
  auto b = make_basis(Ps({"1243", "2413", "531642", "41352"}));
  EXPECT_EQ(b.b_star(), Ps({"1243"}));
  EXPECT_THROW(make_simple_set(Ps({"132"})), InvalidInput);
  EXPECT_EQ(make_simple_set(Ps({"3142", "2413"})), Ps({"2413", "3142"}));
}

TEST(NormalizedBlocks, OfFiveBasis)
{
  auto b = make_basis(Ps({"1243", "2341", "2413", "41352", "531642"}));
  EXPECT_EQ(b.b_star(), Ps({"1243", "2341"}));
  EXPECT_EQ(blocks_of(b.b_star()), (std::set<Permutation>{P("12"), P("21"), P("123"), P("132"), P("1243"), P("2341")}));
}

TEST(EquationCap, CountsDeltaAndBlocks)
{
  EXPECT_EQ(equation_cap({}), 3u);
  EXPECT_EQ(equation_cap(Ps({"12", "21"})), 27u);
}

TEST(ClosureEquation, Examples)
{
  auto eq = closure_equation(Delta::plain, Ps({"3142"}));
  EXPECT_EQ(shape_of(eq), (SystemShape{{"C", {"1", "+[C+, C]", "-[C-, C]", "3142[C, C, C, C]"}}}));
  EXPECT_TRUE(eq.has_one);
  EXPECT_EQ(shape_of(closure_equation(Delta::plus, {})), (SystemShape{{"C+", {"1", "-[C-, C]"}}}));
  EXPECT_EQ(shape_of(closure_equation(Delta::minus, {})), (SystemShape{{"C-", {"1", "+[C+, C]"}}}));
}

TEST(AddConstraints, Examples)
{
  auto got = add_constraints(closure_term(minus_root()), P("231"));
  EXPECT_EQ(as_set(got), (std::set<Term>{T(minus_root(), {R(Delta::minus, {"12"}), R(Delta::plain, {"231"})})}));

  got = add_constraints(closure_term(minus_root()), P("3412"));
  EXPECT_EQ(as_set(got), (std::set<Term>{T(minus_root(), {R(Delta::minus, {"12"}), R(Delta::plain, {"3412"})}),
                                          T(minus_root(), {R(Delta::minus, {"3412"}), R(Delta::plain, {"12"})})}));

  EXPECT_THROW(add_constraints(closure_term(plus_root()), P("1")), InvalidInput);
  EXPECT_THROW(add_constraints(closure_term(plus_root()), Permutation()), InvalidInput);
}

TEST(AddConstraints, EveryChildAvoidsAPatternOfGamma)
{
  for (const auto &g : Ps({"231", "3412", "1243", "2413", "546312"}))
    for (const auto &root : {plus_root(), minus_root(), P("3142"), P("25314")})
      for (const auto &t : add_constraints(closure_term(root), g))
        for (const auto &c : t.children)
          ASSERT_TRUE(std::any_of(c.avoid.begin(), c.avoid.end(), [&](const Permutation &e) { return contains(g, e); }))
              << t.pretty();
}

TEST(EqnForClass, Examples)
{
  const auto S = Ps({"3142"});
  auto head = shape_of_file("ambiguous_four_basis_head.txt");
  auto eq = eqn_for_class(Delta::plain, Ps({"1243"}), S);
  EXPECT_EQ(shape_of(eq), (SystemShape{{"C<1243>", head.at("C<1243>")}}));

  auto five = shape_of_file("ambiguous_five_basis.txt");
  eq = eqn_for_class(Delta::plain, Ps({"1243", "2341"}), S);
  EXPECT_EQ(shape_of(eq), (SystemShape{{"C<1243,2341>", five.at("C<1243,2341>")}}));

  eq = eqn_for_class(Delta::plain, Ps({"21"}), S);
  EXPECT_EQ(shape_of(eq), (SystemShape{{"C<21>", {"1", "+[C+<21>, C<21>]"}}}));
}

TEST(AmbiguousSystem, FourBasisHead)
{
  auto sys = ambiguous_system(make_basis(Ps({"1243", "2413", "531642", "41352"})), Ps({"3142"}));
  auto got = shape_of(sys);
  for (const auto &[lhs, terms] : shape_of_file("ambiguous_four_basis_head.txt")) {
    ASSERT_TRUE(got.count(lhs)) << lhs;
    EXPECT_EQ(got.at(lhs), terms) << lhs;
  }
  EXPECT_EQ(sys.equations.front().lhs.pretty(), "C<1243>");
}

TEST(AmbiguousSystem, FiveBasisFixture)
{
  auto sys = ambiguous_system(make_basis(Ps({"1243", "2341", "2413", "41352", "531642"})), Ps({"3142"}));
  EXPECT_EQ(sys.equations.size(), 12u);
  EXPECT_EQ(shape_of(sys), shape_of_file("ambiguous_five_basis.txt"));
  EXPECT_FALSE(sys.equations.front().disjoint);
}

TEST(AmbiguousSystem, SubstitutionClosedBasis)
{
  auto sys = ambiguous_system(make_basis(Ps({"2413", "3142"})), {});
  EXPECT_EQ(shape_of(sys), (SystemShape{{"C", {"1", "+[C+, C]", "-[C-, C]"}},
                                        {"C+", {"1", "-[C-, C]"}},
                                        {"C-", {"1", "+[C+, C]"}}}));
  for (const auto &eq : sys.equations)
    EXPECT_TRUE(eq.disjoint);
}

TEST(AmbiguousSystem, RejectsSimplesContainingTheBasis)
{
  EXPECT_THROW(ambiguous_system(make_basis(Ps({"132"})), Ps({"3142"})), InvalidInput);
  EXPECT_THROW(specification(make_basis(Ps({"132"})), Ps({"3142"})), InvalidInput);
}

TEST(AmbiguousSystem, EquationCapIsEnforced)
{
  ::setenv("PERMSPEC_MAX_EQUATIONS", "3", 1);
  EXPECT_THROW(ambiguous_system(make_basis(Ps({"1243", "2341", "2413", "41352", "531642"})), Ps({"3142"})), DomainError);
  ::unsetenv("PERMSPEC_MAX_EQUATIONS");
  EXPECT_NO_THROW(ambiguous_system(make_basis(Ps({"1243", "2341", "2413", "41352", "531642"})), Ps({"3142"})));
}

TEST(SystemBuilderProperties, AddConstraintsIsSound)
{
  const auto simples = Ps({"2413", "3142"});
  MemberCache cache;
  const auto members = closure_up_to(simples, 8);
  for (const auto &g : all_up_to(4)) {
    if (g.size() < 2)
      continue;
    for (const auto &root : {plus_root(), minus_root(), P("2413"), P("3142")}) {
      const Term t = closure_term(root);
      const auto out = add_constraints(t, g);
      for (const auto &s : members) {
        if (s.size() < 2 || !(cache.split(s).root == root))
          continue;
        const bool lhs = !cache.has(s, g);
        bool rhs = false;
        for (const auto &u : out)
          rhs = rhs || cache.term(s, u);
        ASSERT_EQ(lhs, rhs) << "gamma " << g << " root " << root << " sigma " << s;
      }
    }
  }
}

TEST(SystemBuilderProperties, AmbiguousSystemCoversTheClass)
{
  for (const auto &c : fixture_classes()) {
    auto sys = ambiguous_system(make_basis(c.basis), c.simples);
    const auto &eq = sys.equations.front();
    MemberCache cache;
    for (const auto &s : closure_up_to(c.simples, 8)) {
      bool generated = s.size() == 1 && eq.has_one;
      for (const auto &t : eq.terms)
        generated = generated || cache.term(s, t);
      ASSERT_EQ(generated, avoids_all(s, c.basis)) << c.name << " " << s;
    }
  }
}

TEST(SystemBuilderProperties, PatternsAreBlocksOfTheBasis)
{
  for (const auto &c : fixture_classes()) {
    auto basis = make_basis(c.basis);
    auto allowed = blocks_of(basis.b_star());
    for (const auto &sys : {ambiguous_system(basis, c.simples), specification(basis, c.simples)})
      for (const auto &eq : sys.equations) {
        auto check = [&](const Restriction &r) {
          for (const auto &p : r.avoid)
            ASSERT_TRUE(allowed.count(p)) << c.name << " " << r.key();
          for (const auto &p : r.contain)
            ASSERT_TRUE(allowed.count(p)) << c.name << " " << r.key();
        };
        check(eq.lhs);
        for (const auto &t : eq.terms)
          for (const auto &r : t.children)
            check(r);
      }
  }
}

TEST(SystemBuilderProperties, SystemsAreCompleteAndWithinTheCap)
{
  for (const auto &c : fixture_classes()) {
    auto basis = make_basis(c.basis);
    const auto cap = equation_cap(normalized_blocks(basis.b_star()));
    for (const auto &sys : {ambiguous_system(basis, c.simples), specification(basis, c.simples)}) {
      auto index = sys.index();
      EXPECT_EQ(index.size(), sys.equations.size()) << c.name;
      for (const auto &eq : sys.equations)
        for (const auto &t : eq.terms)
          for (const auto &r : t.children)
            ASSERT_TRUE(index.count(r.key())) << c.name << " " << r.key();
      EXPECT_LE(sys.equations.size(), cap) << c.name;
      EXPECT_EQ(sys.equations.front().lhs, canonicalize({Delta::plain, basis.b_star(), {}})) << c.name;
    }
  }
}
