#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace permspec;
using namespace permspec::test;

namespace {

std::set<Term> as_set(const std::vector<Term> &ts) { return {ts.begin(), ts.end()}; }

Term T(const Permutation &root, std::vector<Restriction> children) { return Term{root, std::move(children)}; }

// A term of pi[C,...,C] restricted to members containing gamma.
void expect_mandatory_sound(const Term &t, const Permutation &gamma, const std::vector<Permutation> &simples,
                            std::size_t nmax)
{
  MemberCache cache;
  const auto out = add_mandatory(t, gamma);
  for (const auto &s : closure_up_to(simples, nmax)) {
    const bool lhs = cache.term(s, t) && cache.has(s, gamma);
    bool rhs = false;
    for (const auto &u : out)
      rhs = rhs || cache.term(s, u);
    ASSERT_EQ(lhs, rhs) << t.pretty() << " gamma " << gamma << " sigma " << s;
  }
}

} // namespace

TEST(AddMandatory, Examples)
{
  const Term t = closure_term(P("3142"));
  auto out = add_mandatory(t, P("546312"));
  const Term expected = T(P("3142"), {R(Delta::plain, {}, {"21"}), R(Delta::plain, {}), R(Delta::plain, {}),
                                      R(Delta::plain, {}, {"312"})});
  EXPECT_TRUE(as_set(out).count(expected));

  const Term sum = closure_term(plus_root());
  EXPECT_EQ(add_mandatory(sum, P("12")), (std::vector<Term>{sum}));

  EXPECT_THROW(add_mandatory(sum, P("1")), InvalidInput);
  EXPECT_THROW(add_mandatory(sum, Permutation()), InvalidInput);
}

TEST(AddMandatory, MembershipMatchesAtSmallSizes)
{
  const auto S = Ps({"3142"});
  for (const auto &g : Ps({"12", "21", "132", "231", "2413", "3142", "1243"})) {
    expect_mandatory_sound(closure_term(plus_root()), g, S, 7);
    expect_mandatory_sound(closure_term(minus_root()), g, S, 7);
    expect_mandatory_sound(closure_term(P("3142")), g, S, 7);
    expect_mandatory_sound(T(plus_root(), {R(Delta::plus, {"12"}), R(Delta::plain, {"132"})}), g, S, 7);
  }
}

TEST(EqnForRestriction, Examples)
{
  const auto S = Ps({"3142"});
  auto eq = eqn_for_restriction(R(Delta::plain, {"132", "2341"}, {"21"}), S);
  EXPECT_FALSE(eq.has_one);
  EXPECT_EQ(as_set(eq.terms),
            (std::set<Term>{T(plus_root(), {R(Delta::plus, {"132", "2341"}, {"21"}), R(Delta::plain, {"21"})}),
                            T(minus_root(), {R(Delta::minus, {"132", "123"}), R(Delta::plain, {"132", "2341"})})}));

  eq = eqn_for_restriction(R(Delta::plus, {"21"}), S);
  EXPECT_TRUE(eq.has_one);
  EXPECT_TRUE(eq.terms.empty());

  eq = eqn_for_restriction(R(Delta::plain, {"21", "12"}), S);
  EXPECT_TRUE(eq.has_one);
  EXPECT_TRUE(eq.terms.empty());
}

TEST(Disambiguate, FiveBasisFirstEquation)
{
  auto amb = eqn_for_class(Delta::plain, Ps({"1243", "2341"}), Ps({"3142"}));
  auto eq = disambiguate(amb);
  EXPECT_TRUE(eq.disjoint);
  EXPECT_EQ(eq.terms.size(), 5u);
  auto fixture = shape_of_file("spec_five_basis.txt");
  EXPECT_EQ(shape_of(eq), (SystemShape{{"C<1243,2341>", fixture.at("C<1243,2341>")}}));
}

TEST(Disambiguate, SplitsTheOverlappingSums)
{
  auto amb = eqn_for_class(Delta::plain, Ps({"2143"}), {});
  std::size_t sums = 0;
  for (const auto &t : amb.terms)
    sums += t.root == plus_root();
  EXPECT_EQ(sums, 2u);
  auto eq = disambiguate(amb);
  sums = 0;
  for (const auto &t : eq.terms)
    sums += t.root == plus_root();
  EXPECT_EQ(sums, 3u);
  auto fixture = shape_of_file("spec_av2413_3142_2143.txt");
  EXPECT_EQ(shape_of(eq), (SystemShape{{"C<2143>", fixture.at("C<2143>")}}));
}

TEST(Disambiguate, LeavesUnambiguousEquationsAlone)
{
  auto amb = eqn_for_class(Delta::plain, Ps({"132"}), {});
  auto eq = disambiguate(amb);
  EXPECT_TRUE(eq.disjoint);
  EXPECT_EQ(as_set(eq.terms), as_set(amb.terms));
  EXPECT_EQ(eq.has_one, amb.has_one);
}

TEST(Specification, Av132Fixture)
{
  auto sys = specification(make_basis(Ps({"132"})), {});
  EXPECT_EQ(sys.equations.size(), 5u);
  EXPECT_EQ(shape_of(sys), shape_of_file("spec_av132.txt"));
}

TEST(Specification, Av2413_3142_2143Fixture)
{
  auto sys = specification(make_basis(Ps({"2413", "3142", "2143"})), {});
  EXPECT_EQ(sys.equations.size(), 6u);
  EXPECT_EQ(shape_of(sys), shape_of_file("spec_av2413_3142_2143.txt"));
}

TEST(Specification, FiveBasisFixture)
{
  auto sys = specification(make_basis(Ps({"1243", "2341", "2413", "41352", "531642"})), Ps({"3142"}));
  EXPECT_EQ(sys.equations.size(), 16u);
  EXPECT_EQ(shape_of(sys), shape_of_file("spec_five_basis.txt"));
}

TEST(Specification, Av21)
{
  auto sys = specification(make_basis(Ps({"21"})), {});
  EXPECT_EQ(shape_of(sys), (SystemShape{{"C<21>", {"1", "+[C+<21>, C<21>]"}}, {"C+<21>", {"1"}}}));
}

TEST(DisambiguatorProperties, EquationsAreDisjointAndComplete)
{
  for (const auto &c : fixture_classes()) {
    auto sys = fixture_spec(c);
    auto report = audit_specification(sys, c.basis, 8);
    EXPECT_TRUE(report.clean()) << c.name << ": " << (report.clean() ? "" : report.violations.front());
  }
}

TEST(DisambiguatorProperties, ClosureAtomLawAndCap)
{
  for (const auto &c : fixture_classes()) {
    auto basis = make_basis(c.basis);
    auto sys = fixture_spec(c);
    auto index = sys.index();
    for (const auto &eq : sys.equations) {
      EXPECT_TRUE(eq.disjoint) << c.name;
      EXPECT_EQ(eq.has_one, eq.lhs.contain.empty()) << eq.lhs.key();
      for (const auto &t : eq.terms)
        for (const auto &r : t.children)
          ASSERT_TRUE(index.count(r.key())) << c.name << " " << r.key();
    }
    EXPECT_LE(sys.equations.size(), equation_cap(normalized_blocks(basis.b_star())));
  }
}

TEST(DisambiguatorProperties, DisjointCoverPerRootGroup)
{
  // every possibly ambiguous equation met while building the fixtures
  for (const auto &c : fixture_classes()) {
    auto basis = make_basis(c.basis);
    auto sys = specification(basis, c.simples);
    MemberCache cache;
    const auto members = closure_up_to(c.simples, 7);
    for (const auto &target : sys.equations) {
      const Equation amb = eqn_for_restriction(target.lhs, c.simples);
      const Equation eq = disambiguate(amb);
      for (const auto &s : members) {
        bool before = false;
        for (const auto &t : amb.terms)
          before = before || cache.term(s, t);
        std::size_t after = 0;
        for (const auto &t : eq.terms)
          after += cache.term(s, t);
        ASSERT_LE(after, 1u) << c.name << " " << eq.lhs.key() << " " << s;
        ASSERT_EQ(before, after == 1) << c.name << " " << eq.lhs.key() << " " << s;
      }
    }
  }
}
