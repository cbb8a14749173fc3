#include <doctest.h>

#include <algorithm>

#include "vglab/error.hpp"
#include "vglab/group.hpp"

using namespace vglab;

TEST_CASE("cyclic groups and raw tables") {
  FiniteGroup z2 = FiniteGroup::cyclic(2);
  CHECK(z2.size() == 2);
  CHECK(z2.add(1, 1) == 0);
  CHECK(z2.inv(1) == 1);

  FiniteGroup manual = FiniteGroup::from_table({"e", "g"}, {{0, 1}, {1, 0}});
  CHECK(manual.same_table(z2));

  // broken tables are rejected with a witness
  CHECK_THROWS_AS(FiniteGroup::from_table({"e", "g"}, {{0, 1}, {1, 1}}),
                  ValidationError);
  CHECK_THROWS_AS(FiniteGroup::from_table({"a", "b"}, {{1, 0}, {0, 1}}),
                  ValidationError);  // index 0 not the identity
}

TEST_CASE("symmetric group from generator closure") {
  FiniteGroup s3 = FiniteGroup::symmetric3();
  CHECK(s3.size() == 6);
  CHECK_FALSE(s3.is_abelian());
  CHECK(s3.label(0) == "e");
  // three conjugacy classes: identity, transpositions, 3-cycles
  CHECK(s3.conjugacy_classes().size() == 3);

  FiniteGroup d3 = FiniteGroup::dihedral(3);
  CHECK(is_isomorphic(d3, s3));
}

TEST_CASE("kernel and image") {
  FiniteGroup z4 = FiniteGroup::cyclic(4);
  FiniteGroup z2 = FiniteGroup::cyclic(2);
  GroupHom proj = make_group_hom(z4, z2, {0, 1, 0, 1});
  KernelImage ki = hom_kernel_image(proj);
  CHECK(ki.kernel == std::vector<int>{0, 2});
  CHECK(ki.surjective);
  CHECK_FALSE(ki.injective);

  GroupHom id = make_group_hom(z4, z4, {0, 1, 2, 3});
  CHECK(hom_kernel_image(id).kernel == std::vector<int>{0});
  CHECK(hom_kernel_image(id).injective);

  GroupHom zero = make_group_hom(z4, z2, {0, 0, 0, 0});
  CHECK(hom_kernel_image(zero).kernel.size() == 4);

  CHECK_THROWS_AS(make_group_hom(z4, z2, {0, 1, 1, 0}), ValidationError);
}

TEST_CASE("generated subgroups") {
  FiniteGroup z4 = FiniteGroup::cyclic(4);
  CHECK(subgroup_generated(z4, {1}).size() == 4);
  CHECK(subgroup_generated(z4, {2}) == std::vector<int>{0, 2});
  CHECK(subgroup_generated(z4, {}) == std::vector<int>{0});

  FiniteGroup s3 = FiniteGroup::symmetric3();
  CHECK(subgroup_generated(s3, {1}).size() == 2);  // a transposition
}

TEST_CASE("quotients") {
  FiniteGroup z4 = FiniteGroup::cyclic(4);
  QuotientGroup q = quotient_group(z4, {0, 2});
  CHECK(q.group.size() == 2);
  CHECK(is_isomorphic(q.group, FiniteGroup::cyclic(2)));
  CHECK(q.projection.map == std::vector<int>{0, 1, 0, 1});

  CHECK(quotient_group(z4, {0, 1, 2, 3}).group.size() == 1);
  CHECK(quotient_group(z4, {0}).group.size() == 4);

  // normality is checked, never assumed
  FiniteGroup s3 = FiniteGroup::symmetric3();
  std::vector<int> transposition = subgroup_generated(s3, {1});
  std::string w;
  CHECK_FALSE(is_normal(s3, transposition, &w));
  CHECK_FALSE(w.empty());
  CHECK_THROWS_AS(quotient_group(s3, transposition), ValidationError);

  std::vector<int> cycles = subgroup_generated(s3, {2});
  CHECK(cycles.size() == 3);
  CHECK(is_normal(s3, cycles));
  CHECK(quotient_group(s3, cycles).group.size() == 2);

  // a non-subgroup set is rejected
  CHECK_THROWS_AS(quotient_group(z4, {0, 1, 2}), ValidationError);
}

TEST_CASE("normal closure") {
  FiniteGroup s3 = FiniteGroup::symmetric3();
  std::vector<int> transposition = subgroup_generated(s3, {1});
  std::vector<int> closure = normal_closure(s3, transposition);
  CHECK(closure.size() == 6);  // transpositions generate all of S3
  std::vector<int> three_cycle = {2};
  CHECK(normal_closure(s3, three_cycle).size() == 3);
}

TEST_CASE("actions are fully verified") {
  FiniteGroup z2 = FiniteGroup::cyclic(2);
  FiniteGroup z3 = FiniteGroup::cyclic(3);
  GroupAction inv = GroupAction::make(z2, z3, {{0, 1, 2}, {0, 2, 1}});
  CHECK(inv.apply(1, 1) == 2);

  // phi_0 must be the identity
  CHECK_THROWS_AS(GroupAction::make(z2, z3, {{0, 2, 1}, {0, 1, 2}}),
                  ValidationError);
  // rows must be automorphisms
  CHECK_THROWS_AS(GroupAction::make(z2, z3, {{0, 1, 2}, {1, 0, 2}}),
                  ValidationError);
  // negation on Z4 does have order 2
  FiniteGroup z4 = FiniteGroup::cyclic(4);
  CHECK_NOTHROW(GroupAction::make(z2, z4, {{0, 1, 2, 3}, {0, 3, 2, 1}}));
  // but a 4-cycle row is not an automorphism of Z4
  CHECK_THROWS_AS(GroupAction::make(z2, z4, {{0, 1, 2, 3}, {1, 2, 3, 0}}),
                  ValidationError);
}

TEST_CASE("semidirect products") {
  FiniteGroup z2 = FiniteGroup::cyclic(2);
  FiniteGroup z3 = FiniteGroup::cyclic(3);

  // trivial action gives the direct product (Klein for Z2 x Z2)
  SemidirectProduct klein =
      semidirect_product_group(GroupAction::trivial(z2, z2));
  CHECK(klein.group.same_table(FiniteGroup::klein()));

  // Z2 inverting Z3 gives S3
  GroupAction inv = GroupAction::make(z2, z3, {{0, 1, 2}, {0, 2, 1}});
  SemidirectProduct sd = semidirect_product_group(inv);
  CHECK(sd.group.size() == 6);
  CHECK_FALSE(sd.group.is_abelian());
  CHECK(is_isomorphic(sd.group, FiniteGroup::symmetric3()));

  // acting with the trivial group returns the kernel
  SemidirectProduct x_only = semidirect_product_group(
      GroupAction::trivial(FiniteGroup::trivial(), z3));
  CHECK(is_isomorphic(x_only.group, z3));

  // projection and section compose to the identity; inj_x is the kernel
  for (int y = 0; y < 2; ++y) CHECK(sd.proj_y.map[sd.inj_y.map[y]] == y);
  KernelImage ki = hom_kernel_image(sd.proj_y);
  std::vector<int> image_x = sd.inj_x.map;
  std::sort(image_x.begin(), image_x.end());
  CHECK(ki.kernel == image_x);
}

TEST_CASE("hom enumeration is complete on small groups") {
  FiniteGroup z2 = FiniteGroup::cyclic(2);
  FiniteGroup z3 = FiniteGroup::cyclic(3);
  CHECK(enumerate_homs(z2, z2).size() == 2);
  CHECK(enumerate_homs(z3, z2).size() == 1);  // only the zero map
  CHECK(enumerate_homs(z3, z3).size() == 3);
  CHECK(enumerate_automorphisms(z3).size() == 2);  // id and inversion

  FiniteGroup s3 = FiniteGroup::symmetric3();
  CHECK(enumerate_homs(s3, FiniteGroup::cyclic(2)).size() == 2);  // sign map
  CHECK(enumerate_automorphisms(s3).size() == 6);

  CHECK_THROWS_AS(enumerate_homs(s3, s3, 10), ValidationError);  // bound
}

TEST_CASE("automorphism groups") {
  AutomorphismGroup aut = automorphism_group(FiniteGroup::klein());
  CHECK(aut.group.size() == 6);
  CHECK(is_isomorphic(aut.group, FiniteGroup::symmetric3()));
  CHECK(aut.perms[0] == std::vector<int>{0, 1, 2, 3});  // identity first

  AutomorphismGroup a4 = automorphism_group(FiniteGroup::cyclic(4));
  CHECK(a4.group.size() == 2);
}

TEST_CASE("subgroup extraction keeps labels and the parent order") {
  FiniteGroup z6 = FiniteGroup::cyclic(6);
  Subgroup s = subgroup_from_elements(z6, {0, 2, 4});
  CHECK(s.group.size() == 3);
  CHECK(s.embed == std::vector<int>{0, 2, 4});
  CHECK(is_isomorphic(s.group, FiniteGroup::cyclic(3)));
  CHECK_THROWS_AS(subgroup_from_elements(z6, {0, 2, 3}), ValidationError);
  CHECK_THROWS_AS(subgroup_from_elements(z6, {2, 4}), ValidationError);
}

TEST_CASE("conjugacy classes") {
  FiniteGroup z4 = FiniteGroup::cyclic(4);
  CHECK(z4.conjugacy_classes().size() == 4);  // abelian: singletons
  FiniteGroup s3 = FiniteGroup::symmetric3();
  auto classes = s3.conjugacy_classes();
  REQUIRE(classes.size() == 3);
  CHECK(classes[0] == std::vector<int>{0});
  CHECK(classes[1].size() + classes[2].size() == 5);
}
