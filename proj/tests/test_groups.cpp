#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>

#include "cgseries/enumerate.hpp"
#include "cgseries/errors.hpp"
#include "cgseries/group_io.hpp"
#include "cgseries/partition.hpp"

using namespace cgs;

namespace {

std::vector<long> sorted(std::vector<long> v) {
  std::sort(v.begin(), v.end());
  return v;
}

long sum_of_squares(const std::vector<long>& v) {
  long s = 0;
  for (long x : v) s += x * x;
  return s;
}

CycloMatrix mat2(const Cyclo& a, const Cyclo& b, const Cyclo& c, const Cyclo& d) {
  CycloMatrix m(2, 2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("cgseries_test_" + name);
}

// Character of a permutation representation entry by brute force: the
// cycle type of every permutation of d points, grouped.
std::map<Partition, long> cycle_type_counts(int d) {
  std::vector<int> p(d);
  std::iota(p.begin(), p.end(), 0);
  std::map<Partition, long> counts;
  do {
    std::vector<bool> seen(d, false);
    Partition type;
    for (int i = 0; i < d; ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (int j = i; !seen[j]; j = p[j]) {
        seen[j] = true;
        ++len;
      }
      type.push_back(len);
    }
    std::sort(type.rbegin(), type.rend());
    ++counts[type];
  } while (std::next_permutation(p.begin(), p.end()));
  return counts;
}

}  // namespace

TEST_SUITE("group-models") {

TEST_CASE("cyclic models") {
  const GroupModel z2 = make_cyclic_su2(2);
  CHECK(z2.order == 2);
  CHECK(z2.char_table == mat2(1, 1, 1, -1));
  CHECK(z2.defining_row == std::vector<Cyclo>{2, -2});
  const GroupModel z3 = make_cyclic_su2(3);
  CHECK(z3.class_sizes == std::vector<long>{1, 1, 1});
  bool powers = true;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) powers = powers && z3.char_table(i, k) == Cyclo::zeta(3, i * k);
  CHECK(powers);
  const GroupModel z5 = make_cyclic_su2(5);
  CHECK(sum_of_squares(z5.irrep_dims()) == 5);
  CHECK(validate_group(z5).ok());
}

TEST_CASE("binary polyhedral models") {
  const GroupModel i = make_binary_icosahedral();
  CHECK(i.order == 120);
  CHECK(i.num_classes() == 9);
  CHECK(sorted(i.irrep_dims()) == std::vector<long>{1, 2, 2, 3, 3, 4, 4, 5, 6});
  const GroupModel q = make_binary_dihedral(2);
  CHECK(q.order == 8);
  CHECK(q.num_classes() == 5);
  CHECK(sorted(q.irrep_dims()) == std::vector<long>{1, 1, 1, 1, 2});
  const GroupModel t = make_binary_tetrahedral();
  CHECK(t.order == 24);
  CHECK(t.num_classes() == 7);
  CHECK(sum_of_squares(t.irrep_dims()) == 24);
  for (const char* sel : {"cyclic:7", "bd:5", "2T", "2O", "2I"}) {
    const GroupModel g = make_builtin(sel);
    INFO(sel);
    CHECK(validate_group(g).ok());
    CHECK(is_free_action(g));
    CHECK(sum_of_squares(g.irrep_dims()) == g.order);
  }
}

TEST_CASE("symmetric group models") {
  const GroupModel s3 = make_symmetric(3);
  // Rows (3), (2,1), (1^3); columns (1^3), (2,1), (3).
  CycloMatrix expected(3, 3);
  const long table[3][3] = {{1, 1, 1}, {2, 0, -1}, {1, -1, 1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) expected(i, j) = table[i][j];
  CHECK(s3.char_table == expected);
  const GroupModel s1 = make_symmetric(1);
  CHECK(s1.char_table == CycloMatrix(1, 1, Cyclo(1)));
  const GroupModel s4 = make_symmetric(4);
  const auto pos = std::find(s4.class_labels.begin(), s4.class_labels.end(), "2,1,1");
  REQUIRE(pos != s4.class_labels.end());
  CHECK(s4.class_sizes[pos - s4.class_labels.begin()] == 6);
  CHECK_FALSE(is_free_action(s3));
}

TEST_CASE("symmetric class sizes against brute-force permutations") {
  for (int d = 1; d <= 6; ++d) {
    const auto counts = cycle_type_counts(d);
    const GroupModel g = make_symmetric(d);
    for (int k = 0; k < g.num_classes(); ++k) CHECK(counts.at(parse_partition(g.class_labels[k])) == g.class_sizes[k]);
    CHECK(validate_group(g).ok());
  }
}

TEST_CASE("permutation character is the number of fixed points") {
  for (int d = 2; d <= 6; ++d) {
    const GroupModel g = make_symmetric(d);
    for (int k = 0; k < g.num_classes(); ++k) {
      const Partition mu = parse_partition(g.class_labels[k]);
      CHECK(g.defining_row[k] == Cyclo(static_cast<long>(std::count(mu.begin(), mu.end(), 1))));
    }
  }
}

TEST_CASE("file round trips") {
  for (const char* sel : {"cyclic:2", "2T", "sym:4"}) {
    const GroupModel g = make_builtin(sel);
    const auto path = temp_file(std::string(sel == std::string("cyclic:2") ? "z2" : sel) + ".json");
    save_group(g, path.string());
    CHECK(same_model(load_group(path.string()), g));
    std::filesystem::remove(path);
  }
}

TEST_CASE("corrupted file is rejected") {
  Json j = group_to_json(make_symmetric(3));
  j["char_table"][1][1] = Json::array({Json::array({0, 1, 1})});
  CHECK_THROWS_AS(group_from_json(j), OrthogonalityError);
  try {
    group_from_json(j);
  } catch (const OrthogonalityError& e) {
    CHECK(std::string(e.what()).find("row") != std::string::npos);
  }
  Json extra = group_to_json(make_cyclic_su2(2));
  extra["colour"] = "blue";
  CHECK_THROWS_AS(group_from_json(extra), SchemaError);
  Json sizes = group_to_json(make_cyclic_su2(3));
  sizes["class_sizes"] = Json::array({1, 1, 2});
  CHECK_THROWS_AS(group_from_json(sizes), ValidationError);
}

TEST_CASE("enumeration from generators") {
  const CycloMatrix r3 = mat2(Cyclo::zeta(3), 0, 0, Cyclo::zeta(3, 2));
  const auto z3 = enumerate_from_generators({r3}, 100);
  CHECK(z3.order() == 3);
  CHECK(z3.classes.size() == 3);

  const CycloMatrix i = mat2(Cyclo::zeta(4), 0, 0, Cyclo::zeta(4, 3));
  const CycloMatrix j = mat2(0, 1, -1, 0);
  const auto q8 = enumerate_from_generators({i, j}, 100);
  CHECK(q8.order() == 8);
  CHECK(sorted(q8.class_sizes()) == std::vector<long>{1, 1, 2, 2, 2});
  CHECK(compare_with_model(q8, make_binary_dihedral(2)).pass);

  const GroupModel g = make_binary_icosahedral();
  const auto e = enumerate_from_generators(standard_generators(g), 1000);
  CHECK(e.order() == 120);
  CHECK(e.classes.size() == 9);
  CHECK(compare_with_model(e, g).pass);
  CHECK_THROWS_AS(enumerate_from_generators(standard_generators(g), 50), DomainError);
}

TEST_CASE("free actions") {
  CHECK(is_free_action(make_cyclic_su2(4)));
  CHECK(is_free_action(make_binary_icosahedral()));
  CHECK_FALSE(is_free_action(make_symmetric(3)));
}

TEST_CASE("selector errors") {
  CHECK_THROWS(make_builtin("cyclic:1"));
  CHECK_THROWS(make_builtin("nonsense"));
}

}
