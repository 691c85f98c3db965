#include "useq/registry.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"

using namespace useq;

namespace {

std::vector<Rational> vals(std::initializer_list<const char*> texts) {
  std::vector<Rational> out;
  for (const char* t : texts) out.push_back(parse_rational(t));
  return out;
}

// One admissible, cheap parameter point per registered check.
const std::map<std::string, std::vector<Rational>>& sample_points() {
  static const std::map<std::string, std::vector<Rational>> points = {
      {"check_translation", vals({"2", "5"})},
      {"check_shift3_sum", vals({"2", "1"})},
      {"check_shift3_diff", vals({"3", "0"})},
      {"check_poly_recurrence", vals({"4", "2"})},
      {"check_integral_shift", vals({"2", "1"})},
      {"check_antiderivative", vals({"2", "3"})},
      {"check_classical_sums", vals({"3", "5"})},
      {"check_theorem_2_1", vals({"2", "4"})},
      {"check_corollary_2_1", vals({"3"})},
      {"check_corollary_2_2", vals({"2"})},
      {"check_special_values", vals({"4"})},
      {"check_lemma_4_1", vals({"2"})},
      {"check_lemma_5_1", vals({"2"})},
      {"check_1_2", vals({"5"})},
      {"check_1_3", vals({"5"})},
      {"check_1_4", vals({"5"})},
      {"check_1_5", vals({"7"})},
      {"check_3_1", vals({"3"})},
      {"check_3_2", vals({"4"})},
      {"check_lemma_3_1", vals({"5"})},
      {"check_theorem_3_1", vals({"7"})},
      {"check_lemma_3_2", vals({"1", "3", "2"})},
      {"check_theorem_3_2", vals({"1", "3", "2"})},
      {"check_corollary_3_1", vals({"1", "5", "2"})},
      {"check_theorem_4_1", vals({"1", "3", "0"})},
      {"check_euler_mod_pow2", vals({"1", "4", "0"})},
      {"check_euler_mod_pow3", vals({"1", "1", "0"})},
      {"check_theorem_5_1", vals({"1", "3", "0"})},
  };
  return points;
}

}  // namespace

TEST_CASE("registry lists every check exactly once") {
  const auto& reg = check_registry();
  CHECK(reg.size() == 28);
  std::set<std::string> names;
  for (const CheckDef& def : reg) {
    CAPTURE(def.name);
    CHECK(def.name.rfind("check_", 0) == 0);
    CHECK(names.insert(def.name).second);
    CHECK(!def.params.empty());
    CHECK(def.admissible != nullptr);
    CHECK(def.demands != nullptr);
    CHECK(def.run != nullptr);
  }
  // The sample table and the registry must cover the same set of names.
  CHECK(sample_points().size() == reg.size());
  for (const auto& [name, point] : sample_points()) CHECK(names.count(name) == 1);
}

TEST_CASE("lookup accepts canonical names and unprefixed aliases") {
  const CheckDef* a = find_check("check_theorem_3_1");
  const CheckDef* b = find_check("theorem_3_1");
  REQUIRE(a != nullptr);
  CHECK(a == b);
  CHECK(find_check("1_2") == find_check("check_1_2"));
  CHECK(find_check("no_such_check") == nullptr);
  CHECK(find_check("") == nullptr);
}

TEST_CASE("parameter signatures expose names and kinds in declared order") {
  const CheckDef* tr = find_check("check_translation");
  REQUIRE(tr != nullptr);
  REQUIRE(tr->params.size() == 2);
  CHECK(tr->params[0].name == "n");
  CHECK(tr->params[0].kind == ParamKind::integral);
  CHECK(tr->params[1].name == "x");
  CHECK(tr->params[1].kind == ParamKind::rational);

  const CheckDef* is = find_check("check_integral_shift");
  REQUIRE(is != nullptr);
  CHECK(is->params[1].name == "a");

  const CheckDef* t41 = find_check("check_theorem_4_1");
  REQUIRE(t41 != nullptr);
  REQUIRE(t41->params.size() == 3);
  CHECK(t41->params[0].name == "k");
  CHECK(t41->params[1].name == "m");
  CHECK(t41->params[2].name == "b");
}

TEST_CASE("admissibility produces reasons for out-of-statement points") {
  auto reason = [](const char* check, std::initializer_list<const char*> p) {
    const CheckDef* def = find_check(check);
    REQUIRE(def != nullptr);
    return def->admissible(vals(p));
  };

  CHECK(!reason("check_1_2", {"5"}).has_value());
  CHECK(reason("check_1_2", {"9"}).value().find("prime") != std::string::npos);
  CHECK(reason("check_1_2", {"4"}).has_value());
  CHECK(reason("check_1_2", {"5/2"}).value().find("integer") != std::string::npos);
  CHECK(reason("check_1_2", {"60000"}).value().find("bound") != std::string::npos);
  CHECK(reason("check_1_5", {"11"}).value().find("modulo 3") != std::string::npos);

  CHECK(!reason("check_theorem_4_1", {"1", "3", "0"}).has_value());
  CHECK(reason("check_theorem_4_1", {"1", "2", "0"}).value().find("at least 3") !=
        std::string::npos);
  CHECK(reason("check_theorem_4_1", {"1", "3", "5"}).value().find("even") != std::string::npos);
  CHECK(reason("check_theorem_4_1", {"0", "3", "0"}).has_value());

  CHECK(reason("check_special_values", {"0"}).has_value());
  CHECK(reason("check_special_values", {"7"}).has_value());
  CHECK(!reason("check_special_values", {"8"}).has_value());

  CHECK(reason("check_3_2", {"6"}).has_value() == false);
  CHECK(reason("check_3_2", {"7"}).value().find("even") != std::string::npos);

  // Shifted index guard: 3 * 2^20 + 2 blows through the table bound.
  CHECK(reason("check_lemma_3_2", {"3", "20", "2"}).value().find("bound") != std::string::npos);
  CHECK(!reason("check_lemma_3_2", {"3", "10", "12"}).has_value());
}

TEST_CASE("demands are consistent with what a run actually touches") {
  for (const CheckDef& def : check_registry()) {
    CAPTURE(def.name);
    const auto& point = sample_points().at(def.name);
    REQUIRE(!def.admissible(point).has_value());
    Demands d = def.demands(point);

    SequenceCache cache;
    if (d.u >= 0) cache.u_number(d.u);
    if (d.euler >= 0) cache.euler_number(d.euler);
    if (d.bernoulli >= 0) cache.bernoulli_number(d.bernoulli);
    long u_before = cache.u_high_water();
    long e_before = cache.euler_high_water();
    long b_before = cache.bernoulli_high_water();

    CheckResult r = def.run(cache, point);
    CHECK(r.passed());
    CHECK(r.check == def.name);

    // Warm-up to the declared demands must fully cover the run.
    CHECK(cache.u_high_water() == u_before);
    CHECK(cache.euler_high_water() == e_before);
    CHECK(cache.bernoulli_high_water() == b_before);
  }
}

TEST_CASE("declared demand indices match the shifted-index arithmetic") {
  const CheckDef* l32 = find_check("check_lemma_3_2");
  Demands d = l32->demands(vals({"3", "10", "12"}));
  CHECK(d.u == 3084);  // 3 * 2^10 + 12
  CHECK(d.euler == -1);

  const CheckDef* t51 = find_check("check_theorem_5_1");
  Demands d2 = t51->demands(vals({"3", "5", "10"}));
  CHECK(d2.euler == 496);  // 3 * phi(3^5) + 10 = 3*162 + 10
  CHECK(d2.u == -1);

  const CheckDef* cs = find_check("check_classical_sums");
  Demands d3 = cs->demands(vals({"3", "5"}));
  CHECK(d3.euler == 2);
  CHECK(d3.bernoulli == 4);
}
