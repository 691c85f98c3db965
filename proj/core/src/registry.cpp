#include "useq/registry.hpp"

#include <cstdlib>
#include <string>
#include <utility>

#include "useq/congruence_checks.hpp"
#include "useq/identity_checks.hpp"
#include "useq/modular.hpp"

namespace useq {
namespace {

using Values = std::vector<Rational>;

long as_long(const Rational& v) { return to_long(v.get_num()); }

// Integrality + magnitude screen shared by every integer-kind parameter.
// Returns the reason the value is unusable, or nothing.
std::optional<std::string> screen_integer(const Rational& v, const std::string& name) {
  if (!is_integral(v)) return name + " must be an integer";
  Integer num = v.get_num();
  if (num > kMaxSequenceIndex || num < -kMaxSequenceIndex)
    return name + " exceeds the supported bound " + std::to_string(kMaxSequenceIndex);
  return std::nullopt;
}

std::optional<std::string> at_least(const Rational& v, const std::string& name, long lo) {
  if (auto r = screen_integer(v, name)) return r;
  if (as_long(v) < lo) return name + " must be at least " + std::to_string(lo);
  return std::nullopt;
}

std::optional<std::string> even_at_least(const Rational& v, const std::string& name, long lo) {
  if (auto r = at_least(v, name, lo)) return r;
  if (as_long(v) % 2 != 0) return name + " must be even";
  return std::nullopt;
}

std::optional<std::string> prime_above_3(const Rational& v) {
  if (auto r = at_least(v, "p", 5)) return r;
  if (!is_prime(Integer(as_long(v)))) return std::string("p must be prime");
  return std::nullopt;
}

// The shifted index 2^m k + b (or k phi(3^m) + b) must stay inside the table
// bound; checked on exact integers so huge m cannot overflow.
std::optional<std::string> index_within_bound(const Integer& idx) {
  if (idx > kMaxSequenceIndex)
    return "shifted index " + to_string(idx) + " exceeds the supported bound " +
           std::to_string(kMaxSequenceIndex);
  return std::nullopt;
}

Integer pow2_index(const Values& v) {
  return pow2(static_cast<unsigned long>(as_long(v[1]))) * as_long(v[0]) + as_long(v[2]);
}

Integer pow3_index(const Values& v) {
  return totient_pow3(as_long(v[1])) * as_long(v[0]) + as_long(v[2]);
}

long even_floor(long n) { return n - (n % 2 != 0 ? 1 : 0); }

CheckDef def_n_x(const char* name, const char* point_name, long min_n,
                 CheckResult (*fn)(SequenceCache&, long, const Rational&)) {
  CheckDef def;
  def.name = name;
  def.params = {{"n", ParamKind::integral}, {point_name, ParamKind::rational}};
  def.admissible = [min_n](const Values& v) { return at_least(v[0], "n", min_n); };
  def.demands = [](const Values& v) { return Demands{even_floor(as_long(v[0])), -1, -1}; };
  def.run = [fn](SequenceCache& c, const Values& v) { return fn(c, as_long(v[0]), v[1]); };
  return def;
}

CheckDef def_prime(const char* name, long min_u_offset,
                   CheckResult (*fn)(SequenceCache&, long), bool wants_bernoulli = false,
                   bool one_mod_3 = false) {
  CheckDef def;
  def.name = name;
  def.params = {{"p", ParamKind::integral}};
  def.admissible = [one_mod_3](const Values& v) -> std::optional<std::string> {
    if (auto r = prime_above_3(v[0])) return r;
    if (one_mod_3 && as_long(v[0]) % 3 != 1) return std::string("p must be 1 modulo 3");
    return std::nullopt;
  };
  def.demands = [min_u_offset, wants_bernoulli](const Values& v) {
    long p = as_long(v[0]);
    return Demands{p + min_u_offset, -1, wants_bernoulli ? p - 2 : -1};
  };
  def.run = [fn](SequenceCache& c, const Values& v) { return fn(c, as_long(v[0])); };
  return def;
}

CheckDef def_two_adic_n(const char* name, long min_n, bool needs_even,
                        CheckResult (*fn)(SequenceCache&, long)) {
  CheckDef def;
  def.name = name;
  def.params = {{"n", ParamKind::integral}};
  def.admissible = [min_n, needs_even](const Values& v) {
    return needs_even ? even_at_least(v[0], "n", min_n) : at_least(v[0], "n", min_n);
  };
  def.demands = [](const Values& v) { return Demands{2 * as_long(v[0]), -1, -1}; };
  def.run = [fn](SequenceCache& c, const Values& v) { return fn(c, as_long(v[0])); };
  return def;
}

// The (k, m, b) family.  `pow3_shift` picks k*phi(3^m)+b over 2^m*k+b;
// `euler_side` routes the demand to the Euler table instead of U.
CheckDef def_shift(const char* name, long min_m, long min_b, bool pow3_shift, bool euler_side,
                   CheckResult (*fn)(SequenceCache&, long, long, long)) {
  CheckDef def;
  def.name = name;
  def.params = {{"k", ParamKind::integral}, {"m", ParamKind::integral},
                {"b", ParamKind::integral}};
  def.admissible = [min_m, min_b, pow3_shift](const Values& v) -> std::optional<std::string> {
    if (auto r = at_least(v[0], "k", 1)) return r;
    if (auto r = at_least(v[1], "m", min_m)) return r;
    if (auto r = even_at_least(v[2], "b", min_b)) return r;
    return index_within_bound(pow3_shift ? pow3_index(v) : pow2_index(v));
  };
  def.demands = [pow3_shift, euler_side](const Values& v) {
    long idx = to_long(pow3_shift ? pow3_index(v) : pow2_index(v));
    return euler_side ? Demands{-1, idx, -1} : Demands{idx, -1, -1};
  };
  def.run = [fn](SequenceCache& c, const Values& v) {
    return fn(c, as_long(v[0]), as_long(v[1]), as_long(v[2]));
  };
  return def;
}

std::vector<CheckDef> build_registry() {
  std::vector<CheckDef> defs;

  defs.push_back(def_n_x("check_translation", "x", 0, &check_translation));
  defs.push_back(def_n_x("check_shift3_sum", "x", 0, &check_shift3_sum));
  defs.push_back(def_n_x("check_shift3_diff", "x", 0, &check_shift3_diff));
  defs.push_back(def_n_x("check_poly_recurrence", "x", 1, &check_poly_recurrence));
  defs.push_back(def_n_x("check_integral_shift", "a", 0, &check_integral_shift));
  defs.push_back(def_n_x("check_antiderivative", "x", 1, &check_antiderivative));

  {
    CheckDef def;
    def.name = "check_classical_sums";
    def.params = {{"n", ParamKind::integral}, {"m", ParamKind::integral}};
    def.admissible = [](const Values& v) -> std::optional<std::string> {
      if (auto r = at_least(v[0], "n", 1)) return r;
      return at_least(v[1], "m", 1);
    };
    def.demands = [](const Values& v) {
      long n = as_long(v[0]);
      return Demands{-1, even_floor(n), n + 1};
    };
    def.run = [](SequenceCache& c, const Values& v) {
      return check_classical_sums(c, as_long(v[0]), as_long(v[1]));
    };
    defs.push_back(std::move(def));
  }
  {
    CheckDef def;
    def.name = "check_theorem_2_1";
    def.params = {{"n", ParamKind::integral}, {"m", ParamKind::integral}};
    def.admissible = [](const Values& v) -> std::optional<std::string> {
      if (auto r = at_least(v[0], "n", 1)) return r;
      return at_least(v[1], "m", 1);
    };
    def.demands = [](const Values& v) { return Demands{even_floor(as_long(v[0])), -1, -1}; };
    def.run = [](SequenceCache& c, const Values& v) {
      return check_theorem_2_1(c, as_long(v[0]), as_long(v[1]));
    };
    defs.push_back(std::move(def));
  }
  {
    CheckDef def;
    def.name = "check_corollary_2_1";
    def.params = {{"m", ParamKind::integral}};
    def.admissible = [](const Values& v) { return at_least(v[0], "m", 1); };
    def.demands = [](const Values&) { return Demands{}; };
    def.run = [](SequenceCache& c, const Values& v) {
      return check_corollary_2_1(c, as_long(v[0]));
    };
    defs.push_back(std::move(def));
  }
  {
    CheckDef def;
    def.name = "check_corollary_2_2";
    def.params = {{"n", ParamKind::integral}};
    def.admissible = [](const Values& v) { return at_least(v[0], "n", 1); };
    def.demands = [](const Values& v) { return Demands{2 * as_long(v[0]), -1, -1}; };
    def.run = [](SequenceCache& c, const Values& v) {
      return check_corollary_2_2(c, as_long(v[0]));
    };
    defs.push_back(std::move(def));
  }
  {
    CheckDef def;
    def.name = "check_special_values";
    def.params = {{"n", ParamKind::integral}};
    def.admissible = [](const Values& v) { return even_at_least(v[0], "n", 2); };
    def.demands = [](const Values& v) { return Demands{as_long(v[0]), -1, -1}; };
    def.run = [](SequenceCache& c, const Values& v) {
      return check_special_values(c, as_long(v[0]));
    };
    defs.push_back(std::move(def));
  }
  {
    CheckDef def;
    def.name = "check_lemma_4_1";
    def.params = {{"n", ParamKind::integral}};
    def.admissible = [](const Values& v) { return at_least(v[0], "n", 1); };
    def.demands = [](const Values& v) {
      long n2 = 2 * as_long(v[0]);
      return Demands{n2, n2, -1};
    };
    def.run = [](SequenceCache& c, const Values& v) { return check_lemma_4_1(c, as_long(v[0])); };
    defs.push_back(std::move(def));
  }
  {
    CheckDef def;
    def.name = "check_lemma_5_1";
    def.params = {{"n", ParamKind::integral}};
    def.admissible = [](const Values& v) { return at_least(v[0], "n", 1); };
    def.demands = [](const Values& v) { return Demands{-1, 2 * as_long(v[0]), -1}; };
    def.run = [](SequenceCache& c, const Values& v) { return check_lemma_5_1(c, as_long(v[0])); };
    defs.push_back(std::move(def));
  }

  defs.push_back(def_prime("check_1_2", -3, &check_1_2));
  defs.push_back(def_prime("check_1_3", -3, &check_1_3, /*wants_bernoulli=*/true));
  defs.push_back(def_prime("check_1_4", -3, &check_1_4));
  defs.push_back(def_prime("check_1_5", -3, &check_1_5, false, /*one_mod_3=*/true));

  defs.push_back(def_two_adic_n("check_3_1", 3, false, &check_3_1));
  defs.push_back(def_two_adic_n("check_3_2", 4, true, &check_3_2));
  defs.push_back(def_two_adic_n("check_lemma_3_1", 5, false, &check_lemma_3_1));
  defs.push_back(def_two_adic_n("check_theorem_3_1", 7, false, &check_theorem_3_1));

  defs.push_back(def_shift("check_lemma_3_2", 1, 2, false, false, &check_lemma_3_2));
  defs.push_back(def_shift("check_theorem_3_2", 1, 2, false, false, &check_theorem_3_2));
  defs.push_back(def_shift("check_corollary_3_1", 1, 2, false, false, &check_corollary_3_1));
  defs.push_back(def_shift("check_theorem_4_1", 3, 0, true, false, &check_theorem_4_1));
  defs.push_back(def_shift("check_euler_mod_pow2", 4, 0, false, true, &check_euler_mod_pow2));
  defs.push_back(def_shift("check_euler_mod_pow3", 1, 0, true, true, &check_euler_mod_pow3));
  defs.push_back(def_shift("check_theorem_5_1", 3, 0, true, true, &check_theorem_5_1));

  return defs;
}

}  // namespace

const std::vector<CheckDef>& check_registry() {
  static const std::vector<CheckDef> registry = build_registry();
  return registry;
}

const CheckDef* find_check(const std::string& name) {
  const std::string canonical =
      name.rfind("check_", 0) == 0 ? name : std::string("check_") + name;
  for (const CheckDef& def : check_registry())
    if (def.name == canonical) return &def;
  return nullptr;
}

}  // namespace useq
