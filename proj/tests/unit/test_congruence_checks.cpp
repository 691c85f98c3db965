#include "useq/congruence_checks.hpp"

#include <vector>

#include "doctest.h"
#include "useq/modular.hpp"

using namespace useq;

namespace {

// Single congruence expected: both canonical residues equal `residue` with
// the given modulus.
void require_residue(const CheckResult& r, long residue, const Integer& modulus) {
  REQUIRE(r.comparisons.size() == 1);
  CAPTURE(to_string(r.comparisons[0].lhs));
  CAPTURE(to_string(r.comparisons[0].rhs));
  CHECK(r.comparisons[0].lhs == Rational(residue));
  CHECK(r.comparisons[0].rhs == Rational(residue));
  REQUIRE(r.comparisons[0].modulus.has_value());
  CHECK(*r.comparisons[0].modulus == modulus);
  CHECK(r.passed());
}

std::vector<long> primes_in(long lo, long hi, long residue_mod_3 = -1) {
  std::vector<long> out;
  for (long p = lo; p <= hi; ++p)
    if (is_prime(p) && (residue_mod_3 < 0 || p % 3 == residue_mod_3)) out.push_back(p);
  return out;
}

}  // namespace

TEST_CASE("alternating harmonic sum to [2p/3] against 3p(p|3)U_{p-3}") {
  SequenceCache cache;
  // p=5: 1 - 1/2 + 1/3 == 1 - 13 + 17 == 5, and 15*(5|3)*U_2 = 30 == 5 (mod 25).
  require_residue(check_1_2(cache, 5), 5, Integer(25));
  // p=7: 1 - 25 + 33 - 37 == 21, and 21*1*22 = 462 == 21 (mod 49).
  require_residue(check_1_2(cache, 7), 21, Integer(49));
  for (long p : primes_in(5, 200)) {
    CAPTURE(p);
    CHECK(check_1_2(cache, p).passed());
  }
  CHECK_THROWS_AS(check_1_2(cache, 3), std::invalid_argument);
  CHECK_THROWS_AS(check_1_2(cache, 9), std::invalid_argument);
}

TEST_CASE("Bernoulli polynomial at one third against 6U_{p-3}") {
  SequenceCache cache;
  // p=5: B_3(1/3) = 1/27 == 3 (mod 5) and 6*U_2 = -12 == 3 (mod 5).
  require_residue(check_1_3(cache, 5), 3, Integer(5));
  for (long p : primes_in(5, 200)) {
    CAPTURE(p);
    CHECK(check_1_3(cache, p).passed());
  }
}

TEST_CASE("central binomial sum against (p|3) - 2p^2 U_{p-3}") {
  SequenceCache cache;
  // p=5: 1+2+6+20+70 = 99 and -1 + 100 = 99 (mod 125).
  require_residue(check_1_4(cache, 5), 99, Integer(125));
  // p=7: 1275 == 246 and 1 - 2156 == 246 (mod 343).
  require_residue(check_1_4(cache, 7), 246, Integer(343));
  for (long p : primes_in(5, 200)) {
    CAPTURE(p);
    CHECK(check_1_4(cache, p).passed());
  }
}

TEST_CASE("central trinomial-style binomial against the 4p = L^2 + 27M^2 datum") {
  SequenceCache cache;
  // p=7: L=1, C(4,2)=6; RHS = -1 + 7 + 49(1 - 22) = -1023 == 6 (mod 343).
  require_residue(check_1_5(cache, 7), 6, Integer(343));
  // p=13: L=-5, C(8,4)=70 (mod 2197).
  auto r13 = check_1_5(cache, 13);
  REQUIRE(r13.comparisons.size() == 1);
  CHECK(r13.comparisons[0].lhs == Rational(70));
  CHECK(r13.passed());
  for (long p : primes_in(7, 500, 1)) {
    CAPTURE(p);
    CHECK(check_1_5(cache, p).passed());
  }
  CHECK_THROWS_AS(check_1_5(cache, 5), std::invalid_argument);   // 5 == 2 (mod 3)
  CHECK_THROWS_AS(check_1_5(cache, 21), std::invalid_argument);  // not prime
}

TEST_CASE("mod-128 linear form of U_{2n}") {
  SequenceCache cache;
  // n=3: U_6 = -602 == 38 and -16*3 - 42 = -90 == 38 (mod 128).
  require_residue(check_3_1(cache, 3), 38, Integer(128));
  require_residue(check_3_1(cache, 4), 22, Integer(128));
  for (long n = 3; n <= 100; ++n) {
    CAPTURE(n);
    CHECK(check_3_1(cache, n).passed());
  }
  CHECK_THROWS_AS(check_3_1(cache, 2), std::invalid_argument);
}

TEST_CASE("2-adically sharpened linear form for even n") {
  SequenceCache cache;
  // n=4 (a=2): U_8 = 30742 == 22 and 192 + 2/3 == 192 + 342 == 22 (mod 512).
  require_residue(check_3_2(cache, 4), 22, Integer(512));
  for (long n = 4; n <= 100; n += 2) {
    CAPTURE(n);
    CHECK(check_3_2(cache, n).passed());
  }
  CHECK_THROWS_AS(check_3_2(cache, 5), std::invalid_argument);
  CHECK_THROWS_AS(check_3_2(cache, 2), std::invalid_argument);
}

TEST_CASE("deep 2-adic expansion of 3U_{2n} with the U_{2n-2} correction") {
  SequenceCache cache;
  for (long n : {5L, 8L, 12L}) {
    CAPTURE(n);
    auto r = check_lemma_3_1(cache, n);
    REQUIRE(r.comparisons.size() == 1);
    long a = ord_p(Integer(n), Integer(2));
    CHECK(*r.comparisons[0].modulus == pow2(static_cast<unsigned long>(a + 19)));
    CHECK(r.passed());
  }
  for (long n = 5; n <= 64; ++n) {
    CAPTURE(n);
    CHECK(check_lemma_3_1(cache, n).passed());
  }
}

TEST_CASE("quartic polynomial congruence for 3U_{2n}") {
  SequenceCache cache;
  // n=7 (a=0): 3*U_14 = -151206237006 and -5673806 both == 11442 (mod 2^14).
  require_residue(check_theorem_3_1(cache, 7), 11442, Integer(16384));
  for (long n = 7; n <= 64; ++n) {
    CAPTURE(n);
    CHECK(check_theorem_3_1(cache, n).passed());
  }
  CHECK_THROWS_AS(check_theorem_3_1(cache, 6), std::invalid_argument);
}

TEST_CASE("weaker 2-adic orders remain satisfied at selected n") {
  // The registered checks use the exact order a = ord_2(n); here we confirm
  // directly that the congruences also hold with any smaller order in the
  // exponent, on a few parameters with a >= 2.
  SequenceCache cache;
  for (long n : {8L, 12L, 64L}) {
    long a = ord_p(Integer(n), Integer(2));
    REQUIRE(a >= 2);
    Integer u2n = cache.u_number(2 * n);
    Integer nn(n);
    Integer quartic = -3072 * nn * nn * nn * nn + 4608 * nn * nn * nn + 2240 * nn * nn +
                      1680 * nn + 2;
    for (long weaker = 0; weaker <= a; ++weaker) {
      CAPTURE(n);
      CAPTURE(weaker);
      Modulus m7(pow2(static_cast<unsigned long>(weaker + 7)));
      CHECK(reduce_int(u2n, m7) == reduce_rational(make_rational(144 * n + 2, 3), m7));
      Modulus m14(pow2(static_cast<unsigned long>(weaker + 14)));
      CHECK(reduce_int(3 * u2n, m14) == reduce_int(quartic, m14));
    }
  }
}

TEST_CASE("difference form of the 2-power shift congruence") {
  SequenceCache cache;
  // (1,3,2): U_10 - U_2 == 8 and 2^3/9 == 8*57 == 8 (mod 64).
  require_residue(check_lemma_3_2(cache, 1, 3, 2), 8, Integer(64));
  CHECK(check_lemma_3_2(cache, 1, 4, 4).passed());
  CHECK(check_lemma_3_2(cache, 2, 5, 6).passed());
  CHECK_THROWS_AS(check_lemma_3_2(cache, 1, 3, 3), std::invalid_argument);
  CHECK_THROWS_AS(check_lemma_3_2(cache, 1, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(check_lemma_3_2(cache, 0, 3, 2), std::invalid_argument);
}

TEST_CASE("parts of the 2-power shift congruence at hand-checked points") {
  SequenceCache cache;

  auto r132 = check_theorem_3_2(cache, 1, 3, 2);
  REQUIRE(r132.comparisons.size() == 2);  // iii needs 4 <= b <= m-2
  CHECK(r132.comparisons[0].label == "i");
  CHECK(r132.comparisons[0].lhs == Rational(6));  // U_10 == 6 (mod 32)
  CHECK(*r132.comparisons[0].modulus == 32);
  CHECK(r132.comparisons[1].label == "ii");
  CHECK(r132.comparisons[1].lhs == Rational(6));  // U_10 == -10/9 == 6 (mod 64)
  CHECK(*r132.comparisons[1].modulus == 64);
  CHECK(r132.passed());

  auto r164 = check_theorem_3_2(cache, 1, 6, 4);
  REQUIRE(r164.comparisons.size() == 3);
  CHECK(r164.comparisons[0].label == "i");
  CHECK(*r164.comparisons[0].modulus == 128);
  CHECK(r164.comparisons[0].rhs == Rational(54));  // U_4 + 2^5 = 54
  CHECK(r164.comparisons[1].label == "ii");        // U_68 == 34/3 (mod 2^9)
  CHECK(*r164.comparisons[1].modulus == 512);
  CHECK(r164.comparisons[2].label == "iii");  // U_68 == U_4 + 2^5 * 21 (mod 2^9)
  CHECK(*r164.comparisons[2].modulus == 512);
  CHECK(r164.comparisons[2].rhs == Rational(694 % 512));
  CHECK(r164.passed());

  auto r328 = check_theorem_3_2(cache, 3, 2, 8);
  REQUIRE(r328.comparisons.size() == 1);  // only part i applies
  CHECK(r328.comparisons[0].label == "i");
  CHECK(*r328.comparisons[0].modulus == 32);
  CHECK(r328.passed());
}

TEST_CASE("plain 2-power shift stability of U") {
  SequenceCache cache;
  // (1,5,2): U_34 == U_2 == -2 == 6 (mod 8).
  require_residue(check_corollary_3_1(cache, 1, 5, 2), 6, Integer(8));
  // (1,1,2): min(b,m)+1 = 2, so the modulus is 4.
  auto r = check_corollary_3_1(cache, 1, 1, 2);
  REQUIRE(r.comparisons.size() == 1);
  CHECK(*r.comparisons[0].modulus == 4);
  CHECK(r.passed());
  CHECK(check_corollary_3_1(cache, 2, 3, 6).passed());
}

TEST_CASE("2-power shift family over the full grid, with consistency") {
  SequenceCache cache;
  for (long k = 1; k <= 3; ++k)
    for (long m = 1; m <= 10; ++m)
      for (long b = 2; b <= 12; b += 2) {
        CAPTURE(k);
        CAPTURE(m);
        CAPTURE(b);
        CHECK(check_lemma_3_2(cache, k, m, b).passed());
        auto parts = check_theorem_3_2(cache, k, m, b);
        auto plain = check_corollary_3_1(cache, k, m, b);
        CHECK(parts.passed());
        CHECK(plain.passed());
        // Part (i) at modulus 2^{min(b,m)+3} subsumes the plain form at
        // 2^{min(b,m)+1}: whenever (i) holds, the corollary must too.
        REQUIRE(!parts.comparisons.empty());
        REQUIRE(parts.comparisons[0].label == "i");
        Integer strong = *parts.comparisons[0].modulus;
        Integer weak = *plain.comparisons[0].modulus;
        CHECK(strong % weak == 0);
      }
}

TEST_CASE("3-power shift congruence for U with linear correction") {
  SequenceCache cache;
  // (1,3,0): U_18 - U_0 == 27*(-40) == 1107 (mod 3^7).
  require_residue(check_theorem_4_1(cache, 1, 3, 0), 1107 % 2187, Integer(2187));
  // (1,3,4): b == 1 (mod 3) branch, -22*27 = -594 == 1593 (mod 2187).
  require_residue(check_theorem_4_1(cache, 1, 3, 4), 1593, Integer(2187));
  // (2,4,8): b == 2 (mod 3) branch, -2*81*40 = -6480 == 81 (mod 6561).
  require_residue(check_theorem_4_1(cache, 2, 4, 8), 81, Integer(6561));
  for (long k = 1; k <= 2; ++k)
    for (long m = 3; m <= 4; ++m)
      for (long b = 0; b <= 10; b += 2) {
        CAPTURE(k);
        CAPTURE(m);
        CAPTURE(b);
        CHECK(check_theorem_4_1(cache, k, m, b).passed());
      }
  CHECK_THROWS_AS(check_theorem_4_1(cache, 1, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(check_theorem_4_1(cache, 1, 3, 5), std::invalid_argument);
}

TEST_CASE("2-power shift congruence for Euler numbers") {
  SequenceCache cache;
  // (1,4,0): E_16 - 1 == 80 == 5*16 (mod 256).
  require_residue(check_euler_mod_pow2(cache, 1, 4, 0), 80, Integer(256));
  // (1,4,2): b == 2 (mod 8) branch, -3*16 = -48 == 208 (mod 256).
  require_residue(check_euler_mod_pow2(cache, 1, 4, 2), 208, Integer(256));
  // (2,5,6): b == 6 (mod 8) branch, 5*32*2 = 320 (mod 512).
  require_residue(check_euler_mod_pow2(cache, 2, 5, 6), 320, Integer(512));
  for (long k = 1; k <= 2; ++k)
    for (long m = 4; m <= 5; ++m)
      for (long b = 0; b <= 10; b += 2) {
        CAPTURE(k);
        CAPTURE(m);
        CAPTURE(b);
        CHECK(check_euler_mod_pow2(cache, k, m, b).passed());
      }
  CHECK_THROWS_AS(check_euler_mod_pow2(cache, 1, 3, 0), std::invalid_argument);
}

TEST_CASE("3-power periodicity of Euler numbers") {
  SequenceCache cache;
  // (1,1,0): E_2 == -1 == 2 == (3^0+1)E_0 (mod 3).
  require_residue(check_euler_mod_pow3(cache, 1, 1, 0), 2, Integer(3));
  // (1,2,2): E_14 == 10*E_2 == -10 == 8 (mod 9).
  require_residue(check_euler_mod_pow3(cache, 1, 2, 2), 8, Integer(9));
  CHECK(check_euler_mod_pow3(cache, 1, 3, 4).passed());
  for (long k = 1; k <= 2; ++k)
    for (long m = 1; m <= 4; ++m)
      for (long b = 0; b <= 8; b += 2) {
        CAPTURE(k);
        CAPTURE(m);
        CAPTURE(b);
        CHECK(check_euler_mod_pow3(cache, k, m, b).passed());
      }
}

TEST_CASE("sharpened 3-power shift congruence for Euler numbers") {
  SequenceCache cache;
  // (1,3,0): E_18 - 2 == 540 == 20*27 (mod 3^7).
  require_residue(check_theorem_5_1(cache, 1, 3, 0), 540, Integer(2187));
  // (1,3,2): b == 2 (mod 3) branch, 27*(-7) = -189 == 1998 (mod 2187).
  require_residue(check_theorem_5_1(cache, 1, 3, 2), 1998, Integer(2187));
  // (1,4,6): 3 | b branch, 74*81 = 5994 (mod 6561).
  require_residue(check_theorem_5_1(cache, 1, 4, 6), 5994, Integer(6561));
  for (long k = 1; k <= 2; ++k)
    for (long m = 3; m <= 4; ++m)
      for (long b = 0; b <= 10; b += 2) {
        CAPTURE(k);
        CAPTURE(m);
        CAPTURE(b);
        CHECK(check_theorem_5_1(cache, k, m, b).passed());
      }
  CHECK_THROWS_AS(check_theorem_5_1(cache, 1, 2, 0), std::invalid_argument);
}

TEST_CASE("congruence results carry the declared parameter names in order") {
  SequenceCache cache;
  auto r = check_theorem_4_1(cache, 1, 3, 4);
  REQUIRE(r.params.size() == 3);
  CHECK(r.params[0].name == "k");
  CHECK(r.params[1].name == "m");
  CHECK(r.params[2].name == "b");
  auto rp = check_1_4(cache, 5);
  REQUIRE(rp.params.size() == 1);
  CHECK(rp.params[0].name == "p");
  CHECK(rp.params[0].value == Rational(5));
  auto rn = check_3_1(cache, 3);
  REQUIRE(rn.params.size() == 1);
  CHECK(rn.params[0].name == "n");
}
