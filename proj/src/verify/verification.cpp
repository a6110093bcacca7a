#include "newform_weyl/verify/verification.hpp"

#include <boost/math/special_functions/zeta.hpp>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "newform_weyl/arith/arith_fn.hpp"
#include "newform_weyl/arith/characters.hpp"
#include "newform_weyl/arith/sieve.hpp"
#include "newform_weyl/arith/standard.hpp"
#include "newform_weyl/spectral/classify.hpp"
#include "newform_weyl/spectral/coefficients.hpp"
#include "newform_weyl/spectral/dirichlet_series.hpp"
#include "newform_weyl/spectral/invariants.hpp"

namespace nw::verify {

using arith::ArithFn;
using arith::PrimeFactorization;
using arith::StandardFn;

void CheckResult::record(bool ok, Counterexample example) {
  ++cases;
  if (ok) return;
  ++failure_count;
  if (failures.size() < kMaxRecordedFailures) failures.push_back(std::move(example));
}

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

std::string_view to_string(Suite suite) {
  switch (suite) {
    case Suite::Group:
      return "group";
    case Suite::ClosedForms:
      return "closed-forms";
    case Suite::Classifier:
      return "classifier";
    case Suite::DirichletSeries:
      return "dirichlet-series";
  }
  return "unknown";
}

std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : {Suite::Group, Suite::ClosedForms, Suite::Classifier, Suite::DirichletSeries}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

SuiteReport run_suite(Suite suite, const VerifyOptions& options) {
  switch (suite) {
    case Suite::Group:
      return run_group_suite(options);
    case Suite::ClosedForms:
      return run_closed_forms_suite(options);
    case Suite::Classifier:
      return run_classifier_suite(options);
    case Suite::DirichletSeries:
      return run_dirichlet_series_suite(options);
  }
  return {};
}

namespace {

CheckResult named(std::string name) {
  CheckResult check;
  check.name = std::move(name);
  return check;
}

std::string at_level(std::uint64_t M) { return "M=" + std::to_string(M); }

std::string at_prime_power(std::uint64_t p, unsigned m) {
  return "p=" + std::to_string(p) + ",m=" + std::to_string(m);
}

template <class T>
std::string show(const T& value) {
  if constexpr (std::is_same_v<T, Integer>) {
    return value.get_str();
  } else if constexpr (std::is_same_v<T, bool>) {
    return value ? "true" : "false";
  } else if constexpr (std::is_arithmetic_v<T>) {
    std::ostringstream os;
    os.precision(17);
    os << value;
    return os.str();
  } else {
    return value.str();
  }
}

template <class T>
void expect_equal(CheckResult& check, std::string where, std::string quantity, const T& expected, const T& got) {
  const bool ok = expected == got;
  if (ok) {
    check.record(true, {});
  } else {
    check.record(false, {std::move(where), std::move(quantity), show(expected), show(got)});
  }
}

void expect_close(CheckResult& check, std::string where, std::string quantity, double expected, double got,
                  double tolerance) {
  const bool ok = std::abs(expected - got) <= tolerance;
  if (ok) {
    check.record(true, {});
  } else {
    check.record(false, {std::move(where), std::move(quantity), show(expected), show(got)});
  }
}

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Small rational in [-9, 9] / [1, 4], deterministic in `key`.
Rational random_value(std::uint64_t key, bool nonzero) {
  const std::uint64_t h = mix(key);
  long num = static_cast<long>(h % 19) - 9;
  const long den = 1 + static_cast<long>((h >> 8) % 4);
  if (nonzero && num == 0) num = 1;
  return Rational(Integer(num), Integer(den));
}

ArithFn random_fn(std::uint64_t seed) {
  return ArithFn::from_values("rand", [seed](std::uint64_t n) { return random_value(seed ^ mix(n), n == 1); });
}

ArithFn random_multiplicative_fn(std::uint64_t seed) {
  return ArithFn::multiplicative("rand_mult", [seed](std::uint64_t p, unsigned e) {
    return random_value(seed ^ mix(p * 64 + e), false);
  });
}

const ArithFn& sigma0_inverse_by_recursion() {
  static const ArithFn fn = arith::standard_fn(StandardFn::Sigma, 0).inverse();
  return fn;
}

}  // namespace

// ---------------------------------------------------------------------------

SuiteReport run_group_suite(const VerifyOptions& options) {
  SuiteReport report{"group", {}, {}};
  std::mt19937_64 rng(options.seed);
  constexpr std::uint64_t kMaxN = 2000;
  std::uniform_int_distribution<std::uint64_t> pick_n(1, kMaxN);
  const ArithFn identity = arith::standard_fn(StandardFn::IdentityI);

  CheckResult commutative = named("commutativity"), associative = named("associativity");
  CheckResult unit = named("identity-element"), inverse = named("inverse");
  for (std::size_t i = 0; i < options.random_instances; ++i) {
    const ArithFn f = random_fn(rng());
    const ArithFn g = random_fn(rng());
    const ArithFn h = random_fn(rng());
    const std::uint64_t n = pick_n(rng);
    const std::string where = "instance " + std::to_string(i) + ", n=" + std::to_string(n);
    expect_equal(commutative, where, "(f*g)(n) vs (g*f)(n)", arith::dirichlet_convolve(f, g, n),
                 arith::dirichlet_convolve(g, f, n));
    expect_equal(associative, where, "((f*g)*h)(n) vs (f*(g*h))(n)",
                 arith::dirichlet_convolve(arith::convolution(f, g), h, n),
                 arith::dirichlet_convolve(f, arith::convolution(g, h), n));
    expect_equal(unit, where, "(f*I)(n) vs f(n)", f(n), arith::dirichlet_convolve(f, identity, n));
    expect_equal(inverse, where, "(f*f^-1)(n) vs I(n)", identity(n), arith::dirichlet_convolve(f, f.inverse(), n));
  }

  CheckResult closure = named("multiplicative-closure");
  constexpr std::uint64_t kMaxProduct = 10'000;
  std::uniform_int_distribution<std::uint64_t> pick_factor(1, 100);
  for (std::size_t i = 0; i < options.random_instances; ++i) {
    const ArithFn f = random_multiplicative_fn(rng());
    const ArithFn g = random_multiplicative_fn(rng());
    std::uint64_t m = 0, n = 0;
    do {
      m = pick_factor(rng);
      n = pick_factor(rng);
    } while (std::gcd(m, n) != 1 || m * n > kMaxProduct);
    const std::string where = "instance " + std::to_string(i) + ", m=" + std::to_string(m) + ", n=" + std::to_string(n);
    // Divisor-sum path, without trusting the kernels.
    const ArithFn fg = arith::convolution(f.without_kernel(), g.without_kernel());
    expect_equal(closure, where, "(f*g)(mn) vs (f*g)(m)(f*g)(n)", fg(m) * fg(n), fg(m * n));
    const ArithFn f_inv = f.without_kernel().inverse();
    expect_equal(closure, where, "f^-1(mn) vs f^-1(m)f^-1(n)", f_inv(m) * f_inv(n), f_inv(m * n));
    expect_equal(closure, where, "kernel vs divisor-sum convolution", fg(m * n),
                 arith::dirichlet_convolve(f, g, m * n));
    expect_equal(closure, where, "kernel vs recursive inverse", f_inv(m * n), f.inverse()(m * n));
  }

  const std::uint64_t small = std::min<std::uint64_t>(options.max_level, 10'000);
  CheckResult sigma_inverse = named("sigma0-inverse-formula");
  const ArithFn mobius = arith::standard_fn(StandardFn::Mobius);
  const ArithFn table = arith::standard_fn(StandardFn::Sigma0Inverse);
  for (std::uint64_t n = 1; n <= small; ++n) {
    const Rational by_mobius = arith::dirichlet_convolve(mobius.without_kernel(), mobius.without_kernel(), n);
    expect_equal(sigma_inverse, at_level(n), "sum mu(d)mu(n/d) vs kernel table", table(n), by_mobius);
    expect_equal(sigma_inverse, at_level(n), "recursive inverse vs kernel table", table(n),
                 sigma0_inverse_by_recursion()(n));
  }

  CheckResult characters = named("primitive-characters");
  const ArithFn D = arith::standard_fn(StandardFn::PrimitiveCharCountD);
  const ArithFn phi = arith::standard_fn(StandardFn::Totient);
  for (std::uint64_t K = 1; K <= std::min<std::uint64_t>(options.max_level, 200); ++K) {
    expect_equal(characters, "K=" + std::to_string(K), "D(K) vs enumerated primitive characters", D(K),
                 Rational(arith::primitive_char_count_oracle(K)));
    expect_equal(characters, "K=" + std::to_string(K), "D(K) vs (phi*mu)(K)", D(K),
                 arith::dirichlet_convolve(phi.without_kernel(), mobius, K));
  }

  CheckResult totient_split = named("phi-equals-u*D");
  const ArithFn u = arith::standard_fn(StandardFn::UnitU);
  for (std::uint64_t K = 1; K <= small; ++K) {
    expect_equal(totient_split, "K=" + std::to_string(K), "phi(K) vs (u*D)(K)", phi(K),
                 arith::dirichlet_convolve(u.without_kernel(), D, K));
  }

  CheckResult mangoldt = named("mangoldt-log-identity");
  for (std::uint64_t n = 1; n <= std::min<std::uint64_t>(options.max_level, 2000); ++n) {
    LogCombination sum;
    for (const auto& d : arith::factorize(n).divisors()) sum += arith::mangoldt_log(*d.value_u64());
    expect_equal(mangoldt, at_level(n), "sum_{d|n} Lambda(d) vs log n", arith::log_of(n), sum);
  }

  report.checks = {commutative,   associative, unit,          inverse, closure,
                   sigma_inverse, characters,  totient_split, mangoldt};
  return report;
}

// ---------------------------------------------------------------------------

std::string c2_table_note() {
  std::ostringstream os;
  unsigned disagreements = 0;
  for (std::uint64_t p : {2, 3, 5, 7}) {
    for (unsigned n = 2; n <= 4; ++n) {
      const Integer alternative = (to_integer(p) + 1) * (to_integer(p) + 1) * pow(to_integer(p), n - 1);
      const Rational by_convolution = spectral::c2_new_scaled_oracle(PrimeFactorization::prime_power(p, 2 * n));
      if (Rational(alternative) != by_convolution) ++disagreements;
    }
  }
  os << "c2 table: (p+1)^2 p^(n-1) for -(pi/2)c2new(p^2n), n>1, disagrees with (k*sigma0^-1)(p^2n) in "
     << disagreements << "/12 sampled cases (e.g. p=3,n=2: 48 vs "
     << spectral::c2_new_scaled_oracle(PrimeFactorization::prime_power(3, 4)).str()
     << "); closed form (p-1)^2 p^(n-2) is used and matches the convolution";
  return os.str();
}

SuiteReport run_closed_forms_suite(const VerifyOptions& options) {
  SuiteReport report{"closed-forms", {}, {}};
  constexpr std::uint64_t kMaxPrime = 50;
  constexpr unsigned kMaxExponent = 12;

  CheckResult prime_powers = named("prime-power-closed-forms"), never_zero = named("L-never-zero-at-prime-powers");
  for (std::uint64_t p : arith::primes_up_to(kMaxPrime)) {
    for (unsigned m = 0; m <= kMaxExponent; ++m) {
      const auto M = PrimeFactorization::prime_power(p, m);
      const auto where = at_prime_power(p, m);
      expect_equal(prime_powers, where, "k", spectral::cusp_count_oracle(M), spectral::cusp_count(M));
      expect_equal(prime_powers, where, "v", spectral::v_oracle(M), spectral::v(M));
      expect_equal(prime_powers, where, "U", spectral::U_oracle(M), spectral::U(M));
      expect_equal(prime_powers, where, "L", spectral::L_oracle(M), spectral::L_prime_power(p, m));
      expect_equal(prime_powers, where, "-(pi/2)c2new", spectral::c2_new_scaled_oracle(M), spectral::U(M));
      if (m >= 1) {
        never_zero.record(!spectral::L_prime_power(p, m).is_zero() && !spectral::L_oracle(M).is_zero(),
                          {where, "L(p^m) != 0", "non-zero", "0"});
      }
    }
  }
  report.notes.push_back(c2_table_note());

  // Oracle tables on [1, small]; pair checks read from them.
  const std::uint64_t small = std::min<std::uint64_t>(options.max_level, 10'000);
  std::vector<Integer> k_oracle(small + 1);
  std::vector<Rational> v_oracle(small + 1), U_oracle(small + 1), c2_oracle(small + 1);
  std::vector<LogCombination> L_oracle(small + 1);
  CheckResult all_levels = named("closed-forms-all-levels");
  for (std::uint64_t M = 1; M <= small; ++M) {
    const auto F = arith::factorize(M);
    k_oracle[M] = spectral::cusp_count_oracle(F);
    v_oracle[M] = spectral::v_oracle(F);
    U_oracle[M] = spectral::U_oracle(F);
    c2_oracle[M] = spectral::c2_new_scaled_oracle(F);
    L_oracle[M] = spectral::L_oracle(F);
    expect_equal(all_levels, at_level(M), "k", k_oracle[M], spectral::cusp_count(F));
    expect_equal(all_levels, at_level(M), "v", v_oracle[M], spectral::v(F));
    expect_equal(all_levels, at_level(M), "U", U_oracle[M], spectral::U(F));
    expect_equal(all_levels, at_level(M), "-(pi/2)c2new", c2_oracle[M], spectral::U(F));
    expect_equal(all_levels, at_level(M), "L", L_oracle[M], spectral::L(F));
  }

  CheckResult multiplicative = named("multiplicativity"), splitting = named("L-splitting-law");
  for (std::uint64_t m = 2; m <= small; ++m) {
    for (std::uint64_t n = m + 1; m * n <= small; ++n) {
      if (std::gcd(m, n) != 1) continue;
      const std::string where = "M1=" + std::to_string(m) + ",M2=" + std::to_string(n);
      const std::uint64_t mn = m * n;
      expect_equal(multiplicative, where, "k", Integer(k_oracle[m] * k_oracle[n]), k_oracle[mn]);
      expect_equal(multiplicative, where, "v", v_oracle[m] * v_oracle[n], v_oracle[mn]);
      expect_equal(multiplicative, where, "U", U_oracle[m] * U_oracle[n], U_oracle[mn]);
      expect_equal(multiplicative, where, "-(pi/2)c2new", c2_oracle[m] * c2_oracle[n], c2_oracle[mn]);
      expect_equal(splitting, where, "U(M1)L(M2) + U(M2)L(M1)", U_oracle[m] * L_oracle[n] + U_oracle[n] * L_oracle[m],
                   L_oracle[mn]);
    }
  }

  CheckResult transfer = named("transfer-identity");
  std::vector<CoefficientTriple> newform(small + 1);
  for (std::uint64_t K = 1; K <= small; ++K) newform[K] = spectral::newform_coeffs(K);
  for (std::uint64_t M = 1; M <= small; ++M) {
    Rational c1;
    SymbolicCoefficient c2, c3;
    for (const auto& d : arith::factorize(M).divisors()) {
      const std::uint64_t K = *d.value_u64();
      const Rational weight(arith::factorize(M / K).divisor_count());
      c1 += weight * newform[K].c1;
      c2 += newform[K].c2 * weight;
      c3 += newform[K].c3 * weight;
    }
    const auto full = spectral::full_coeffs(M);
    expect_equal(transfer, at_level(M), "c1", full.c1, c1);
    expect_equal(transfer, at_level(M), "c2", full.c2, c2);
    expect_equal(transfer, at_level(M), "c3", full.c3, c3);
  }

  report.checks = {prime_powers, never_zero, all_levels, multiplicative, splitting, transfer};
  return report;
}

// ---------------------------------------------------------------------------

SuiteReport run_classifier_suite(const VerifyOptions& options) {
  SuiteReport report{"classifier", {}, {}};
  const std::uint64_t max_level = options.max_level;

  CheckResult equivalence = named("theorem-vs-oracle"), zero_law = named("L-zero-law");
  CheckResult corollary = named("c2-corollary"), remark = named("c1new-equals-1/12");
  const Rational one_twelfth(1, 12);
  for (std::uint64_t M = 1; M <= max_level; ++M) {
    const auto theorem = spectral::classify_cocompact(M, spectral::ClassifyMethod::Theorem);
    const auto oracle = spectral::classify_cocompact(M, spectral::ClassifyMethod::Oracle);
    expect_equal(equivalence, at_level(M), "verdict", oracle.verdict, theorem.verdict);
    expect_equal(equivalence, at_level(M), "c2 zero", oracle.c2_is_zero, theorem.c2_is_zero);
    expect_equal(equivalence, at_level(M), "L zero", oracle.L_is_zero, theorem.L_is_zero);
    if (M > 1) {
      expect_equal(zero_law, at_level(M), "L(M)=0 vs >=2 U-vanishing prime powers",
                   spectral::u_vanishing_factor_count(M) >= 2, spectral::L(M).is_zero());
    }
    const Rational u = spectral::U(M);
    expect_equal(corollary, at_level(M), "criterion vs U(M)!=0", !u.is_zero(), spectral::c2_nonzero_criterion(M));
    const bool is_twelfth = spectral::v(M) / Rational(12) == one_twelfth;
    expect_equal(remark, at_level(M), "c1new=1/12", M == 1 || M == 2 || M == 4, is_twelfth);
  }
  report.checks = {equivalence, zero_law, corollary, remark};
  return report;
}

// ---------------------------------------------------------------------------

SuiteReport run_dirichlet_series_suite(const VerifyOptions&) {
  SuiteReport report{"dirichlet-series", {}, {}};
  constexpr std::uint64_t kPrimeBound = 100'000;
  constexpr std::uint64_t kDirectTerms = 10'000;

  CheckResult euler = named("euler-product-vs-zeta-ratio"), direct = named("euler-product-vs-direct-sum"),
      local = named("single-local-factor");
  const double lv3 = spectral::Lv_partial(3.0, kPrimeBound);
  expect_close(euler, "s=3", "L_v vs zeta(2)/(zeta(6)zeta(3)), same truncation",
               spectral::zeta_ratio_partial(3.0, kPrimeBound), lv3, 1e-6);
  expect_close(direct, "s=3", "L_v vs sum_{n<=1e4} v(n)/n^3", spectral::Lv_direct_sum(3.0, kDirectTerms), lv3, 1e-4);
  expect_close(direct, "s=4", "L_v vs sum_{n<=1e4} v(n)/n^4", spectral::Lv_direct_sum(4.0, kDirectTerms),
               spectral::Lv_partial(4.0, kPrimeBound), 1e-8);
  const double expected_local = (1 - std::pow(2.0, -6)) * (1 - std::pow(2.0, -3)) / (1 - std::pow(2.0, -2));
  expect_close(local, "p=2,s=3", "local factor", expected_local, spectral::Lv_partial(3.0, 2), 1e-15);

  const double exact = boost::math::zeta(2.0) / (boost::math::zeta(6.0) * boost::math::zeta(3.0));
  std::ostringstream note;
  note.precision(3);
  note << "untruncated zeta(2)/(zeta(6)zeta(3)) differs from the primes<=1e5 product by " << std::abs(exact - lv3)
       << " (truncation of the Euler product)";
  report.notes.push_back(note.str());

  report.checks = {euler, direct, local};
  return report;
}

}  // namespace nw::verify
