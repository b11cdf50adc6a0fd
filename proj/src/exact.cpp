#include "zeck/exact.hpp"

#include <mpfr.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace zeck {

namespace {

// 53-bit MPFR scratch value; set_q/set_z round once, to nearest.
class Float53 {
 public:
  Float53() { mpfr_init2(v_, 53); }
  ~Float53() { mpfr_clear(v_); }
  Float53(const Float53&) = delete;
  Float53& operator=(const Float53&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

}  // namespace

ExactRatio make_ratio(const ExactInt& num, const ExactInt& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  ExactRatio q(num, den);
  q.canonicalize();
  return q;
}

ExactRatio parse_ratio(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return ExactRatio(ExactInt(text));
    return make_ratio(ExactInt(text.substr(0, slash)), ExactInt(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
}

std::string to_string(const ExactRatio& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const ExactInt& z) { return z.get_str(); }

double to_double(const ExactRatio& q) {
  Float53 f;
  mpfr_set_q(f.get(), q.get_mpq_t(), MPFR_RNDN);
  return mpfr_get_d(f.get(), MPFR_RNDN);
}

double to_double(const ExactInt& z) {
  Float53 f;
  mpfr_set_z(f.get(), z.get_mpz_t(), MPFR_RNDN);
  return mpfr_get_d(f.get(), MPFR_RNDN);
}

double log2_of(const ExactInt& z) {
  if (z <= 0) throw std::domain_error("log2 of non-positive integer");
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return static_cast<double>(exp) + std::log2(mant);
}

double log_of(const ExactRatio& q) {
  if (q <= 0) throw std::domain_error("log of non-positive rational");
  return (log2_of(q.get_num()) - log2_of(q.get_den())) * std::numbers::ln2;
}

ExactInt pow_int(const ExactInt& base, unsigned long exponent) {
  ExactInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

ExactRatio pow_ratio(const ExactRatio& base, unsigned long exponent) {
  ExactRatio r(pow_int(base.get_num(), exponent), pow_int(base.get_den(), exponent));
  r.canonicalize();
  return r;
}

}  // namespace zeck
