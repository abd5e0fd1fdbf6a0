#include "vexillar/rational.hpp"

#include <stdexcept>

namespace vexillar {

std::optional<Rat> parse_rational(const std::string& s) {
  if (s.empty()) return std::nullopt;
  try {
    Rat r(s);
    if (r.get_den() == 0) return std::nullopt;
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

std::string rational_to_string(const Rat& r) {
  Rat c = r;
  c.canonicalize();  // mpq_class constructors do not reduce
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Int factorial(unsigned long k) {
  Int f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return f;
}

Int binomial(unsigned long n, unsigned long k) {
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

std::size_t hash_rational(const Rat& r) {
  Rat c = r;
  c.canonicalize();  // mpq_class constructors do not reduce
  std::size_t h = 1469598103934665603ULL;
  auto mix = [&h](const mpz_class& z) {
    const mpz_srcptr p = z.get_mpz_t();
    const int n = p->_mp_size;
    hash_combine(h, static_cast<std::size_t>(n));
    for (int i = 0; i < (n < 0 ? -n : n); ++i)
      hash_combine(h, static_cast<std::size_t>(p->_mp_d[i]));
  };
  mix(c.get_num());
  mix(c.get_den());
  return h;
}

}  // namespace vexillar
