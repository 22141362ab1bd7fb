#include "rbp/rational.hpp"

#include <stdexcept>

namespace rbp {

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  mpq_t q;
  mpq_init(q);
  if (mpq_set_str(q, s.c_str(), 10) != 0) {
    mpq_clear(q);
    throw std::invalid_argument("malformed rational literal: " + s);
  }
  if (mpz_sgn(mpq_denref(q)) == 0) {
    mpq_clear(q);
    throw std::invalid_argument("zero denominator: " + s);
  }
  mpq_canonicalize(q);
  Rat r(q);
  mpq_clear(q);
  return r;
}

std::string rat_to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

double rat_to_double(const Rat& r) { return r.get_d(); }

}  // namespace rbp
