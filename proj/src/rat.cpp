#include "blcob/rat.hpp"

namespace blcob {

std::string rat_str(const Rat& x) {
  if (is_integer(x)) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string int_str(const Int& x) { return x.get_str(); }

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  auto check_int = [](const std::string& t) {
    if (t.empty()) return false;
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!check_int(s)) throw std::invalid_argument("bad rational literal: " + s);
    return Rat(Int(s));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!check_int(num) || !check_int(den))
    throw std::invalid_argument("bad rational literal: " + s);
  Int d(den);
  if (sgn(d) == 0) throw std::invalid_argument("zero denominator: " + s);
  Rat r(Int(num), d);
  r.canonicalize();
  return r;
}

Int isqrt(const Int& x) {
  if (sgn(x) < 0) throw std::domain_error("isqrt of negative");
  Int r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

bool is_perfect_square(const Int& x) {
  if (sgn(x) < 0) return false;
  return mpz_perfect_square_p(x.get_mpz_t()) != 0;
}

bool is_rational_square(const Rat& x) {
  if (sgn(x) < 0) return false;
  return is_perfect_square(x.get_num()) && is_perfect_square(x.get_den());
}

Rat rational_sqrt(const Rat& x) {
  if (!is_rational_square(x)) throw std::domain_error("not a rational square");
  return rat(isqrt(x.get_num()), isqrt(x.get_den()));
}

}  // namespace blcob
