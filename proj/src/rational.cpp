#include "rhombus/rational.hpp"

#include "rhombus/error.hpp"

#include <cctype>

namespace rhombus {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::not_squarefree: return "NotSquarefree";
    case Errc::root_count_not_one: return "RootCountNotOne";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::field_mismatch: return "FieldMismatch";
    case Errc::not_invertible: return "NotInvertible";
    case Errc::degenerate_slope: return "DegenerateSlope";
    case Errc::all_zero: return "AllZero";
    case Errc::singular_offset: return "SingularOffset";
    case Errc::patch_too_small: return "PatchTooSmall";
    case Errc::no_lift: return "NoLift";
    case Errc::non_unique: return "NonUnique";
    case Errc::not_codim_two: return "NotCodimTwo";
    case Errc::inconsistent: return "Inconsistent";
    case Errc::inconsistent_constraints: return "InconsistentConstraints";
    case Errc::rank_deficient: return "RankDeficient";
    case Errc::slopes_intersect: return "SlopesIntersect";
    case Errc::no_other_real_root: return "NoOtherRealRoot";
    case Errc::radius_mismatch: return "RadiusMismatch";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  if (s.empty()) throw Error(Errc::parse_error, "empty rational");
  if (s.front() == '+') s.erase(s.begin());

  auto dot = s.find('.');
  if (dot != std::string::npos) {
    if (s.find_first_of("/eE") != std::string::npos)
      throw Error(Errc::parse_error, "unsupported rational literal '" + std::string(text) + "'");
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    const auto frac = s.size() - dot - 1;
    if (digits.empty() || digits == "-") throw Error(Errc::parse_error, "bad decimal '" + s + "'");
    Integer num;
    if (num.set_str(digits, 10) != 0) throw Error(Errc::parse_error, "bad decimal '" + s + "'");
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  Rational q;
  if (q.set_str(s, 10) != 0) throw Error(Errc::parse_error, "bad rational '" + s + "'");
  if (q.get_den() == 0) throw Error(Errc::parse_error, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::vector<Integer> make_primitive(std::vector<Integer> v) {
  Integer g = 0;
  for (const auto& e : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
  if (g > 1)
    for (auto& e : v) mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), g.get_mpz_t());
  return v;
}

}  // namespace rhombus
