#include "rhombus/polynomial.hpp"

#include "rhombus/error.hpp"

#include <algorithm>
#include <sstream>

namespace rhombus {

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

RationalPoly::RationalPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

RationalPoly RationalPoly::constant(const Rational& c) { return RationalPoly(std::vector<Rational>{c}); }

RationalPoly RationalPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1, Rational(0));
  v.back() = c;
  return RationalPoly(std::move(v));
}

void RationalPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational RationalPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double RationalPoly::eval(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

RationalPoly RationalPoly::derivative() const {
  if (degree() < 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return RationalPoly(std::move(d));
}

RationalPoly RationalPoly::monic() const {
  if (is_zero()) return {};
  Rational inv = 1 / leading();
  return inv * *this;
}

RationalPoly RationalPoly::primitive() const {
  if (is_zero()) return {};
  Integer l = 1;
  for (const auto& c : coeffs_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> ints;
  ints.reserve(coeffs_.size());
  for (const auto& c : coeffs_) ints.push_back(Integer(c * l));
  ints = make_primitive(std::move(ints));
  if (ints.back() < 0)
    for (auto& z : ints) z = -z;
  std::vector<Rational> out(ints.begin(), ints.end());
  return RationalPoly(std::move(out));
}

RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
  std::vector<Rational> r(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r[i] += b.coeffs_[i];
  return RationalPoly(std::move(r));
}

RationalPoly operator-(const RationalPoly& a) {
  std::vector<Rational> r = a.coeffs_;
  for (auto& c : r) c = -c;
  return RationalPoly(std::move(r));
}

RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) { return a + (-b); }

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RationalPoly(std::move(r));
}

RationalPoly operator*(const Rational& s, const RationalPoly& a) {
  std::vector<Rational> r = a.coeffs_;
  for (auto& c : r) c *= s;
  return RationalPoly(std::move(r));
}

std::string RationalPoly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << rhombus::to_string(mag);
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

DivMod divmod(const RationalPoly& a, const RationalPoly& b) {
  if (b.is_zero()) throw Error(Errc::division_by_zero, "polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {RationalPoly{}, a};
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db) + 1, Rational(0));
  const Rational lead_inv = 1 / b.leading();
  for (int i = a.degree(); i >= db; --i) {
    Rational c = rem[static_cast<std::size_t>(i)] * lead_inv;
    if (c == 0) continue;
    quo[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {RationalPoly(std::move(quo)), RationalPoly(std::move(rem))};
}

RationalPoly gcd(const RationalPoly& a, const RationalPoly& b) {
  RationalPoly x = a, y = b;
  while (!y.is_zero()) {
    RationalPoly r = divmod(x, y).remainder;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

ExtendedGcd extended_gcd(const RationalPoly& a, const RationalPoly& b) {
  RationalPoly r0 = a, r1 = b;
  RationalPoly s0 = RationalPoly::constant(1), s1;
  RationalPoly t0, t1 = RationalPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    RationalPoly s2 = s0 - q * s1;
    RationalPoly t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rational inv = 1 / r0.leading();
  return {inv * r0, inv * s0, inv * t0};
}

RationalPoly squarefree_part(const RationalPoly& p) {
  if (p.degree() < 1) return p.monic();
  RationalPoly g = gcd(p, p.derivative());
  return divmod(p, g).quotient.monic();
}

bool is_squarefree(const RationalPoly& p) {
  if (p.degree() < 1) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

namespace {

std::vector<Integer> divisors(Integer n) {
  n = abs(n);
  std::vector<Integer> out;
  if (n == 0) return out;
  // Coefficients here come from small minimal polynomials and subperiod
  // residuals; trial division is adequate.
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

}  // namespace

std::vector<Rational> rational_roots(const RationalPoly& p) {
  std::vector<Rational> roots;
  if (p.degree() < 1) return roots;
  RationalPoly q = p.primitive();
  // Strip the factor x^k first so the constant term is nonzero.
  std::size_t shift = 0;
  while (q.coeffs()[shift] == 0) ++shift;
  if (shift > 0) {
    roots.emplace_back(0);
    q = RationalPoly(std::vector<Rational>(q.coeffs().begin() + static_cast<long>(shift), q.coeffs().end()));
  }
  if (q.degree() >= 1) {
    const auto nums = divisors(Integer(q.coeffs().front()));
    const auto dens = divisors(Integer(q.leading()));
    for (const auto& a : nums)
      for (const auto& b : dens)
        for (int sgn : {1, -1}) {
          Rational r(sgn * a, b);
          r.canonicalize();
          if (q(r) == 0 && std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
        }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<RationalPoly> sturm_chain(const RationalPoly& p) {
  std::vector<RationalPoly> chain;
  if (p.is_zero()) return chain;
  chain.push_back(p);
  RationalPoly d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(d);
  while (true) {
    RationalPoly r = divmod(chain[chain.size() - 2], chain.back()).remainder;
    if (r.is_zero()) break;
    // Positive rescaling keeps sign variations intact and coefficients small.
    chain.push_back(r.leading() < 0 ? r.primitive() : -r.primitive());
  }
  return chain;
}

namespace {

int sign_of(const Rational& q) { return sgn(q); }

int variations_at(const std::vector<RationalPoly>& chain, const Rational& x) {
  int count = 0;
  int last = 0;
  for (const auto& p : chain) {
    int s = sign_of(p(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace

int sturm_count(const std::vector<RationalPoly>& chain, const Rational& lo, const Rational& hi) {
  if (chain.empty()) return 0;
  return variations_at(chain, lo) - variations_at(chain, hi);
}

int sturm_count(const RationalPoly& p, const Rational& lo, const Rational& hi) {
  return sturm_count(sturm_chain(p), lo, hi);
}

Rational root_bound(const RationalPoly& p) {
  if (p.degree() < 1) return 1;
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p.coeff(i) / p.leading())));
  return m + 1;
}

double RootInterval::midpoint() const { return Rational((lo + hi) / 2).get_d(); }

namespace {

// Picks a split point strictly inside (lo, hi) that is not a root of p.
Rational split_point(const RationalPoly& p, const Rational& lo, const Rational& hi) {
  // Midpoint first, then k/(2k+1) fractions; p has finitely many roots.
  for (long k = 1; k < 64; ++k) {
    Rational m = lo + (hi - lo) * Rational(k == 1 ? 1 : k, k == 1 ? 2 : 2 * k + 1);
    if (p(m) != 0) return m;
  }
  throw Error(Errc::invalid_argument, "could not find a non-root split point");
}

void isolate(const std::vector<RationalPoly>& chain, const Rational& lo, const Rational& hi, int count,
             std::vector<RootInterval>& out) {
  if (count == 0) return;
  if (count == 1) {
    out.push_back({lo, hi});
    return;
  }
  Rational mid = split_point(chain.front(), lo, hi);
  int left = sturm_count(chain, lo, mid);
  isolate(chain, lo, mid, left, out);
  isolate(chain, mid, hi, count - left, out);
}

}  // namespace

std::vector<RootInterval> real_roots(const RationalPoly& p,
                                     const std::optional<std::pair<Rational, Rational>>& range) {
  if (p.is_zero()) throw Error(Errc::invalid_argument, "real_roots of the zero polynomial");
  std::vector<RootInterval> out;
  if (p.degree() < 1) return out;
  RationalPoly q = squarefree_part(p);
  auto chain = sturm_chain(q);
  Rational lo, hi;
  if (range) {
    lo = range->first;
    hi = range->second;
    if (!(lo < hi)) throw Error(Errc::invalid_argument, "empty root range");
    if (q(lo) == 0 || q(hi) == 0) {
      // Open range with a root on its boundary: isolate globally, then sort
      // each interval to one side of the endpoints.
      for (RootInterval iv : real_roots(q)) {
        while (true) {
          if (iv.hi <= lo || iv.lo >= hi) break;
          if (iv.lo >= lo && iv.hi <= hi) {
            out.push_back(iv);
            break;
          }
          if ((iv.lo < lo && lo < iv.hi && q(lo) == 0) || (iv.lo < hi && hi < iv.hi && q(hi) == 0)) break;
          iv = refine_root(q, iv, (iv.hi - iv.lo) / 2);
        }
      }
      return out;
    }
  } else {
    hi = root_bound(q);
    lo = -hi;
  }
  int total = sturm_count(chain, lo, hi);
  isolate(chain, lo, hi, total, out);
  return out;
}

RootInterval refine_root(const RationalPoly& squarefree, RootInterval iv, const Rational& width) {
  int s_lo = sgn(squarefree(iv.lo));
  while (iv.hi - iv.lo > width) {
    Rational mid = (iv.lo + iv.hi) / 2;
    int s = sgn(squarefree(mid));
    if (s == 0) {
      Rational w = width / 4;
      return {mid - w, mid + w};
    }
    if (s == s_lo) {
      iv.lo = mid;
    } else {
      iv.hi = mid;
    }
  }
  return iv;
}

}  // namespace rhombus
