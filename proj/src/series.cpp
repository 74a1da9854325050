#include "chev/series.hpp"

#include <sstream>

namespace chev {

QPoly::QPoly(long c) {
  if (c != 0) c_.push_back(BigInt(c));
}

QPoly::QPoly(const BigInt& c) {
  if (c != 0) c_.push_back(c);
}

QPoly::QPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(int sign, unsigned k) {
  QPoly p;
  if (sign == 0) return p;
  p.c_.assign(k + 1, BigInt(0));
  p.c_[k] = sign;
  return p;
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt QPoly::eval(const BigInt& q) const {
  BigInt r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * q + *it;
  return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const QPoly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<BigInt> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

QPoly QPoly::exact_div(long d) const {
  QPoly r = *this;
  for (auto& x : r.c_) x = chev::exact_div(x, BigInt(d), "polynomial coefficient");
  return r;
}

std::string QPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& a = c_[k];
    if (a == 0) continue;
    BigInt mag = abs(a);
    if (first) {
      if (a < 0) os << '-';
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) os << mag.get_str();
    if (k >= 1) os << 'q';
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

namespace detail {

void validate_atom(const FactorAtom& a) {
  if (a.sign != 1 && a.sign != -1) throw InvalidArgument("factor sign must be +1 or -1");
  if (a.t_slope < 0) throw InvalidArgument("factor t-exponent must be non-decreasing in i");
  if (a.t_slope == 0 && a.i_max <= 0) {
    throw InvalidArgument("constant t-exponent needs a finite index range");
  }
  if (a.t_slope + a.t_offset < 1) {
    // (1 + c t^0) would not be a unit with constant term 1
    throw InvalidArgument("factor is not invertible: t-exponent below 1");
  }
  if (a.q_slope < 0) throw InvalidArgument("factor q-exponent must be non-decreasing in i");
}

void check_series_cap(int order, int cap, const char* what) {
  if (order < 0) throw InvalidArgument(std::string(what) + ": negative truncation order");
  if (order > cap) {
    throw CapExceeded(std::string(what) + ": truncation order " + std::to_string(order) +
                      " exceeds cap " + std::to_string(cap));
  }
}

}  // namespace detail

IntSeries evaluate(const PolySeries& s, const BigInt& q) {
  IntSeries r(s.order());
  for (int k = 0; k <= s.order(); ++k) r[k] = s[k].eval(q);
  return r;
}

IntSeries pentagonal_series(int N) {
  IntSeries s(N);
  s[0] = 1;
  for (long n = 1;; ++n) {
    const long a = n * (3 * n - 1) / 2, b = n * (3 * n + 1) / 2;
    if (a > N) break;
    const int sign = (n % 2 == 0) ? 1 : -1;
    s[static_cast<int>(a)] += sign;
    if (b <= N) s[static_cast<int>(b)] += sign;
  }
  return s;
}

IntSeries gauss_triangular_series(int N) {
  IntSeries s(N);
  for (long n = 0; n * (n + 1) / 2 <= N; ++n) s[static_cast<int>(n * (n + 1) / 2)] += 1;
  return s;
}

IntSeries jacobi_square_series(int N) {
  IntSeries s(N);
  s[0] = 1;
  for (long n = 1; n * n <= N; ++n) s[static_cast<int>(n * n)] += 2;
  return s;
}

IntSeries even_triangular_series(int N) {
  IntSeries s(N);
  for (long j = 0; j * (j + 1) <= N; ++j) s[static_cast<int>(j * (j + 1))] += 1;
  return s;
}

}  // namespace chev
