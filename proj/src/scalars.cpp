#include "ctld/scalars.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>

namespace ctld {

namespace detail {

struct FieldData {
  FieldSpec spec;
  int p = 0;  // characteristic
  int deg = 1;
  std::vector<mpq_class> mod;  // monic, size deg + 1
  std::uint64_t order = 0;
};

namespace {

using Poly = std::vector<mpq_class>;

bool is_prime(long v) {
  if (v < 2) return false;
  for (long d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

void norm(mpq_class& c, int p) {
  if (p == 0) return;
  mpz_class num = c.get_num(), den = c.get_den(), pp = p;
  if (den != 1) {
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pp.get_mpz_t()) == 0)
      throw FieldError("denominator divisible by the characteristic");
    num *= inv;
  }
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), pp.get_mpz_t());
  c = mpq_class(r);
}

mpq_class base_inv(const mpq_class& c, int p) {
  if (p == 0) return 1 / c;
  mpz_class inv, num = c.get_num(), pp = p;
  mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), pp.get_mpz_t());
  return mpq_class(inv);
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

void normalize(Poly& a, int p) {
  for (auto& c : a) norm(c, p);
  trim(a);
}

Poly mul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  normalize(r, p);
  return r;
}

Poly sub(Poly a, const Poly& b, int p) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  normalize(a, p);
  return a;
}

// Quotient and remainder for division by a nonzero polynomial.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b, int p) {
  normalize(a, p);
  Poly q;
  if (a.size() < b.size()) return {q, a};
  q.assign(a.size() - b.size() + 1, 0);
  mpq_class lead_inv = base_inv(b.back(), p);
  for (std::size_t i = a.size(); i-- >= b.size();) {
    if (a[i] == 0) continue;
    mpq_class f = a[i] * lead_inv;
    norm(f, p);
    q[i - (b.size() - 1)] = f;
    for (std::size_t j = 0; j < b.size(); ++j) {
      a[i - (b.size() - 1) + j] -= f * b[j];
      norm(a[i - (b.size() - 1) + j], p);
    }
  }
  normalize(q, p);
  normalize(a, p);
  return {q, a};
}

Poly reduce(Poly a, const FieldData& f) {
  const std::size_t d = static_cast<std::size_t>(f.deg);
  for (std::size_t i = a.size(); i-- > d;) {
    if (a[i] == 0) continue;
    mpq_class c = a[i];
    for (std::size_t j = 0; j <= d; ++j) a[i - d + j] -= c * f.mod[j];
  }
  if (a.size() > d) a.resize(d);
  normalize(a, f.p);
  return a;
}

Poly cyclotomic(int m) {
  Poly num(static_cast<std::size_t>(m) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(m)] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    num = divmod(num, cyclotomic(d), 0).first;
  }
  return num;
}

// Monic polynomial of degree r whose non-leading coefficients are the base-p
// digits of idx, the coefficient of x^{r-1} being the most significant.
Poly monic_from_index(std::uint64_t idx, int p, int r) {
  Poly a(static_cast<std::size_t>(r) + 1, 0);
  a[static_cast<std::size_t>(r)] = 1;
  for (int i = 0; i < r; ++i) {
    a[static_cast<std::size_t>(i)] = static_cast<long>(idx % static_cast<std::uint64_t>(p));
    idx /= static_cast<std::uint64_t>(p);
  }
  return a;
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

bool irreducible(const Poly& f, int p, int r) {
  for (int d = 1; 2 * d <= r; ++d) {
    std::uint64_t count = ipow(static_cast<std::uint64_t>(p), d);
    for (std::uint64_t i = 0; i < count; ++i) {
      if (divmod(f, monic_from_index(i, p, d), p).second.empty()) return false;
    }
  }
  return true;
}

Poly lowest_irreducible(int p, int r) {
  if (r == 1) return Poly{0, 1};
  std::uint64_t count = ipow(static_cast<std::uint64_t>(p), r);
  // Enumerate from lowest to highest with x^{r-1} most significant.
  for (std::uint64_t i = 0; i < count; ++i) {
    Poly f = monic_from_index(i, p, r);
    if (f[0] == 0) continue;
    if (irreducible(f, p, r)) return f;
  }
  throw FieldError("no irreducible polynomial found");
}

}  // namespace
}  // namespace detail

using detail::FieldData;
using detail::Poly;

FieldSpec parse_field_spec(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ') s.push_back(ch);
  auto parse_int = [&](std::string_view v) {
    int out = 0;
    auto res = std::from_chars(v.data(), v.data() + v.size(), out);
    if (res.ec != std::errc() || res.ptr != v.data() + v.size() || out <= 0)
      throw FieldError("bad field spec: " + std::string(text));
    return out;
  };
  if (s == "Q") return CyclotomicRationals{1};
  const std::string qp = "Q(zeta_", gp = "GF(";
  if (s.rfind(qp, 0) == 0 && s.back() == ')') {
    return CyclotomicRationals{parse_int(std::string_view(s).substr(qp.size(), s.size() - qp.size() - 1))};
  }
  if (s.rfind(gp, 0) == 0 && s.back() == ')') {
    std::string_view body = std::string_view(s).substr(gp.size(), s.size() - gp.size() - 1);
    auto caret = body.find('^');
    PrimePowerField g{parse_int(body.substr(0, caret)), 1};
    if (caret != std::string_view::npos) g.r = parse_int(body.substr(caret + 1));
    if (!detail::is_prime(g.p)) throw FieldError("characteristic " + std::to_string(g.p) + " is not prime");
    return g;
  }
  throw FieldError("bad field spec: " + std::string(text));
}

std::string format_field_spec(const FieldSpec& spec) {
  if (auto* q = std::get_if<CyclotomicRationals>(&spec)) return "Q(zeta_" + std::to_string(q->m) + ")";
  auto& g = std::get<PrimePowerField>(spec);
  return "GF(" + std::to_string(g.p) + "^" + std::to_string(g.r) + ")";
}

Field::Field(const FieldSpec& spec) {
  auto d = std::make_shared<FieldData>();
  d->spec = spec;
  if (auto* q = std::get_if<CyclotomicRationals>(&spec)) {
    if (q->m < 1) throw FieldError("cyclotomic order must be positive");
    d->p = 0;
    d->mod = detail::cyclotomic(q->m);
    d->deg = static_cast<int>(d->mod.size()) - 1;
  } else {
    auto& g = std::get<PrimePowerField>(spec);
    if (!detail::is_prime(g.p)) throw FieldError("characteristic " + std::to_string(g.p) + " is not prime");
    if (g.r < 1) throw FieldError("extension degree must be positive");
    d->p = g.p;
    d->deg = g.r;
    d->mod = detail::lowest_irreducible(g.p, g.r);
    d->order = detail::ipow(static_cast<std::uint64_t>(g.p), g.r);
  }
  data_ = std::move(d);
}

Field make_field(const FieldSpec& spec) { return Field(spec); }

const FieldSpec& Field::spec() const { return data_->spec; }
int Field::characteristic() const { return data_->p; }
int Field::degree() const { return data_->deg; }
const std::vector<mpq_class>& Field::modulus() const { return data_->mod; }
std::uint64_t Field::order() const { return data_->order; }

Scalar Field::zero() const { return Scalar(data_, {}); }
Scalar Field::one() const { return from_int(1); }
Scalar Field::from_int(long value) const { return from_rational(mpq_class(value)); }
Scalar Field::from_rational(const mpq_class& value) const { return from_coefficients({value}); }
Scalar Field::from_coefficients(std::vector<mpq_class> coeffs) const {
  return Scalar(data_, detail::reduce(std::move(coeffs), *data_));
}
Scalar Field::generator() const { return from_coefficients({0, 1}); }

Scalar Field::element(std::uint64_t index) const {
  if (data_->p == 0) throw FieldError("element enumeration needs a finite field");
  Poly c;
  for (int i = 0; i < data_->deg; ++i) {
    c.push_back(mpq_class(static_cast<long>(index % static_cast<std::uint64_t>(data_->p))));
    index /= static_cast<std::uint64_t>(data_->p);
  }
  return from_coefficients(std::move(c));
}

Scalar Field::parse(std::string_view literal) const {
  std::string s;
  for (char ch : literal)
    if (ch != ' ') s.push_back(ch);
  if (s.empty()) throw FieldError("empty scalar literal");
  auto rational = [&](const std::string& t) {
    mpq_class q;
    if (q.set_str(t, 10) != 0) throw FieldError("bad scalar literal: " + t);
    q.canonicalize();
    if (q.get_den() == 0) throw FieldError("zero denominator in " + t);
    return q;
  };
  if (s.front() == '[') {
    if (s.back() != ']') throw FieldError("bad scalar literal: " + s);
    Poly c;
    std::stringstream ss(s.substr(1, s.size() - 2));
    std::string item;
    while (std::getline(ss, item, ';'))
      if (!item.empty()) c.push_back(rational(item));
    return from_coefficients(std::move(c));
  }
  if (s.front() == '+') s.erase(0, 1);
  return from_rational(rational(s));
}

bool operator==(const Field& a, const Field& b) {
  return a.data_ == b.data_ || a.data_->spec == b.data_->spec;
}

Scalar::Scalar(std::shared_ptr<const FieldData> f, std::vector<mpq_class> c)
    : f_(std::move(f)), c_(std::move(c)) {}

Field Scalar::field() const { return Field(f_); }

int Scalar::characteristic() const { return f_->p; }

void Scalar::check_same(const Scalar& o) const {
  if (f_ != o.f_ && !(f_->spec == o.f_->spec)) throw FieldError("scalars from different fields");
}

bool Scalar::is_one() const { return c_.size() == 1 && c_[0] == 1; }

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  detail::normalize(c_, f_->p);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  c_ = detail::sub(std::move(c_), o.c_, f_->p);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  if (c_.size() == 1 && o.c_.size() == 1) {
    c_[0] *= o.c_[0];
    detail::normalize(c_, f_->p);
    return *this;
  }
  c_ = detail::reduce(detail::mul(c_, o.c_, f_->p), *f_);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::operator-() const {
  Scalar r(f_, c_);
  for (auto& c : r.c_) c = -c;
  detail::normalize(r.c_, f_->p);
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  const int p = f_->p;
  if (c_.size() == 1) return Scalar(f_, {detail::base_inv(c_[0], p)});
  // Extended Euclid: track s with s*a = r (mod modulus).
  Poly r0 = f_->mod, r1 = c_;
  Poly s0, s1{1};
  while (!r1.empty()) {
    auto [q, r2] = detail::divmod(r0, r1, p);
    Poly s2 = detail::sub(s0, detail::mul(q, s1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since the modulus is irreducible.
  if (r0.size() != 1) throw std::domain_error("element not invertible");
  mpq_class k = detail::base_inv(r0[0], p);
  for (auto& c : s0) c *= k;
  return Scalar(f_, detail::reduce(std::move(s0), *f_));
}

Scalar Scalar::pow(std::uint64_t e) const {
  Scalar base = *this, acc(f_, {1});
  while (e > 0) {
    if (e & 1) acc *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return acc;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.f_ != b.f_ && !(a.f_->spec == b.f_->spec)) return false;
  return a.c_ == b.c_;
}

std::vector<std::string> Scalar::to_coefficient_strings() const {
  std::vector<std::string> out;
  for (auto& c : c_) out.push_back(c.get_str());
  return out;
}

std::string Scalar::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    std::string coef = c_[i].get_str();
    std::string term;
    if (i == 0) {
      term = coef;
    } else {
      std::string mono = i == 1 ? "z" : "z^" + std::to_string(i);
      if (coef == "1")
        term = mono;
      else if (coef == "-1")
        term = "-" + mono;
      else
        term = coef + "*" + mono;
    }
    if (!out.empty() && term.front() != '-') out += "+";
    out += term;
  }
  return out;
}

namespace {

// Multiplicative order of a, searching up to bound; 0 if not found.
int element_order(const Scalar& a, int bound) {
  if (a.is_zero()) return 0;
  Scalar x = a;
  for (int k = 1; k <= bound; ++k) {
    if (x.is_one()) return k;
    x *= a;
  }
  return 0;
}

int euler_phi(int m) {
  int out = m, v = m;
  for (int d = 2; d * d <= v; ++d) {
    if (v % d) continue;
    while (v % d == 0) v /= d;
    out -= out / d;
  }
  if (v > 1) out -= out / v;
  return out;
}

}  // namespace

RootList roots_of_unity(const Field& field, int m) {
  if (m < 1) throw FieldError("m must be positive");
  const int p = field.characteristic();
  int pt = 1, s = m;
  if (p > 0)
    while (s % p == 0) {
      s /= p;
      pt *= p;
    }
  std::optional<Scalar> eta;
  if (p == 0) {
    const int M = std::get<CyclotomicRationals>(field.spec()).m;
    // Roots of unity in Q(zeta_M) are the +-zeta^j.
    Scalar z = field.generator();
    Scalar zj = field.one();
    for (int sign = 0; sign < 2 && !eta; ++sign) {
      zj = field.one();
      for (int j = 0; j < M && !eta; ++j) {
        Scalar cand = sign ? -zj : zj;
        if (element_order(cand, 2 * M) == s) eta = cand;
        zj *= z;
      }
    }
    if (!eta)
      throw SplittingError(format_field_spec(field.spec()) + " does not split x^" + std::to_string(m) +
                               "-1; need degree " + std::to_string(euler_phi(m)) + " over Q",
                           euler_phi(m));
  } else {
    const std::uint64_t q = field.order();
    if ((q - 1) % static_cast<std::uint64_t>(s) != 0) {
      int d = 1;
      long acc = p % s;
      while (acc != 1 % s) {
        acc = (acc * p) % s;
        ++d;
      }
      throw SplittingError(format_field_spec(field.spec()) + " does not split x^" + std::to_string(m) +
                               "-1; need GF(" + std::to_string(p) + "^" + std::to_string(d) + ")",
                           d);
    }
    for (std::uint64_t i = 1; i < q && !eta; ++i) {
      Scalar cand = field.element(i);
      if (element_order(cand, s) == s) eta = cand;
    }
  }
  std::vector<Scalar> xi;
  Scalar power = *eta;
  for (int a = 1; a <= s; ++a) {
    for (int b = 1; b <= pt; ++b) xi.push_back(power);
    power *= *eta;
  }
  return RootList{m, pt, s, *eta, std::move(xi)};
}

bool ParameterSet::all_zero() const {
  return std::all_of(delta_.begin(), delta_.end(), [](const Scalar& d) { return d.is_zero(); });
}

Scalar ParameterSet::monomial(const std::vector<int>& exps) const {
  Scalar out = field_.one();
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (exps[i] > 0) out *= delta_.at(i).pow(static_cast<std::uint64_t>(exps[i]));
  return out;
}

ParameterSet validate_parameters(const Field& field, std::vector<Scalar> delta) {
  if (delta.empty()) throw ParameterError("empty parameter list", 0);
  for (std::size_t i = 0; i < delta.size(); ++i)
    if (!(delta[i].field() == field)) throw ParameterError("parameter from another field", static_cast<int>(i));
  for (std::size_t i = 1; i < delta.size(); ++i) {
    if (!(delta[i] * delta[0] == delta[i]))
      throw ParameterError("delta_" + std::to_string(i) + " * delta_0 != delta_" + std::to_string(i),
                           static_cast<int>(i));
  }
  return ParameterSet(field, std::move(delta));
}

ParameterSet parse_parameters(const Field& field, int m, std::string_view text) {
  std::vector<Scalar> out;
  std::string item;
  std::stringstream ss{std::string(text)};
  while (std::getline(ss, item, ',')) out.push_back(field.parse(item));
  if (static_cast<int>(out.size()) != m)
    throw ParameterError("expected " + std::to_string(m) + " parameters, got " + std::to_string(out.size()),
                         static_cast<int>(out.size()));
  return validate_parameters(field, std::move(out));
}

ExactMatrix::ExactMatrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

ExactMatrix ExactMatrix::identity(const Field& field, std::size_t n) {
  ExactMatrix out(field, n, n);
  for (std::size_t i = 0; i < n; ++i) out.at(i, i) = field.one();
  return out;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix out(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
  return out;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  ExactMatrix out(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (!o.at(k, j).is_zero()) out.at(i, j) += at(i, k) * o.at(k, j);
    }
  return out;
}

bool ExactMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(ExactMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  std::vector<std::size_t> nz;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && a.at(piv, col).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(piv, c), a.at(row, c));
    Scalar inv = a.at(row, col).inverse();
    nz.clear();
    for (std::size_t c = col; c < a.cols(); ++c)
      if (!a.at(row, c).is_zero()) {
        a.at(row, c) *= inv;
        nz.push_back(c);
      }
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a.at(r, col).is_zero()) continue;
      Scalar f = a.at(r, col);
      for (std::size_t c : nz) a.at(r, c) -= f * a.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const ExactMatrix& m) {
  ExactMatrix a = m;
  return rref(a).size();
}

ExactMatrix inverse(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  ExactMatrix aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = m.field().one();
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) throw std::domain_error("singular matrix");
  ExactMatrix out(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out.at(r, c) = aug.at(r, n + c);
  return out;
}

std::vector<std::vector<Scalar>> kernel(const ExactMatrix& m) {
  ExactMatrix a = m;
  auto piv = rref(a);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> out;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols(), m.field().zero());
    v[free] = m.field().one();
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -a.at(i, free);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace ctld
