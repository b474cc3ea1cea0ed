#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ctld {

class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when x^m - 1 does not split; carries the smallest extension degree
// over the prime field (or over Q) that would make it split.
class SplittingError : public FieldError {
 public:
  SplittingError(const std::string& what, int required_degree)
      : FieldError(what), required_degree_(required_degree) {}
  int required_degree() const { return required_degree_; }

 private:
  int required_degree_;
};

class ParameterError : public std::invalid_argument {
 public:
  ParameterError(const std::string& what, int index)
      : std::invalid_argument(what), index_(index) {}
  int index() const { return index_; }

 private:
  int index_;
};

struct CyclotomicRationals {
  int m = 1;
  bool operator==(const CyclotomicRationals&) const = default;
};

struct PrimePowerField {
  int p = 2;
  int r = 1;
  bool operator==(const PrimePowerField&) const = default;
};

using FieldSpec = std::variant<CyclotomicRationals, PrimePowerField>;

// Accepts "Q", "Q(zeta_M)", "GF(P)" and "GF(P^R)".
FieldSpec parse_field_spec(std::string_view text);
std::string format_field_spec(const FieldSpec& spec);

namespace detail {
struct FieldData;
}

class Scalar;

class Field {
 public:
  explicit Field(const FieldSpec& spec);

  const FieldSpec& spec() const;
  int characteristic() const;
  int degree() const;
  // Monic defining polynomial, coefficients from degree 0 upwards.
  const std::vector<mpq_class>& modulus() const;
  std::uint64_t order() const;  // number of elements; 0 in characteristic 0

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long value) const;
  Scalar from_rational(const mpq_class& value) const;
  Scalar from_coefficients(std::vector<mpq_class> coeffs) const;
  Scalar generator() const;  // class of x
  // Literals: "a", "a/b", or "[c0;c1;...]" as a residue polynomial.
  Scalar parse(std::string_view literal) const;

  // Elements of a finite field in encoding order (the i-th element has the
  // base-p digits of i as coefficients).
  Scalar element(std::uint64_t index) const;

  friend bool operator==(const Field& a, const Field& b);

 private:
  friend class Scalar;
  explicit Field(std::shared_ptr<const detail::FieldData> d) : data_(std::move(d)) {}
  std::shared_ptr<const detail::FieldData> data_;
};

Field make_field(const FieldSpec& spec);

class Scalar {
 public:
  const std::vector<mpq_class>& coefficients() const { return c_; }
  Field field() const;
  int characteristic() const;

  bool is_zero() const { return c_.empty(); }
  bool is_one() const;

  Scalar inverse() const;
  Scalar pow(std::uint64_t e) const;
  Scalar operator-() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  // Human readable, e.g. "3/2" or "-1+2*z" (z is the class of x).
  std::string to_string() const;
  // Coefficient strings, degree 0 upwards; empty for zero.
  std::vector<std::string> to_coefficient_strings() const;

 private:
  friend class Field;
  Scalar(std::shared_ptr<const detail::FieldData> f, std::vector<mpq_class> c);
  void check_same(const Scalar& o) const;

  std::shared_ptr<const detail::FieldData> f_;
  std::vector<mpq_class> c_;
};

struct RootList {
  int m = 1;
  int p_power = 1;  // p^t, the part of m divisible by the characteristic
  int s = 1;        // m / p^t
  Scalar eta;       // the chosen primitive s-th root
  std::vector<Scalar> xi;  // xi[l-1] is the l-th root

  const Scalar& operator[](int l) const { return xi.at(static_cast<std::size_t>(l - 1)); }
};

RootList roots_of_unity(const Field& field, int m);

class ParameterSet {
 public:
  const Field& field() const { return field_; }
  int m() const { return static_cast<int>(delta_.size()); }
  const Scalar& delta(int i) const { return delta_.at(static_cast<std::size_t>(i)); }
  const std::vector<Scalar>& deltas() const { return delta_; }
  bool all_zero() const;
  // prod_i delta_i^{exps[i]}
  Scalar monomial(const std::vector<int>& exps) const;

 private:
  friend ParameterSet validate_parameters(const Field&, std::vector<Scalar>);
  ParameterSet(Field f, std::vector<Scalar> d) : field_(std::move(f)), delta_(std::move(d)) {}
  Field field_;
  std::vector<Scalar> delta_;
};

ParameterSet validate_parameters(const Field& field, std::vector<Scalar> delta);
// Comma separated literals, e.g. "1,0" or "[0;1],1".
ParameterSet parse_parameters(const Field& field, int m, std::string_view text);

class ExactMatrix {
 public:
  ExactMatrix(const Field& field, std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  ExactMatrix transpose() const;
  ExactMatrix operator*(const ExactMatrix& o) const;
  bool is_zero() const;
  bool operator==(const ExactMatrix& o) const;

  static ExactMatrix identity(const Field& field, std::size_t n);

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> data_;
};

std::size_t rank(const ExactMatrix& m);
// Inverse of a square matrix; throws std::domain_error if singular.
ExactMatrix inverse(const ExactMatrix& m);
// Basis of the right kernel {x : M x = 0}, one column vector per entry.
std::vector<std::vector<Scalar>> kernel(const ExactMatrix& m);

}  // namespace ctld
