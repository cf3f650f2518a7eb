#ifndef LRG_FIELD_HPP
#define LRG_FIELD_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace lrg {

/// Errors raised by the library. `code` mirrors the CLI exit codes.
class Error : public std::runtime_error {
public:
  Error(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
  int code() const { return code_; }

private:
  int code_;
};

inline Error usage_error(const std::string& what) { return Error(2, what); }
inline Error table_error(const std::string& what) { return Error(4, what); }

enum class FieldKind { Prime, Rational };

/// Description of the active coefficient field: F_p for a prime p, or Q.
struct Field {
  FieldKind kind = FieldKind::Rational;
  std::uint64_t p = 0;

  static Field prime(std::uint64_t p);
  static Field rationals() { return Field{FieldKind::Rational, 0}; }
  /// Parses `fp:<prime>` or `q`.
  static Field parse(const std::string& spec);

  std::string spec() const;
  bool operator==(const Field&) const = default;
};

/// An element of the active field. Prime-field residues live in [0, p-1];
/// rationals are kept canonical (lowest terms, positive denominator). The
/// rational part is allocated lazily so prime-field arithmetic stays
/// allocation free.
class Scalar {
public:
  Scalar() = default;
  Scalar(const Scalar& o) : fp(o.fp), q_(o.q_ ? new mpq_class(*o.q_) : nullptr) {}
  Scalar(Scalar&&) noexcept = default;
  Scalar& operator=(const Scalar& o) {
    fp = o.fp;
    q_.reset(o.q_ ? new mpq_class(*o.q_) : nullptr);
    return *this;
  }
  Scalar& operator=(Scalar&&) noexcept = default;

  std::uint64_t fp = 0;

  const mpq_class& rat() const {
    static const mpq_class zero;
    return q_ ? *q_ : zero;
  }
  mpq_class& mutable_rat() {
    if (!q_) q_.reset(new mpq_class);
    return *q_;
  }

  bool operator==(const Scalar& o) const { return fp == o.fp && rat() == o.rat(); }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

private:
  std::unique_ptr<mpq_class> q_;
};

struct OpCounter {
  std::uint64_t additions = 0;
  std::uint64_t multiplications = 0;
  std::uint64_t divisions = 0;

  std::uint64_t basic_ops() const { return additions + multiplications + divisions; }
  void reset() { *this = OpCounter{}; }
  OpCounter& operator+=(const OpCounter& o) {
    additions += o.additions;
    multiplications += o.multiplications;
    divisions += o.divisions;
    return *this;
  }
};

/// Field arithmetic for one algorithm run. Every multiplication, division and
/// addition/subtraction performed through this context is counted; comparisons
/// and copies are free. Each run owns its context, so counters of concurrent
/// runs never interfere.
class FieldCtx {
public:
  explicit FieldCtx(Field f) : field_(f) {}

  const Field& field() const { return field_; }
  OpCounter& counter() { return counter_; }
  const OpCounter& counter() const { return counter_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long v) const;

  bool is_zero(const Scalar& a) const;
  bool is_one(const Scalar& a) const;

  Scalar add(const Scalar& a, const Scalar& b);
  Scalar sub(const Scalar& a, const Scalar& b);
  Scalar mul(const Scalar& a, const Scalar& b);
  Scalar div(const Scalar& a, const Scalar& b);
  Scalar neg(const Scalar& a);
  Scalar inv(const Scalar& a);

  /// Parses a decimal integer or `num/den` literal.
  Scalar parse(const std::string& text) const;
  std::string to_string(const Scalar& a) const;

private:
  Field field_;
  OpCounter counter_;
};

bool is_prime(std::uint64_t n);

}  // namespace lrg

#endif
