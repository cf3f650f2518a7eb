#include "lrg/field.hpp"

namespace lrg {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p)) throw usage_error("field modulus " + std::to_string(p) + " is not prime");
  if (p >= (1ull << 31)) throw usage_error("prime moduli must be < 2^31");
  return Field{FieldKind::Prime, p};
}

Field Field::parse(const std::string& spec) {
  if (spec == "q" || spec == "Q") return rationals();
  if (spec.rfind("fp:", 0) == 0) {
    std::uint64_t p = 0;
    try {
      p = std::stoull(spec.substr(3));
    } catch (const std::exception&) {
      throw usage_error("bad field spec '" + spec + "'");
    }
    return prime(p);
  }
  throw usage_error("bad field spec '" + spec + "' (expected fp:<prime> or q)");
}

std::string Field::spec() const {
  return kind == FieldKind::Prime ? "fp:" + std::to_string(p) : "q";
}

Scalar FieldCtx::zero() const { return Scalar{}; }

Scalar FieldCtx::one() const { return from_int(1); }

Scalar FieldCtx::from_int(long v) const {
  Scalar s;
  if (field_.kind == FieldKind::Prime) {
    long m = v % static_cast<long>(field_.p);
    if (m < 0) m += static_cast<long>(field_.p);
    s.fp = static_cast<std::uint64_t>(m);
  } else {
    s.mutable_rat() = v;
  }
  return s;
}

bool FieldCtx::is_zero(const Scalar& a) const {
  return field_.kind == FieldKind::Prime ? a.fp == 0 : a.rat() == 0;
}

bool FieldCtx::is_one(const Scalar& a) const {
  return field_.kind == FieldKind::Prime ? a.fp == 1 : a.rat() == 1;
}

Scalar FieldCtx::add(const Scalar& a, const Scalar& b) {
  ++counter_.additions;
  Scalar r;
  if (field_.kind == FieldKind::Prime) {
    r.fp = a.fp + b.fp;
    if (r.fp >= field_.p) r.fp -= field_.p;
  } else {
    r.mutable_rat() = a.rat() + b.rat();
  }
  return r;
}

Scalar FieldCtx::sub(const Scalar& a, const Scalar& b) {
  ++counter_.additions;
  Scalar r;
  if (field_.kind == FieldKind::Prime) {
    r.fp = a.fp + field_.p - b.fp;
    if (r.fp >= field_.p) r.fp -= field_.p;
  } else {
    r.mutable_rat() = a.rat() - b.rat();
  }
  return r;
}

Scalar FieldCtx::mul(const Scalar& a, const Scalar& b) {
  ++counter_.multiplications;
  Scalar r;
  if (field_.kind == FieldKind::Prime)
    r.fp = a.fp * b.fp % field_.p;
  else
    r.mutable_rat() = a.rat() * b.rat();
  return r;
}

Scalar FieldCtx::div(const Scalar& a, const Scalar& b) {
  if (is_zero(b)) throw Error(1, "division by zero");
  ++counter_.divisions;
  Scalar r;
  if (field_.kind == FieldKind::Prime) {
    // extended Euclid for b^-1 mod p
    long long t = 0, nt = 1, rr = static_cast<long long>(field_.p), nr = static_cast<long long>(b.fp);
    while (nr != 0) {
      long long qq = rr / nr;
      long long tmp = t - qq * nt;
      t = nt;
      nt = tmp;
      tmp = rr - qq * nr;
      rr = nr;
      nr = tmp;
    }
    if (t < 0) t += static_cast<long long>(field_.p);
    r.fp = a.fp * static_cast<std::uint64_t>(t) % field_.p;
  } else {
    r.mutable_rat() = a.rat() / b.rat();
  }
  return r;
}

Scalar FieldCtx::neg(const Scalar& a) {
  ++counter_.additions;
  Scalar r;
  if (field_.kind == FieldKind::Prime)
    r.fp = a.fp == 0 ? 0 : field_.p - a.fp;
  else
    r.mutable_rat() = -a.rat();
  return r;
}

Scalar FieldCtx::inv(const Scalar& a) { return div(one(), a); }

Scalar FieldCtx::parse(const std::string& text) const {
  Scalar s;
  try {
    if (field_.kind == FieldKind::Prime) {
      mpz_class z(text);
      mpz_class m = z % static_cast<unsigned long>(field_.p);
      if (m < 0) m += static_cast<unsigned long>(field_.p);
      s.fp = m.get_ui();
    } else {
      mpq_class& q = s.mutable_rat();
      q = mpq_class(text);
      q.canonicalize();
    }
  } catch (const std::invalid_argument&) {
    throw table_error("bad scalar literal '" + text + "'");
  }
  return s;
}

std::string FieldCtx::to_string(const Scalar& a) const {
  return field_.kind == FieldKind::Prime ? std::to_string(a.fp) : a.rat().get_str();
}

}  // namespace lrg
