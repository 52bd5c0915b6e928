#include "garnier/field.hpp"

#include <sstream>
#include <stdexcept>

#include "garnier/modular.hpp"

namespace garnier {

namespace {

const mpq_class& zero_q() {
  static const mpq_class z(0);
  return z;
}

bool reduce_q(const mpq_class& q, std::uint64_t p, std::uint64_t& out) {
  const std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), p);
  if (den == 0) return false;
  const std::uint64_t num = mpz_fdiv_ui(q.get_num_mpz_t(), p);
  out = modular::mul(num, modular::inv(den, p), p);
  return true;
}

}  // namespace

FieldElement::FieldElement(mpq_class a, mpq_class b, mpq_class c, mpq_class d)
    : a_(std::move(a)) {
  a_.canonicalize();
  b.canonicalize();
  c.canonicalize();
  d.canonicalize();
  if (sgn(b) != 0 || sgn(c) != 0 || sgn(d) != 0)
    ext_ = std::make_unique<Ext>(Ext{std::move(b), std::move(c), std::move(d)});
}

FieldElement::FieldElement(const FieldElement& o)
    : a_(o.a_), ext_(o.ext_ ? std::make_unique<Ext>(*o.ext_) : nullptr) {}

FieldElement& FieldElement::operator=(const FieldElement& o) {
  if (this != &o) {
    a_ = o.a_;
    ext_ = o.ext_ ? std::make_unique<Ext>(*o.ext_) : nullptr;
  }
  return *this;
}

const mpq_class& FieldElement::b() const { return ext_ ? (*ext_)[0] : zero_q(); }
const mpq_class& FieldElement::c() const { return ext_ ? (*ext_)[1] : zero_q(); }
const mpq_class& FieldElement::d() const { return ext_ ? (*ext_)[2] : zero_q(); }

bool FieldElement::is_real() const {
  return !ext_ || (sgn((*ext_)[0]) == 0 && sgn((*ext_)[2]) == 0);
}

FieldElement::Ext& FieldElement::ext() {
  if (!ext_) ext_ = std::make_unique<Ext>();
  return *ext_;
}

void FieldElement::normalize() {
  if (ext_ && sgn((*ext_)[0]) == 0 && sgn((*ext_)[1]) == 0 && sgn((*ext_)[2]) == 0)
    ext_.reset();
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  a_ += o.a_;
  if (o.ext_) {
    Ext& e = ext();
    for (int k = 0; k < 3; ++k) e[k] += (*o.ext_)[k];
    normalize();
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  a_ -= o.a_;
  if (o.ext_) {
    Ext& e = ext();
    for (int k = 0; k < 3; ++k) e[k] -= (*o.ext_)[k];
    normalize();
  }
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  if (!ext_ && !o.ext_) {
    a_ *= o.a_;
    return *this;
  }
  if (!o.ext_) {
    a_ *= o.a_;
    for (auto& v : *ext_) v *= o.a_;
    normalize();
    return *this;
  }
  if (!ext_) {
    const mpq_class s = a_;
    a_ = s * o.a_;
    ext_ = std::make_unique<Ext>(Ext{s * (*o.ext_)[0], s * (*o.ext_)[1], s * (*o.ext_)[2]});
    normalize();
    return *this;
  }
  const mpq_class &a = a_, &b = (*ext_)[0], &c = (*ext_)[1], &d = (*ext_)[2];
  const mpq_class &e = o.a_, &f = (*o.ext_)[0], &g = (*o.ext_)[1], &h = (*o.ext_)[2];
  // basis 1, i, r, ir with i^2 = -1, r^2 = 2, (ir)^2 = -2, i*ir = -r, r*ir = 2i
  mpq_class n1 = a * e - b * f + 2 * c * g - 2 * d * h;
  mpq_class ni = a * f + b * e + 2 * c * h + 2 * d * g;
  mpq_class nr = a * g + c * e - b * h - d * f;
  mpq_class nir = a * h + d * e + b * g + c * f;
  a_ = std::move(n1);
  *ext_ = Ext{std::move(ni), std::move(nr), std::move(nir)};
  normalize();
  return *this;
}

void FieldElement::add_mul(const FieldElement& x, const FieldElement& y, mpq_class& scratch,
                           bool negate) {
  if (!x.ext_ && !y.ext_) {
    mpq_mul(scratch.get_mpq_t(), x.a_.get_mpq_t(), y.a_.get_mpq_t());
    if (negate)
      a_ -= scratch;
    else
      a_ += scratch;
    return;
  }
  if (negate)
    *this -= x * y;
  else
    *this += x * y;
}

FieldElement FieldElement::operator-() const {
  FieldElement r(*this);
  r.a_ = -r.a_;
  if (r.ext_)
    for (auto& v : *r.ext_) v = -v;
  return r;
}

FieldElement FieldElement::conjugate() const {
  if (!ext_) return *this;
  return {a_, -(*ext_)[0], (*ext_)[1], -(*ext_)[2]};
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero field element");
  if (!ext_) return FieldElement(mpq_class(1) / a_);
  // e = u + i v with u, v in Q(r2); e * conj(e) = u^2 + v^2 = m + n r2.
  const FieldElement conj = conjugate();
  const FieldElement uv = *this * conj;  // in Q(r2)
  const mpq_class& m = uv.a();
  const mpq_class& n = uv.c();
  const mpq_class norm = m * m - 2 * n * n;
  const FieldElement m_bar(m / norm, 0, -n / norm, 0);
  return conj * m_bar;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
  if (!o.ext_) {
    if (sgn(o.a_) == 0) throw std::domain_error("division by zero field element");
    a_ /= o.a_;
    if (ext_)
      for (auto& v : *ext_) v /= o.a_;
    return *this;
  }
  return *this *= o.inverse();
}

bool operator==(const FieldElement& l, const FieldElement& r) {
  if (l.a_ != r.a_) return false;
  if (!l.ext_ && !r.ext_) return true;
  if (!l.ext_ || !r.ext_) return false;
  return *l.ext_ == *r.ext_;
}

std::complex<double> FieldElement::to_complex() const {
  constexpr double kSqrt2 = 1.41421356237309504880;
  const double re = a_.get_d() + c().get_d() * kSqrt2;
  const double im = b().get_d() + d().get_d() * kSqrt2;
  return {re, im};
}

std::size_t FieldElement::hash() const {
  std::size_t h = mpz_fdiv_ui(a_.get_num_mpz_t(), 1000000007UL) * 31 +
                  mpz_fdiv_ui(a_.get_den_mpz_t(), 1000000007UL);
  if (ext_)
    for (const auto& v : *ext_) h = h * 131 + mpz_fdiv_ui(v.get_num_mpz_t(), 1000000007UL);
  return h;
}

std::string FieldElement::to_canonical() const {
  std::ostringstream os;
  os << a_.get_str() << '+' << b().get_str() << "*i+" << c().get_str() << "*r2+"
     << d().get_str() << "*i*r2";
  return os.str();
}

std::string FieldElement::to_string() const {
  if (!ext_) return a_.get_str();
  std::string out;
  const auto append = [&](const mpq_class& v, const char* basis) {
    if (sgn(v) == 0) return;
    std::string s = v.get_str();
    if (!out.empty() && s[0] != '-') out += '+';
    if (*basis == '\0') {
      out += s;
    } else if (v == 1) {
      out += basis;
    } else if (v == -1) {
      out += '-';
      out += basis;
    } else {
      out += s + "*" + basis;
    }
  };
  append(a_, "");
  append((*ext_)[0], "i");
  append((*ext_)[1], "r2");
  append((*ext_)[2], "i*r2");
  return out.empty() ? "0" : out;
}

bool FieldElement::reduce_mod(std::uint64_t p, std::uint64_t iota, std::uint64_t rho,
                              std::uint64_t& out) const {
  std::uint64_t v = 0;
  if (!reduce_q(a_, p, v)) return false;
  if (ext_) {
    std::uint64_t vb = 0, vc = 0, vd = 0;
    if (!reduce_q((*ext_)[0], p, vb) || !reduce_q((*ext_)[1], p, vc) ||
        !reduce_q((*ext_)[2], p, vd))
      return false;
    v = modular::add(v, modular::mul(vb, iota, p), p);
    v = modular::add(v, modular::mul(vc, rho, p), p);
    v = modular::add(v, modular::mul(vd, modular::mul(iota, rho, p), p), p);
  }
  out = v;
  return true;
}

}  // namespace garnier
