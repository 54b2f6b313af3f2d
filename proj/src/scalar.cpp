#include "permat/scalar.hpp"

#include <ostream>
#include <sstream>

namespace permat {

namespace {

bool is_prime_i64(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t i = 2; i <= p / i; ++i)
        if (p % i == 0) return false;
    return true;
}

bool is_squarefree_i64(std::int64_t d) {
    for (std::int64_t i = 2; i <= d / i; ++i)
        if (d % (i * i) == 0) return false;
    return true;
}

Rat mod_p(const Rat& v, std::int64_t p) {
    // v has denominator coprime to p; reduce to the canonical residue.
    Int num = numerator(v);
    Int den = denominator(v);
    Int pp(p);
    Int n = num % pp;
    if (n < 0) n += pp;
    if (den == 1) return Rat(n);
    // invert the denominator mod p by Fermat: den^(p-2)
    Int base = den % pp, acc = 1, e = p - 2;
    while (e > 0) {
        if (bit_test(e, 0)) acc = acc * base % pp;
        base = base * base % pp;
        e >>= 1;
    }
    return Rat(n * acc % pp);
}

}  // namespace

FieldDescriptor FieldDescriptor::prime(std::int64_t p) {
    if (!is_prime_i64(p)) throw ParseError("field modulus " + std::to_string(p) + " is not prime");
    FieldDescriptor f;
    f.kind_ = FieldKind::Prime;
    f.p_ = p;
    return f;
}

FieldDescriptor FieldDescriptor::quadratic(std::int64_t d) {
    if (d < 2 || !is_squarefree_i64(d))
        throw ParseError("quadratic radicand " + std::to_string(d) + " must be squarefree and >= 2");
    FieldDescriptor f;
    f.kind_ = FieldKind::Quadratic;
    f.d_ = d;
    return f;
}

std::string FieldDescriptor::str() const {
    switch (kind_) {
        case FieldKind::Rationals: return "Q";
        case FieldKind::Prime: return "F" + std::to_string(p_);
        case FieldKind::Quadratic: return "Q(sqrt " + std::to_string(d_) + ")";
    }
    return "?";
}

Scalar Scalar::from_int(const FieldDescriptor& f, const Int& v) {
    Scalar s(f, Rat(v), 0);
    s.canonicalize();
    return s;
}

Scalar Scalar::from_rat(const FieldDescriptor& f, const Rat& v) {
    if (f.kind() == FieldKind::Prime && denominator(v) % f.p() == 0)
        throw DivisionByZeroError("rational with denominator divisible by p has no image in F_p");
    Scalar s(f, v, 0);
    s.canonicalize();
    return s;
}

Scalar Scalar::quadratic(const FieldDescriptor& f, const Rat& a, const Rat& b) {
    if (f.kind() != FieldKind::Quadratic)
        throw FieldMismatchError("quadratic coordinates need a quadratic field");
    return Scalar(f, a, b);
}

void Scalar::canonicalize() {
    if (field_.kind() == FieldKind::Prime) a_ = mod_p(a_, field_.p());
}

bool Scalar::is_one() const { return a_ == 1 && b_ == 0; }

Int Scalar::residue() const {
    if (field_.kind() != FieldKind::Prime) throw FieldMismatchError("residue() needs a prime field");
    return numerator(a_);
}

void check_same_field(const Scalar& x, const Scalar& y) {
    if (x.field() != y.field()) throw FieldMismatchError();
}

Scalar Scalar::operator-() const {
    Scalar r(field_, -a_, -b_);
    r.canonicalize();
    return r;
}

Scalar operator+(const Scalar& x, const Scalar& y) {
    check_same_field(x, y);
    Scalar r(x.field_, x.a_ + y.a_, x.b_ + y.b_);
    r.canonicalize();
    return r;
}

Scalar operator-(const Scalar& x, const Scalar& y) {
    check_same_field(x, y);
    Scalar r(x.field_, x.a_ - y.a_, x.b_ - y.b_);
    r.canonicalize();
    return r;
}

Scalar operator*(const Scalar& x, const Scalar& y) {
    check_same_field(x, y);
    switch (x.field_.kind()) {
        case FieldKind::Quadratic: {
            // (a1 + b1 s)(a2 + b2 s) with s^2 = d
            Rat a = x.a_ * y.a_ + Rat(x.field_.d()) * x.b_ * y.b_;
            Rat b = x.a_ * y.b_ + x.b_ * y.a_;
            return Scalar(x.field_, std::move(a), std::move(b));
        }
        default: {
            Scalar r(x.field_, x.a_ * y.a_, 0);
            r.canonicalize();
            return r;
        }
    }
}

Scalar Scalar::inv() const {
    if (is_zero()) throw DivisionByZeroError();
    switch (field_.kind()) {
        case FieldKind::Rationals: return Scalar(field_, Rat(1) / a_, 0);
        case FieldKind::Prime: {
            Scalar r(field_, Rat(Int(1), numerator(a_)), 0);
            r.canonicalize();
            return r;
        }
        case FieldKind::Quadratic: {
            // conjugate over the norm: (a + b s)^-1 = (a - b s) / (a^2 - d b^2)
            Rat norm = a_ * a_ - Rat(field_.d()) * b_ * b_;
            // norm is zero only when a/b = +-sqrt(d), impossible for rational a, b
            // with d squarefree >= 2 unless a = b = 0.
            return Scalar(field_, a_ / norm, -b_ / norm);
        }
    }
    throw InternalInconsistencyError("unreachable field kind");
}

Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inv(); }

bool Scalar::operator==(const Scalar& o) const {
    return field_ == o.field_ && a_ == o.a_ && b_ == o.b_;
}

int compare_scalars(const Scalar& x, const Scalar& y) {
    check_same_field(x, y);
    if (x.a() != y.a()) return x.a() < y.a() ? -1 : 1;
    if (x.b() != y.b()) return x.b() < y.b() ? -1 : 1;
    return 0;
}

namespace {
std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}
}  // namespace

std::string Scalar::str() const {
    switch (field_.kind()) {
        case FieldKind::Rationals: return rat_str(a_);
        case FieldKind::Prime: return rat_str(a_);
        case FieldKind::Quadratic: {
            if (b_ == 0) return rat_str(a_);
            std::string s = rat_str(b_) + "*s" + std::to_string(field_.d());
            if (a_ == 0) return s;
            return rat_str(a_) + (b_ > 0 ? "+" : "") + s;
        }
    }
    return "?";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }
std::ostream& operator<<(std::ostream& os, const FieldDescriptor& f) { return os << f.str(); }

}  // namespace permat
