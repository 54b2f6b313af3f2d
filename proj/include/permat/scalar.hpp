#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "permat/errors.hpp"

namespace permat {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

enum class FieldKind { Rationals, Prime, Quadratic };

/// Describes one of the three supported coefficient fields:
/// the rationals Q, a prime field F_p, or a real quadratic extension Q(sqrt(d)).
class FieldDescriptor {
  public:
    FieldDescriptor() : kind_(FieldKind::Rationals) {}

    static FieldDescriptor rationals() { return FieldDescriptor(); }
    /// Requires p prime (checked by trial division).
    static FieldDescriptor prime(std::int64_t p);
    /// Requires d squarefree and d >= 2, so sqrt(d) is irrational.
    static FieldDescriptor quadratic(std::int64_t d);

    FieldKind kind() const { return kind_; }
    std::int64_t p() const { return p_; }
    std::int64_t d() const { return d_; }
    /// 0 for Q and Q(sqrt d), p for F_p.
    std::int64_t characteristic() const { return kind_ == FieldKind::Prime ? p_ : 0; }

    bool operator==(const FieldDescriptor& o) const {
        return kind_ == o.kind_ && p_ == o.p_ && d_ == o.d_;
    }
    bool operator!=(const FieldDescriptor& o) const { return !(*this == o); }

    std::string str() const;

  private:
    FieldKind kind_;
    std::int64_t p_ = 0;
    std::int64_t d_ = 0;
};

/// Exact element of one of the supported fields. Immutable value type;
/// representation is always canonical (reduced fraction, residue in [0,p)).
class Scalar {
  public:
    Scalar() : Scalar(zero(FieldDescriptor::rationals())) {}

    static Scalar zero(const FieldDescriptor& f) { return Scalar(f, 0, 0); }
    static Scalar one(const FieldDescriptor& f) { return from_int(f, 1); }
    static Scalar from_int(const FieldDescriptor& f, const Int& v);
    static Scalar from_rat(const FieldDescriptor& f, const Rat& v);
    /// a + b*sqrt(d); requires a quadratic field.
    static Scalar quadratic(const FieldDescriptor& f, const Rat& a, const Rat& b);

    const FieldDescriptor& field() const { return field_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_one() const;

    /// Rational value (Q), residue as integer rational (F_p), or the a-coordinate (Q(sqrt d)).
    const Rat& a() const { return a_; }
    /// sqrt(d)-coordinate; zero outside quadratic fields.
    const Rat& b() const { return b_; }
    Int residue() const;

    Scalar operator-() const;
    Scalar inv() const;

    friend Scalar operator+(const Scalar& x, const Scalar& y);
    friend Scalar operator-(const Scalar& x, const Scalar& y);
    friend Scalar operator*(const Scalar& x, const Scalar& y);
    friend Scalar operator/(const Scalar& x, const Scalar& y);
    Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
    Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
    Scalar& operator*=(const Scalar& y) { return *this = *this * y; }
    Scalar& operator/=(const Scalar& y) { return *this = *this / y; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string str() const;

  private:
    Scalar(const FieldDescriptor& f, Rat a, Rat b) : field_(f), a_(std::move(a)), b_(std::move(b)) {}
    void canonicalize();

    FieldDescriptor field_;
    Rat a_;
    Rat b_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);
std::ostream& operator<<(std::ostream& os, const FieldDescriptor& f);

/// Total order used only for deterministic output ordering; not a field order.
int compare_scalars(const Scalar& x, const Scalar& y);

void check_same_field(const Scalar& x, const Scalar& y);

}  // namespace permat
