#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "permat/scalar.hpp"

namespace permat {

/// Dense univariate polynomial over a Scalar field. Coefficient of x^i at
/// index i; no trailing zeros are stored, so the zero polynomial is empty.
class Polynomial {
  public:
    explicit Polynomial(const FieldDescriptor& f) : field_(f) {}
    Polynomial(const FieldDescriptor& f, std::vector<Scalar> coeffs);
    /// Convenience: small integer coefficients, constant term first.
    static Polynomial from_ints(const FieldDescriptor& f, const std::vector<std::int64_t>& coeffs);
    static Polynomial zero(const FieldDescriptor& f) { return Polynomial(f); }
    static Polynomial one(const FieldDescriptor& f) { return constant(Scalar::one(f)); }
    static Polynomial constant(const Scalar& c);
    /// x^k
    static Polynomial x_power(const FieldDescriptor& f, int k);
    /// x^r - 1
    static Polynomial x_pow_minus_one(const FieldDescriptor& f, std::int64_t r);

    const FieldDescriptor& field() const { return field_; }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return degree() == 0 && coeffs_[0].is_one(); }
    bool is_monic() const { return !is_zero() && coeffs_.back().is_one(); }
    /// Coefficient of x^i; zero beyond the degree.
    Scalar coeff(int i) const;
    const Scalar& leading() const { return coeffs_.back(); }
    const std::vector<Scalar>& coeffs() const { return coeffs_; }

    Polynomial monic() const;
    Polynomial derivative() const;
    Scalar eval(const Scalar& x) const;
    /// Multiply by x^k.
    Polynomial shifted(int k) const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
    friend Polynomial operator-(const Polynomial& f, const Polynomial& g);
    friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
    friend Polynomial operator*(const Scalar& c, const Polynomial& f);
    bool operator==(const Polynomial& o) const { return field_ == o.field_ && coeffs_ == o.coeffs_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::string str() const;

  private:
    void trim();

    FieldDescriptor field_;
    std::vector<Scalar> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Euclidean division: f = q*g + r with deg r < deg g.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& f, const Polynomial& g);
Polynomial operator/(const Polynomial& f, const Polynomial& g);
Polynomial operator%(const Polynomial& f, const Polynomial& g);
/// Monic gcd; gcd(0, 0) = 0.
Polynomial poly_gcd(const Polynomial& f, const Polynomial& g);
/// g, u, v with u*f + v*h = g = gcd(f, h), g monic.
struct ExtendedGcd {
    Polynomial g, u, v;
};
ExtendedGcd poly_xgcd(const Polynomial& f, const Polynomial& h);
/// base^e mod m (m nonconstant).
Polynomial poly_powmod(const Polynomial& base, const Int& e, const Polynomial& m);
bool is_squarefree(const Polynomial& f);
/// Deterministic total order on polynomials of the same field: by degree,
/// then coefficient sequence from the constant term up.
int compare_polynomials(const Polynomial& f, const Polynomial& g);

/// Sum of the roots of a monic polynomial: minus the second-highest
/// coefficient, matching the matrix trace of its companion.
Scalar trace_of(const Polynomial& f);

std::int64_t moebius(std::int64_t n);
std::int64_t euler_phi(std::int64_t n);
/// Prime factorization of n >= 1 by trial division, (prime, exponent) pairs.
std::vector<std::pair<Int, int>> factor_integer(Int n);

/// The d-th cyclotomic polynomial over Q (cached; safe for concurrent readers).
Polynomial cyclotomic(std::int64_t d);
/// Phi_d with coefficients mapped into f.
Polynomial cyclotomic_in(const FieldDescriptor& f, std::int64_t d);

/// Least r >= 1 with f | x^r - 1, or nullopt.
/// Characteristic 0: scans r up to `bound` (default 2*deg^2).
/// F_p: exact, via the multiplicative order of x modulo each irreducible factor.
std::optional<std::int64_t> torsion_order_poly(const Polynomial& f,
                                               std::optional<std::int64_t> bound = std::nullopt);

/// Multiset factorization of a monic polynomial over F_p into irreducibles,
/// sorted by (degree, coefficients). Deterministic for a fixed seed.
std::vector<std::pair<Polynomial, int>> factor_fp(const Polynomial& f, std::uint64_t seed = 1);

/// f = x^a * prod Phi_d^mult * rest with rest coprime to x and to every
/// cyclotomic of degree <= deg f. Characteristic-zero fields only; over
/// Q(sqrt d) the cyclotomics keep their rational coefficients.
struct UnitySplit {
    int x_power = 0;
    std::map<std::int64_t, int> cyclo;  // index -> multiplicity
    Polynomial rest;
};
UnitySplit unity_split(const Polynomial& f);

/// All d with euler_phi(d) == deg, ascending.
std::vector<std::int64_t> cyclotomic_indices_of_degree(std::int64_t deg);
/// All d with euler_phi(d) <= deg, ascending.
std::vector<std::int64_t> cyclotomic_indices_up_to_degree(std::int64_t deg);

std::int64_t lcm_i64(std::int64_t a, std::int64_t b);

}  // namespace permat
