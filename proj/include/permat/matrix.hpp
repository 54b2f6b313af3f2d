#pragma once

#include <optional>
#include <vector>

#include "permat/polynomial.hpp"

namespace permat {

using Vec = std::vector<Scalar>;

/// Dense square matrix with exact Scalar entries.
class Matrix {
  public:
    Matrix(const FieldDescriptor& f, int n) : field_(f), n_(n), e_(size_t(n) * n, Scalar::zero(f)) {}

    static Matrix identity(const FieldDescriptor& f, int n);
    static Matrix zero(const FieldDescriptor& f, int n) { return Matrix(f, n); }
    /// Companion of a monic polynomial: ones on the subdiagonal, negated
    /// coefficients in the last column.
    static Matrix companion(const Polynomial& p);
    static Matrix block_diag(const FieldDescriptor& f, const std::vector<Matrix>& blocks);
    static Matrix from_ints(const FieldDescriptor& f, const std::vector<std::vector<std::int64_t>>& rows);

    const FieldDescriptor& field() const { return field_; }
    int n() const { return n_; }

    const Scalar& at(int i, int j) const { return e_[size_t(i) * n_ + j]; }
    Scalar& at(int i, int j) { return e_[size_t(i) * n_ + j]; }

    bool is_zero() const;
    bool is_identity() const;
    Scalar trace() const;
    Matrix transpose() const;

    Matrix operator-() const;
    friend Matrix operator+(const Matrix& x, const Matrix& y);
    friend Matrix operator-(const Matrix& x, const Matrix& y);
    friend Matrix operator*(const Matrix& x, const Matrix& y);
    friend Matrix operator*(const Scalar& c, const Matrix& x);
    bool operator==(const Matrix& o) const { return field_ == o.field_ && n_ == o.n_ && e_ == o.e_; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    /// A^e for e >= 0 by repeated squaring.
    Matrix pow(const Int& e) const;

    Vec apply(const Vec& v) const;

    int rank() const;
    Scalar det() const;
    std::optional<Matrix> inverse() const;

    std::string str() const;

  private:
    FieldDescriptor field_;
    int n_;
    std::vector<Scalar> e_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

/// det(xI - A), monic of degree n. Faddeev-LeVerrier in characteristic zero,
/// Hessenberg reduction over F_p (LeVerrier divides by 1..n, illegal for p <= n).
Polynomial charpoly(const Matrix& A);
/// Least-degree monic annihilator: lcm of Krylov annihilators of the standard basis.
Polynomial minpoly(const Matrix& A);

/// Coefficients of adj(xI - A) = sum x^i H[i]; H[n-1] = Id and
/// H[i-1] = H[i]*A + chi_i*Id, with H[0]*A + chi_0*Id = 0 (Cayley-Hamilton).
struct ResolventCoeffs {
    std::vector<Matrix> H;
};
ResolventCoeffs resolvent(const Matrix& A);

/// p(A).
Matrix poly_at(const Polynomial& p, const Matrix& A);

// Exact rectangular linear algebra on row lists (each row one equation).
/// One solution of rows * x = rhs, free variables set to zero; nullopt if inconsistent.
std::optional<Vec> solve_rows(std::vector<Vec> rows, Vec rhs, const FieldDescriptor& f);
/// Basis of the right kernel of A.
std::vector<Vec> nullspace(const Matrix& A);
/// Basis of the column space of A.
std::vector<Vec> column_space(const Matrix& A);
int rank_of_rows(std::vector<Vec> rows, const FieldDescriptor& f);

Vec scaled(const Scalar& c, const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Scalar dot(const Vec& a, const Vec& b);
/// Column vectors u, v -> u * v^T.
Matrix outer(const Vec& u, const Vec& v, const FieldDescriptor& f);

}  // namespace permat
