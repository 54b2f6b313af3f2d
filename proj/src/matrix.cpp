#include "permat/matrix.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace permat {

Matrix Matrix::identity(const FieldDescriptor& f, int n) {
    Matrix m(f, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::companion(const Polynomial& p) {
    if (!p.is_monic() || p.degree() < 1)
        throw NotMonicError("companion matrix needs a monic polynomial of degree >= 1");
    int k = p.degree();
    Matrix c(p.field(), k);
    for (int i = 0; i + 1 < k; ++i) c.at(i + 1, i) = Scalar::one(p.field());
    for (int i = 0; i < k; ++i) c.at(i, k - 1) = -p.coeff(i);
    return c;
}

Matrix Matrix::block_diag(const FieldDescriptor& f, const std::vector<Matrix>& blocks) {
    int n = 0;
    for (const auto& b : blocks) n += b.n();
    Matrix m(f, n);
    int off = 0;
    for (const auto& b : blocks) {
        if (b.field() != f) throw FieldMismatchError();
        for (int i = 0; i < b.n(); ++i)
            for (int j = 0; j < b.n(); ++j) m.at(off + i, off + j) = b.at(i, j);
        off += b.n();
    }
    return m;
}

Matrix Matrix::from_ints(const FieldDescriptor& f, const std::vector<std::vector<std::int64_t>>& rows) {
    int n = int(rows.size());
    Matrix m(f, n);
    for (int i = 0; i < n; ++i) {
        if (int(rows[i].size()) != n) throw ParseError("matrix must be square");
        for (int j = 0; j < n; ++j) m.at(i, j) = Scalar::from_int(f, rows[i][j]);
    }
    return m;
}

bool Matrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Matrix::is_identity() const { return *this == identity(field_, n_); }

Scalar Matrix::trace() const {
    Scalar t = Scalar::zero(field_);
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
}

Matrix Matrix::transpose() const {
    Matrix m(field_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m.at(j, i) = at(i, j);
    return m;
}

Matrix Matrix::operator-() const {
    Matrix m(field_, n_);
    for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = -e_[i];
    return m;
}

Matrix operator+(const Matrix& x, const Matrix& y) {
    if (x.field_ != y.field_ || x.n_ != y.n_) throw FieldMismatchError("matrix shape/field mismatch");
    Matrix m(x.field_, x.n_);
    for (size_t i = 0; i < m.e_.size(); ++i) m.e_[i] = x.e_[i] + y.e_[i];
    return m;
}

Matrix operator-(const Matrix& x, const Matrix& y) { return x + (-y); }

Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.field_ != y.field_ || x.n_ != y.n_) throw FieldMismatchError("matrix shape/field mismatch");
    int n = x.n_;
    Matrix m(x.field_, n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const Scalar& a = x.at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < n; ++j) {
                if (y.at(k, j).is_zero()) continue;
                m.at(i, j) += a * y.at(k, j);
            }
        }
    return m;
}

Matrix operator*(const Scalar& c, const Matrix& x) {
    Matrix m(x.field_, x.n_);
    for (size_t i = 0; i < m.e_.size(); ++i) m.e_[i] = c * x.e_[i];
    return m;
}

Matrix Matrix::pow(const Int& e) const {
    if (e < 0) throw Error("matrix power expects a nonnegative exponent");
    Matrix acc = identity(field_, n_);
    Matrix base = *this;
    Int k = e;
    while (k > 0) {
        if (bit_test(k, 0)) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

Vec Matrix::apply(const Vec& v) const {
    Vec out(n_, Scalar::zero(field_));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
    return out;
}

namespace {

// forward elimination; returns (echelon rows, pivot columns, sign)
struct Echelon {
    std::vector<Vec> rows;
    std::vector<int> pivots;
    bool swapped_odd = false;
};

Echelon echelonize(std::vector<Vec> rows, const FieldDescriptor& f) {
    Echelon e;
    size_t width = rows.empty() ? 0 : rows[0].size();
    size_t r = 0;
    for (size_t col = 0; col < width && r < rows.size(); ++col) {
        size_t piv = r;
        while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        if (piv != r) {
            std::swap(rows[piv], rows[r]);
            e.swapped_odd = !e.swapped_odd;
        }
        Scalar inv = rows[r][col].inv();
        for (size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][col].is_zero()) continue;
            Scalar m = rows[i][col] * inv;
            for (size_t j = col; j < width; ++j) rows[i][j] -= m * rows[r][j];
        }
        e.pivots.push_back(int(col));
        ++r;
        (void)f;
    }
    e.rows = std::move(rows);
    return e;
}

}  // namespace

int Matrix::rank() const {
    std::vector<Vec> rows(n_);
    for (int i = 0; i < n_; ++i) {
        rows[i].reserve(n_);
        for (int j = 0; j < n_; ++j) rows[i].push_back(at(i, j));
    }
    return int(echelonize(std::move(rows), field_).pivots.size());
}

Scalar Matrix::det() const {
    std::vector<Vec> rows(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) rows[i].push_back(at(i, j));
    Echelon e = echelonize(std::move(rows), field_);
    if (int(e.pivots.size()) < n_) return Scalar::zero(field_);
    Scalar d = Scalar::one(field_);
    for (int i = 0; i < n_; ++i) d *= e.rows[i][e.pivots[i]];
    return e.swapped_odd ? -d : d;
}

std::optional<Matrix> Matrix::inverse() const {
    // Gauss-Jordan on [A | I]
    std::vector<Vec> rows(n_);
    for (int i = 0; i < n_; ++i) {
        rows[i].assign(2 * n_, Scalar::zero(field_));
        for (int j = 0; j < n_; ++j) rows[i][j] = at(i, j);
        rows[i][n_ + i] = Scalar::one(field_);
    }
    int r = 0;
    for (int col = 0; col < n_; ++col) {
        int piv = r;
        while (piv < n_ && rows[piv][col].is_zero()) ++piv;
        if (piv == n_) return std::nullopt;
        std::swap(rows[piv], rows[r]);
        Scalar inv = rows[r][col].inv();
        for (int j = 0; j < 2 * n_; ++j) rows[r][j] *= inv;
        for (int i = 0; i < n_; ++i) {
            if (i == r || rows[i][col].is_zero()) continue;
            Scalar m = rows[i][col];
            for (int j = 0; j < 2 * n_; ++j) rows[i][j] -= m * rows[r][j];
        }
        ++r;
    }
    Matrix out(field_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) out.at(i, j) = rows[i][n_ + j];
    return out;
}

std::optional<Vec> solve_rows(std::vector<Vec> rows, Vec rhs, const FieldDescriptor& f) {
    size_t m = rows.size();
    if (rhs.size() != m) throw Error("solve_rows: shape mismatch");
    size_t width = rows.empty() ? 0 : rows[0].size();
    for (size_t i = 0; i < m; ++i) rows[i].push_back(rhs[i]);
    Echelon e = echelonize(std::move(rows), f);
    // inconsistent iff some pivot lands in the rhs column
    if (!e.pivots.empty() && e.pivots.back() == int(width)) return std::nullopt;
    Vec x(width, Scalar::zero(f));
    for (int i = int(e.pivots.size()) - 1; i >= 0; --i) {
        int col = e.pivots[i];
        Scalar acc = e.rows[i][width];
        for (size_t j = col + 1; j < width; ++j) acc -= e.rows[i][j] * x[j];
        x[col] = acc / e.rows[i][col];
    }
    return x;
}

std::vector<Vec> nullspace(const Matrix& A) {
    int n = A.n();
    std::vector<Vec> rows(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rows[i].push_back(A.at(i, j));
    Echelon e = echelonize(std::move(rows), A.field());
    std::vector<bool> is_pivot(n, false);
    for (int p : e.pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        Vec v(n, Scalar::zero(A.field()));
        v[free] = Scalar::one(A.field());
        for (int i = int(e.pivots.size()) - 1; i >= 0; --i) {
            int col = e.pivots[i];
            Scalar acc = Scalar::zero(A.field());
            for (int j = col + 1; j < n; ++j) acc -= e.rows[i][j] * v[j];
            v[col] = acc / e.rows[i][col];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Vec> column_space(const Matrix& A) {
    int n = A.n();
    // pivot columns of the row echelon form index independent columns
    std::vector<Vec> rows(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rows[i].push_back(A.at(i, j));
    Echelon e = echelonize(std::move(rows), A.field());
    std::vector<Vec> basis;
    for (int p : e.pivots) {
        Vec col(n, Scalar::zero(A.field()));
        for (int i = 0; i < n; ++i) col[i] = A.at(i, p);
        basis.push_back(std::move(col));
    }
    return basis;
}

int rank_of_rows(std::vector<Vec> rows, const FieldDescriptor& f) {
    return int(echelonize(std::move(rows), f).pivots.size());
}

Vec scaled(const Scalar& c, const Vec& v) {
    Vec out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(c * x);
    return out;
}

Vec vec_add(const Vec& a, const Vec& b) {
    Vec out;
    out.reserve(a.size());
    for (size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + b[i]);
    return out;
}

Scalar dot(const Vec& a, const Vec& b) {
    Scalar s = Scalar::zero(a.at(0).field());
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Matrix outer(const Vec& u, const Vec& v, const FieldDescriptor& f) {
    int n = int(u.size());
    Matrix m(f, n);
    for (int i = 0; i < n; ++i) {
        if (u[i].is_zero()) continue;
        for (int j = 0; j < n; ++j) m.at(i, j) = u[i] * v[j];
    }
    return m;
}

// -------- characteristic and minimal polynomials --------

namespace {

Polynomial charpoly_leverrier(const Matrix& A) {
    const FieldDescriptor& F = A.field();
    int n = A.n();
    std::vector<Scalar> chi(n + 1, Scalar::zero(F));
    chi[n] = Scalar::one(F);
    Matrix M = Matrix::identity(F, n);
    for (int k = 1; k <= n; ++k) {
        Matrix AM = A * M;
        Scalar c = -(AM.trace() / Scalar::from_int(F, k));
        chi[n - k] = c;
        M = AM;
        for (int i = 0; i < n; ++i) M.at(i, i) += c;
    }
    return Polynomial(F, std::move(chi));
}

Polynomial charpoly_hessenberg(const Matrix& A) {
    const FieldDescriptor& F = A.field();
    int n = A.n();
    Matrix H = A;
    for (int j = 0; j + 2 < n; ++j) {
        int piv = -1;
        for (int i = j + 1; i < n; ++i)
            if (!H.at(i, j).is_zero()) {
                piv = i;
                break;
            }
        if (piv == -1) continue;
        if (piv != j + 1) {
            for (int k = 0; k < n; ++k) std::swap(H.at(piv, k), H.at(j + 1, k));
            for (int k = 0; k < n; ++k) std::swap(H.at(k, piv), H.at(k, j + 1));
        }
        Scalar inv = H.at(j + 1, j).inv();
        for (int i = j + 2; i < n; ++i) {
            if (H.at(i, j).is_zero()) continue;
            Scalar m = H.at(i, j) * inv;
            for (int k = 0; k < n; ++k) H.at(i, k) -= m * H.at(j + 1, k);
            for (int k = 0; k < n; ++k) H.at(k, j + 1) += m * H.at(k, i);
        }
    }
    // characteristic polynomials of leading principal minors
    std::vector<Polynomial> p;
    p.push_back(Polynomial::one(F));
    Polynomial x = Polynomial::x_power(F, 1);
    for (int k = 1; k <= n; ++k) {
        Polynomial pk = (x - Polynomial::constant(H.at(k - 1, k - 1))) * p[k - 1];
        Scalar prod = Scalar::one(F);
        for (int m = 1; m <= k - 1; ++m) {
            prod *= H.at(k - m, k - m - 1);
            Scalar coeff = H.at(k - 1 - m, k - 1) * prod;
            if (!coeff.is_zero()) pk = pk - Polynomial::constant(coeff) * p[k - 1 - m];
        }
        p.push_back(std::move(pk));
    }
    return p[n];
}

}  // namespace

Polynomial charpoly(const Matrix& A) {
    if (A.field().kind() == FieldKind::Prime) return charpoly_hessenberg(A);
    return charpoly_leverrier(A);
}

Polynomial minpoly(const Matrix& A) {
    const FieldDescriptor& F = A.field();
    int n = A.n();
    Polynomial m = Polynomial::one(F);
    for (int s = 0; s < n; ++s) {
        if (m.degree() == n) break;
        Vec v(n, Scalar::zero(F));
        v[s] = Scalar::one(F);
        // grow the Krylov chain of e_s until dependence
        std::vector<Vec> chain{v};
        Vec w = v;
        while (true) {
            w = A.apply(w);
            // solve chain^T * c = w  (columns are chain vectors)
            std::vector<Vec> rows(n, Vec());
            for (int i = 0; i < n; ++i) {
                rows[i].reserve(chain.size());
                for (const auto& cv : chain) rows[i].push_back(cv[i]);
            }
            auto sol = solve_rows(std::move(rows), w, F);
            if (sol) {
                std::vector<Scalar> cs(chain.size() + 1, Scalar::zero(F));
                for (size_t i = 0; i < chain.size(); ++i) cs[i] = -(*sol)[i];
                cs[chain.size()] = Scalar::one(F);
                Polynomial local(F, std::move(cs));
                m = (m * local) / poly_gcd(m, local);  // lcm, both monic
                break;
            }
            chain.push_back(w);
        }
    }
    return m;
}

ResolventCoeffs resolvent(const Matrix& A) {
    const FieldDescriptor& F = A.field();
    int n = A.n();
    Polynomial chi = charpoly(A);
    std::vector<Matrix> H(n, Matrix::zero(F, n));
    H[n - 1] = Matrix::identity(F, n);
    for (int i = n - 1; i >= 1; --i) {
        H[i - 1] = H[i] * A;
        Scalar c = chi.coeff(i);
        for (int k = 0; k < n; ++k) H[i - 1].at(k, k) += c;
    }
    Matrix final = H[0] * A;
    for (int k = 0; k < n; ++k) final.at(k, k) += chi.coeff(0);
    if (!final.is_zero())
        throw InternalInconsistencyError("Cayley-Hamilton witness failed in resolvent()");
    return {std::move(H)};
}

Matrix poly_at(const Polynomial& p, const Matrix& A) {
    const FieldDescriptor& F = A.field();
    int n = A.n();
    Matrix acc = Matrix::zero(F, n);
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * A;
        for (int k = 0; k < n; ++k) acc.at(k, k) += p.coeff(i);
    }
    return acc;
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < n_; ++i) {
        os << (i ? " [" : "[");
        for (int j = 0; j < n_; ++j) os << (j ? ", " : "") << at(i, j).str();
        os << "]" << (i + 1 < n_ ? "\n" : "");
    }
    os << "]";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) { return os << m.str(); }

}  // namespace permat
