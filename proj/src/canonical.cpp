#include "permat/canonical.hpp"

#include <algorithm>

namespace permat {

namespace {

// Square matrix over F[x] with enough structure for the Smith reduction of
// xI - A. Row operations are mirrored on uinv so that row_ops^{-1} = uinv
// stays available for generator extraction.
struct PolyMat {
    int n;
    FieldDescriptor F;
    std::vector<Polynomial> m;     // the matrix being reduced
    std::vector<Polynomial> uinv;  // accumulated U^{-1}

    PolyMat(const Matrix& A)
        : n(A.n()), F(A.field()), m(size_t(n) * n, Polynomial::zero(A.field())),
          uinv(size_t(n) * n, Polynomial::zero(A.field())) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                // xI - A
                std::vector<Scalar> cs{-A.at(i, j)};
                if (i == j) cs.push_back(Scalar::one(F));
                m[size_t(i) * n + j] = Polynomial(F, std::move(cs));
            }
            uinv[size_t(i) * n + i] = Polynomial::one(F);
        }
    }

    Polynomial& at(int i, int j) { return m[size_t(i) * n + j]; }
    Polynomial& u(int i, int j) { return uinv[size_t(i) * n + j]; }

    void swap_rows(int a, int b) {
        if (a == b) return;
        for (int j = 0; j < n; ++j) std::swap(at(a, j), at(b, j));
        for (int i = 0; i < n; ++i) std::swap(u(i, a), u(i, b));  // uinv column swap
    }
    void swap_cols(int a, int b) {
        if (a == b) return;
        for (int i = 0; i < n; ++i) std::swap(at(i, a), at(i, b));
    }
    // row_i -= q * row_j; uinv column j += q * column i
    void row_sub(int i, int j, const Polynomial& q) {
        if (q.is_zero()) return;
        for (int k = 0; k < n; ++k) at(i, k) = at(i, k) - q * at(j, k);
        for (int k = 0; k < n; ++k) u(k, j) = u(k, j) + q * u(k, i);
    }
    // col_j -= q * col_i
    void col_sub(int j, int i, const Polynomial& q) {
        if (q.is_zero()) return;
        for (int k = 0; k < n; ++k) at(k, j) = at(k, j) - q * at(k, i);
    }
    // row_i *= c (unit); uinv column i /= c
    void row_scale(int i, const Scalar& c) {
        Polynomial pc = Polynomial::constant(c);
        Polynomial pcinv = Polynomial::constant(c.inv());
        for (int k = 0; k < n; ++k) at(i, k) = pc * at(i, k);
        for (int k = 0; k < n; ++k) u(k, i) = pcinv * u(k, i);
    }
};

void smith_reduce(PolyMat& M) {
    int n = M.n;
    for (int t = 0; t < n; ++t) {
        while (true) {
            // nonzero entry of minimal degree in the trailing submatrix
            int bi = -1, bj = -1, bd = -1;
            for (int i = t; i < n; ++i)
                for (int j = t; j < n; ++j) {
                    const Polynomial& e = M.at(i, j);
                    if (e.is_zero()) continue;
                    if (bd < 0 || e.degree() < bd) {
                        bd = e.degree();
                        bi = i;
                        bj = j;
                    }
                }
            if (bd < 0) return;  // all remaining entries zero
            M.swap_rows(bi, t);
            M.swap_cols(bj, t);

            bool changed = false;
            for (int i = t + 1; i < n; ++i) {
                if (M.at(i, t).is_zero()) continue;
                Polynomial q = M.at(i, t) / M.at(t, t);
                M.row_sub(i, t, q);
                if (!M.at(i, t).is_zero()) changed = true;
            }
            for (int j = t + 1; j < n; ++j) {
                if (M.at(t, j).is_zero()) continue;
                Polynomial q = M.at(t, j) / M.at(t, t);
                M.col_sub(j, t, q);
                if (!M.at(t, j).is_zero()) changed = true;
            }
            if (changed) continue;  // a smaller-degree entry appeared

            // enforce the divisibility chain: pivot must divide the rest
            int oi = -1;
            for (int i = t + 1; i < n && oi < 0; ++i)
                for (int j = t + 1; j < n; ++j)
                    if (!(M.at(i, j) % M.at(t, t)).is_zero()) {
                        oi = i;
                        break;
                    }
            if (oi < 0) break;
            M.row_sub(t, oi, -Polynomial::one(M.F));  // row_t += row_oi
        }
        if (!M.at(t, t).is_zero() && !M.at(t, t).is_monic())
            M.row_scale(t, M.at(t, t).leading().inv());
    }
}

Vec generator_from_uinv(const PolyMat& M, const Matrix& A, int col) {
    const FieldDescriptor& F = A.field();
    int n = A.n();
    Vec g(n, Scalar::zero(F));
    for (int j = 0; j < n; ++j) {
        const Polynomial& pol = M.uinv[size_t(j) * n + col];
        if (pol.is_zero()) continue;
        // pol(A) e_j via Horner on the vector
        Vec w(n, Scalar::zero(F));
        for (int k = pol.degree(); k >= 0; --k) {
            w = A.apply(w);
            if (!pol.coeff(k).is_zero()) w[j] += pol.coeff(k);
        }
        g = vec_add(g, w);
    }
    return g;
}

}  // namespace

std::vector<Polynomial> smith_invariant_factors(const Matrix& A) {
    PolyMat M(A);
    smith_reduce(M);
    std::vector<Polynomial> out;
    out.reserve(A.n());
    for (int i = 0; i < A.n(); ++i) out.push_back(M.at(i, i));
    return out;
}

std::vector<Polynomial> split_invariant_factor(const Polynomial& d, std::uint64_t seed) {
    std::vector<Polynomial> atoms;
    const FieldDescriptor& F = d.field();
    if (F.kind() == FieldKind::Prime) {
        for (const auto& [g, e] : factor_fp(d, seed)) {
            Polynomial atom = Polynomial::one(F);
            for (int i = 0; i < e; ++i) atom = atom * g;
            atoms.push_back(atom);
        }
    } else {
        UnitySplit us = unity_split(d);
        if (!us.rest.is_one())
            throw NotSplitOverFieldError("invariant factor " + d.str() +
                                         " has a factor outside x-powers and cyclotomics");
        if (us.x_power > 0) atoms.push_back(Polynomial::x_power(F, us.x_power));
        for (const auto& [idx, mult] : us.cyclo) {
            Polynomial phi = cyclotomic_in(F, idx);
            Polynomial atom = Polynomial::one(F);
            for (int i = 0; i < mult; ++i) atom = atom * phi;
            atoms.push_back(atom);
        }
    }
    return atoms;
}

std::optional<std::int64_t> divisor_torsion_order(const Polynomial& f) {
    if (f.coeff(0).is_zero()) return std::nullopt;
    if (f.field().kind() == FieldKind::Prime) return torsion_order_poly(f);
    UnitySplit us = unity_split(f);
    if (!us.rest.is_one()) return torsion_order_poly(f);  // in-field divisor: bounded scan
    std::int64_t s = 1;
    for (const auto& [idx, mult] : us.cyclo) {
        if (mult > 1) return std::nullopt;  // proper power is not torsion in char 0
        s = lcm_i64(s, idx);
    }
    return s;
}

bool divisor_order_less(const ElementaryDivisor& a, const ElementaryDivisor& b) {
    auto rank = [](const ElementaryDivisor& d) {
        switch (d.kind) {
            case ElementaryDivisor::Kind::X: return 0;
            case ElementaryDivisor::Kind::Nilpotent: return 1;
            case ElementaryDivisor::Kind::Torsion: return 2;
        }
        return 3;
    };
    int ra = rank(a), rb = rank(b);
    if (ra != rb) return ra < rb;
    if (ra == 1) return a.k > b.k;
    if (ra == 2) {
        std::int64_t oa = a.order.value_or(std::numeric_limits<std::int64_t>::max());
        std::int64_t ob = b.order.value_or(std::numeric_limits<std::int64_t>::max());
        if (oa != ob) return oa < ob;
        if (a.k != b.k) return a.k < b.k;
        return compare_polynomials(a.poly, b.poly) < 0;
    }
    return false;
}

CanonicalData canonical_form(const Matrix& A) {
    const FieldDescriptor& F = A.field();
    int n = A.n();
    if (n < 1) throw Error("canonical_form needs n >= 1");

    PolyMat M(A);
    smith_reduce(M);

    struct Piece {
        ElementaryDivisor div;
        Vec gen;
    };
    std::vector<Piece> pieces;
    for (int t = 0; t < n; ++t) {
        const Polynomial d = M.at(t, t);
        if (d.degree() < 1) continue;
        Vec g = generator_from_uinv(M, A, t);
        for (const Polynomial& atom : split_invariant_factor(d)) {
            Polynomial h = d / atom;
            Vec gen = g;
            if (!h.is_one()) {
                // h(A) g
                Vec w(n, Scalar::zero(F));
                for (int k = h.degree(); k >= 0; --k) {
                    w = A.apply(w);
                    if (!h.coeff(k).is_zero()) w = vec_add(w, scaled(h.coeff(k), g));
                }
                gen = std::move(w);
            }
            ElementaryDivisor div{ElementaryDivisor::Kind::Torsion, atom.degree(), atom, std::nullopt};
            if (atom.coeff(0).is_zero()) {
                div.kind = atom.degree() == 1 ? ElementaryDivisor::Kind::X
                                              : ElementaryDivisor::Kind::Nilpotent;
                div.k = atom.degree();
            } else {
                div.k = atom.degree();
                div.order = divisor_torsion_order(atom);
            }
            pieces.push_back({std::move(div), std::move(gen)});
        }
    }

    std::stable_sort(pieces.begin(), pieces.end(),
                     [](const Piece& a, const Piece& b) { return divisor_order_less(a.div, b.div); });

    CanonicalData out{{}, Matrix::zero(F, n), Matrix::zero(F, n), Matrix::zero(F, n)};
    std::vector<Matrix> blocks;
    int col = 0;
    for (auto& piece : pieces) {
        out.divisors.push_back(piece.div);
        blocks.push_back(Matrix::companion(piece.div.poly));
        Vec w = piece.gen;
        for (int j = 0; j < piece.div.poly.degree(); ++j) {
            for (int i = 0; i < n; ++i) out.P.at(i, col) = w[i];
            ++col;
            if (j + 1 < piece.div.poly.degree()) w = A.apply(w);
        }
    }
    if (col != n) throw InternalInconsistencyError("elementary divisor degrees do not sum to n");
    out.B = Matrix::block_diag(F, blocks);
    auto pinv = out.P.inverse();
    if (!pinv) throw InternalInconsistencyError("canonical transform is singular");
    out.Pinv = std::move(*pinv);
    if (out.Pinv * A * out.P != out.B)
        throw InternalInconsistencyError("canonical similarity failed to verify");
    return out;
}

}  // namespace permat
