#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "permat/decompose.hpp"

namespace permat {

int ChunkShape::size() const {
    int s = zeros;
    for (const auto& c : cores) s += c.degree();
    return s;
}

Scalar ChunkShape::trace(const FieldDescriptor& f) const {
    Scalar t = Scalar::zero(f);
    for (const auto& c : cores) t += trace_of(c);
    return t;
}

namespace {

std::optional<std::int64_t> as_small_int(const Scalar& s) {
    if (s.field().kind() == FieldKind::Quadratic && !s.b().is_zero()) return std::nullopt;
    const Rat& r = s.a();
    if (denominator(r) != 1) return std::nullopt;
    Int n = numerator(r);
    if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min())
        return std::nullopt;
    return static_cast<std::int64_t>(n);
}

Polynomial product_of_cyclotomics(const FieldDescriptor& F, const std::vector<std::int64_t>& ds) {
    Polynomial q = Polynomial::one(F);
    for (auto d : ds) q = q * cyclotomic_in(F, d);
    return q;
}

/// Subsets of distinct cyclotomic indices with total degree `deg` and total
/// trace `tau` (trace of Phi_d is moebius(d)). Ascending-index DFS; results
/// sorted by (lcm of indices, coefficient sequence).
std::vector<SteerTarget> subset_targets(const FieldDescriptor& F, int deg, std::int64_t tau,
                                        size_t cap = 64) {
    std::vector<std::int64_t> idx = cyclotomic_indices_up_to_degree(deg);
    std::vector<std::int64_t> phis, mus;
    for (auto d : idx) {
        phis.push_back(euler_phi(d));
        mus.push_back(moebius(d));
    }
    std::vector<std::vector<std::int64_t>> found;
    std::vector<std::int64_t> cur;
    // bound the trace still reachable with the remaining indices
    std::function<void(size_t, int, std::int64_t)> dfs = [&](size_t i, int remaining,
                                                             std::int64_t trace_needed) {
        if (remaining == 0) {
            if (trace_needed == 0) found.push_back(cur);
            return;
        }
        if (i >= idx.size() || found.size() >= 4 * cap) return;
        if (std::abs(trace_needed) > remaining) return;  // each unit of trace costs >= 1 degree
        // take idx[i]
        if (phis[i] <= remaining) {
            cur.push_back(idx[i]);
            dfs(i + 1, remaining - int(phis[i]), trace_needed - mus[i]);
            cur.pop_back();
        }
        dfs(i + 1, remaining, trace_needed);
    };
    dfs(0, deg, tau);

    std::vector<SteerTarget> out;
    for (const auto& ds : found) {
        std::int64_t order = 1;
        for (auto d : ds) order = lcm_i64(order, d);
        out.push_back({product_of_cyclotomics(F, ds), order});
    }
    std::sort(out.begin(), out.end(), [](const SteerTarget& a, const SteerTarget& b) {
        if (*a.claimed_order != *b.claimed_order) return *a.claimed_order < *b.claimed_order;
        return compare_polynomials(a.q, b.q) < 0;
    });
    if (out.size() > cap) out.erase(out.begin() + cap, out.end());
    return out;
}

// the Lemma "cyclotomic with zeros" targets, by the trace of the cyclotomic core
std::optional<SteerTarget> lemma_cyclotomic_target(const FieldDescriptor& F, int n, std::int64_t tau) {
    std::vector<Scalar> cs(n + 1, Scalar::zero(F));
    std::int64_t order = 0;
    if (tau == 0) {
        cs[0] = -Scalar::one(F);
        cs[n] = Scalar::one(F);
        order = n;
    } else if (tau == -1) {
        for (int i = 0; i <= n; ++i) cs[i] = Scalar::one(F);
        order = n + 1;
    } else if (tau == 1) {
        for (int i = 0; i <= n; ++i) cs[i] = Scalar::from_int(F, (n - i) % 2 == 0 ? 1 : -1);
        order = n % 2 == 0 ? 2 * (n + 1) : n + 1;
    } else {
        return std::nullopt;
    }
    Polynomial q(F, std::move(cs));
    if (!is_squarefree(q)) return std::nullopt;
    return SteerTarget{q, order};
}

}  // namespace

std::optional<SteerTarget> choose_target(const ChunkShape& chunk, const FieldDescriptor& field) {
    if (field.kind() == FieldKind::Prime)
        throw FieldMismatchError("choose_target runs over characteristic-zero fields");
    int n = chunk.size();
    Scalar tr = chunk.trace(field);
    auto tau = as_small_int(tr);

    if (chunk.cores.size() == 1 && !chunk.cores[0].coeff(0).is_zero()) {
        const Polynomial& core = chunk.cores[0];
        UnitySplit us = unity_split(core);
        bool plain_cyclotomic = us.rest.is_one() && us.x_power == 0 && us.cyclo.size() == 1 &&
                                us.cyclo.begin()->second == 1;
        if (plain_cyclotomic && chunk.zeros >= 1 && tau && *tau >= -1 && *tau <= 1) {
            auto t = lemma_cyclotomic_target(field, n, *tau);
            if (t && trace_of(t->q) == tr) return t;
        }
        if (!plain_cyclotomic && chunk.zeros >= 2) {
            // irreducible torsion core p: steer toward p(x)*(x^k -+ 1)
            auto r = divisor_torsion_order(core);
            if (r) {
                int k = chunk.zeros;
                Polynomial xk_minus = Polynomial::x_pow_minus_one(field, k);
                Polynomial xk_plus = xk_minus + Polynomial::constant(Scalar::from_int(field, 2));
                if (poly_gcd(core, xk_minus).is_one()) {
                    Polynomial q = core * xk_minus;
                    if (is_squarefree(q) && trace_of(q) == tr)
                        return SteerTarget{q, lcm_i64(k, *r)};
                } else if (poly_gcd(core, xk_plus).is_one()) {
                    Polynomial q = core * xk_plus;
                    if (is_squarefree(q) && trace_of(q) == tr)
                        return SteerTarget{q, lcm_i64(2 * std::int64_t(k), *r)};
                }
            }
        }
    }
    if (!tau) return std::nullopt;
    auto pool = subset_targets(field, n, *tau, 1);
    if (pool.empty()) return std::nullopt;
    return pool.front();
}

std::vector<SteerTarget> target_pool(const ChunkShape& chunk, const FieldDescriptor& field) {
    std::vector<SteerTarget> pool;
    auto preferred = choose_target(chunk, field);
    if (preferred) pool.push_back(*preferred);
    if (auto tau = as_small_int(chunk.trace(field))) {
        for (auto& t : subset_targets(field, chunk.size(), *tau)) {
            bool dup = false;
            for (const auto& have : pool) dup = dup || have.q == t.q;
            if (!dup) pool.push_back(std::move(t));
        }
    }
    return pool;
}

// -------- rank-one steering --------

namespace {

bool is_cyclic_vector(const Matrix& M, const Vec& u) {
    std::vector<Vec> rows(M.n());
    Vec w = u;
    for (int k = 0; k < M.n(); ++k) {
        for (int i = 0; i < M.n(); ++i) rows[i].push_back(w[i]);
        if (k + 1 < M.n()) w = M.apply(w);
    }
    return rank_of_rows(std::move(rows), M.field()) == M.n();
}

std::optional<Vec> find_cyclic_vector(const Matrix& M, std::uint64_t seed) {
    const FieldDescriptor& F = M.field();
    int n = M.n();
    Vec u(n, Scalar::zero(F));
    for (int i = 0; i < n; ++i) {
        std::fill(u.begin(), u.end(), Scalar::zero(F));
        u[i] = Scalar::one(F);
        if (is_cyclic_vector(M, u)) return u;
    }
    std::fill(u.begin(), u.end(), Scalar::zero(F));
    for (int j = 0; j < n; ++j) {
        u[j] = Scalar::one(F);
        if (j > 0 && is_cyclic_vector(M, u)) return u;
    }
    std::mt19937_64 rng(seed ^ 0xc2b2ae3d27d4eb4full);
    std::uniform_int_distribution<int> dist(-3, 3);
    for (int attempt = 0; attempt < 64; ++attempt) {
        for (int i = 0; i < n; ++i) u[i] = Scalar::from_int(F, dist(rng));
        if (is_cyclic_vector(M, u)) return u;
    }
    return std::nullopt;
}

}  // namespace

Matrix steer_rank1(const Matrix& M, const Polynomial& q, std::uint64_t seed) {
    const FieldDescriptor& F = M.field();
    int n = M.n();
    if (!q.is_monic() || q.degree() != n)
        throw Error("steering target must be monic of the matrix size");
    Polynomial chi = charpoly(M);
    if (minpoly(M) != chi) throw DerogatoryError();
    if (trace_of(q) != trace_of(chi)) throw TraceMismatchError();

    Polynomial d = chi - q;  // degree <= n-2
    if (d.is_zero()) return Matrix::zero(F, n);

    ResolventCoeffs R = resolvent(M);
    auto u = find_cyclic_vector(M, seed);
    if (!u) throw InternalInconsistencyError("no cyclic vector found for a non-derogatory matrix");

    // det(xI - M - u v^T) = chi(x) - v^T adj(xI - M) u, so solve (H_i u)^T v = d_i.
    std::vector<Vec> rows;
    Vec rhs;
    for (int i = 0; i < n; ++i) {
        rows.push_back(R.H[i].apply(*u));
        rhs.push_back(d.coeff(i));
    }
    auto v = solve_rows(std::move(rows), std::move(rhs), F);
    if (!v) throw InternalInconsistencyError("steering system inconsistent for a cyclic vector");

    Matrix N = outer(*u, *v, F);
    if (!dot(*v, *u).is_zero() || !(N * N).is_zero())
        throw InternalInconsistencyError("steering output is not square-zero");
    if (charpoly(M + N) != q)
        throw InternalInconsistencyError("steering output has the wrong characteristic polynomial");
    return N;
}

// -------- general (derogatory) steering --------

namespace {

std::string solve_key(const std::vector<Vec>& cols) {
    std::ostringstream os;
    for (const auto& c : cols)
        for (const auto& s : c) os << s.str() << ",";
    return os.str();
}

// candidate column sets U of rank r, built from the kernel of M, unit mixes,
// Krylov chains and plain coordinate picks
std::vector<std::vector<Vec>> u_family(const Matrix& M, int r, int height) {
    const FieldDescriptor& F = M.field();
    int n = M.n();
    std::vector<std::vector<Vec>> fam;
    std::set<std::string> seen;
    auto push = [&](std::vector<Vec> cols) {
        if (int(cols.size()) != r) return;
        std::vector<Vec> rows(n);
        for (int i = 0; i < n; ++i)
            for (const auto& c : cols) rows[i].push_back(c[i]);
        if (rank_of_rows(rows, F) != r) return;
        auto key = solve_key(cols);
        if (seen.insert(key).second) fam.push_back(std::move(cols));
    };
    auto unit = [&](int j) {
        Vec e(n, Scalar::zero(F));
        e[j] = Scalar::one(F);
        return e;
    };

    std::vector<Vec> kernel = nullspace(M);
    int r0 = int(kernel.size());

    if (r == r0) push(kernel);

    // kernel columns shifted by +-h times a unit vector, one shared window
    for (int h = 1; h <= height; ++h) {
        for (int sgn = 1; sgn >= -1; sgn -= 2) {
            Scalar c = Scalar::from_int(F, sgn * h);
            for (int w = 0; w < n && r0 > 0; ++w) {
                std::vector<Vec> cols;
                for (int l = 0; l < std::min(r, r0); ++l)
                    cols.push_back(vec_add(kernel[l], scaled(c, unit((w + l) % n))));
                for (int l = r0; l < r; ++l) cols.push_back(unit((w + l) % n));
                push(std::move(cols));
            }
        }
    }

    // Krylov chains of small starting vectors
    std::vector<Vec> starts;
    for (int i = 0; i < n; ++i) starts.push_back(unit(i));
    for (int i = 0; i + 1 < n; ++i) starts.push_back(vec_add(unit(i), unit(i + 1)));
    if (height >= 2)
        for (int i = 0; i + 1 < n; ++i)
            starts.push_back(vec_add(unit(i), scaled(-Scalar::one(F), unit(i + 1))));
    for (const auto& w0 : starts) {
        std::vector<Vec> cols{w0};
        Vec w = w0;
        for (int k = 1; k < r; ++k) {
            w = M.apply(w);
            cols.push_back(w);
        }
        push(std::move(cols));
    }

    // coordinate selections, lexicographic windows
    for (int start = 0; start + r <= n; ++start) {
        std::vector<Vec> cols;
        for (int l = 0; l < r; ++l) cols.push_back(unit(start + l));
        push(std::move(cols));
    }

    // kernel plus image columns (pairings across the invertible part)
    if (r0 >= 1) {
        for (int j = 0; j < n; ++j) {
            Vec mj = M.apply(unit(j));
            bool zerocol = std::all_of(mj.begin(), mj.end(), [](const Scalar& s) { return s.is_zero(); });
            if (zerocol) continue;
            std::vector<Vec> cols;
            for (int l = 0; l < std::min(r, r0); ++l)
                cols.push_back(l == 0 ? vec_add(kernel[0], scaled(-Scalar::one(F), mj)) : kernel[l]);
            for (int l = r0; l < r; ++l) cols.push_back(unit((j + l) % n));
            push(std::move(cols));
        }
    }

    size_t cap = size_t(16 + 10 * height);
    if (fam.size() > cap) fam.resize(cap);
    return fam;
}

// small coefficient vectors in the W-coordinates, ladder by height then support
std::vector<Vec> small_coeff_vectors(const FieldDescriptor& F, int dim, int height) {
    std::vector<Vec> out;
    Vec z(dim, Scalar::zero(F));
    for (int h = 1; h <= height; ++h) {
        for (int i = 0; i < dim; ++i)
            for (int sgn : {1, -1}) {
                Vec v = z;
                v[i] = Scalar::from_int(F, sgn * h);
                out.push_back(std::move(v));
            }
        for (int i = 0; i < dim; ++i)
            for (int j = i + 1; j < dim; ++j)
                for (int si : {1, -1})
                    for (int sj : {1, -1}) {
                        Vec v = z;
                        v[i] = Scalar::from_int(F, si * h);
                        v[j] = Scalar::from_int(F, sj * h);
                        out.push_back(std::move(v));
                    }
    }
    return out;
}

struct AffineRowSolver {
    const Matrix& M;
    const std::vector<Vec>& U;
    const std::vector<Vec>& W;  // basis of (col U)^perp
    const FieldDescriptor& F;
    int n;

    // solve charpoly(M') condition for row j given the other rows of V
    std::optional<Vec> solve(const std::vector<Vec>& V, int j, const Polynomial& q,
                             SolveTrace& trace) const {
        ++trace.row_solves;
        Matrix Mp = M;
        for (size_t l = 0; l < U.size(); ++l) {
            if (int(l) == j) continue;
            Mp = Mp + outer(U[l], V[l], F);
        }
        ResolventCoeffs R = resolvent(Mp);
        Polynomial chi = charpoly(Mp);
        // v^T H_i u = chi_i - q_i with v = W y
        std::vector<Vec> rows;
        Vec rhs;
        for (int i = 0; i < n; ++i) {
            Vec hi_u = R.H[i].apply(U[j]);
            Vec row;
            row.reserve(W.size());
            for (const auto& w : W) row.push_back(dot(w, hi_u));
            rows.push_back(std::move(row));
            rhs.push_back(chi.coeff(i) - q.coeff(i));
        }
        auto y = solve_rows(std::move(rows), std::move(rhs), F);
        if (!y) return std::nullopt;
        Vec v(n, Scalar::zero(F));
        for (size_t b = 0; b < W.size(); ++b)
            if (!(*y)[b].is_zero()) v = vec_add(v, scaled((*y)[b], W[b]));
        return v;
    }
};

bool certify(const Matrix& M, const std::vector<Vec>& U, const std::vector<Vec>& V,
             const Polynomial& q, Matrix& out) {
    const FieldDescriptor& F = M.field();
    Matrix N = Matrix::zero(F, M.n());
    for (size_t l = 0; l < U.size(); ++l) N = N + outer(U[l], V[l], F);
    if (!(N * N).is_zero()) return false;
    if (charpoly(M + N) != q) return false;
    out = N;
    return true;
}

}  // namespace

std::optional<Matrix> steer_general(const Matrix& M, const std::vector<SteerTarget>& targets,
                                    const SearchBudget& budget, SolveTrace& trace,
                                    std::uint64_t seed) {
    const FieldDescriptor& F = M.field();
    int n = M.n();
    if (targets.empty()) return std::nullopt;

    Polynomial chi = charpoly(M);
    bool nonderogatory = minpoly(M) == chi;
    for (const auto& t : targets) {
        if (!t.q.is_monic() || t.q.degree() != n || trace_of(t.q) != trace_of(chi)) continue;
        ++trace.targets_tried;
        if (t.q == chi) return Matrix::zero(F, n);  // already there (target pools are squarefree)
        if (nonderogatory) return steer_rank1(M, t.q, seed);
    }
    if (nonderogatory) return std::nullopt;

    int r_low = n - M.rank();
    int r_high = std::min(budget.max_rank, n / 2);
    const std::int64_t max_row_solves = 2500LL * std::max(1, budget.max_sweeps);

    for (const auto& t : targets) {
        if (!t.q.is_monic() || t.q.degree() != n || trace_of(t.q) != trace_of(chi)) continue;
        for (int r = std::max(1, r_low); r <= r_high; ++r) {
            for (int h = 1; h <= budget.max_height; ++h) {
                for (const auto& U : u_family(M, r, h)) {
                    ++trace.factors_tried;
                    // v rows restricted to (col U)^perp keeps V^T U = 0, hence N^2 = 0
                    std::vector<Vec> urows(r, Vec());
                    for (int l = 0; l < r; ++l)
                        for (int i = 0; i < n; ++i) urows[l].push_back(U[l][i]);
                    // nullspace of the r x n matrix U^T
                    Matrix ut(F, n);  // embed as square with zero rows below
                    for (int l = 0; l < r; ++l)
                        for (int i = 0; i < n; ++i) ut.at(l, i) = U[l][i];
                    std::vector<Vec> W = nullspace(ut);
                    if (W.empty()) continue;

                    AffineRowSolver solver{M, U, W, F, n};
                    std::vector<Vec> zero_rows(r, Vec(n, Scalar::zero(F)));

                    // prefix rows from the small-vector ladder, final row solved exactly
                    std::vector<Vec> prefix_choices = small_coeff_vectors(F, int(W.size()), h);
                    size_t combos = r >= 3 ? 24 : prefix_choices.size();
                    Matrix N = Matrix::zero(F, n);

                    auto attempt = [&](std::vector<Vec>& V) -> bool {
                        for (int sweep = 0; sweep < std::max(1, budget.max_sweeps); ++sweep) {
                            ++trace.sweeps_run;
                            bool any = false;
                            for (int j = r - 1; j >= 0; --j) {
                                auto v = solver.solve(V, j, t.q, trace);
                                if (!v) continue;
                                any = true;
                                V[size_t(j)] = std::move(*v);
                                if (certify(M, U, V, t.q, N)) return true;
                            }
                            if (!any) return false;
                        }
                        return false;
                    };

                    for (size_t c0 = 0; c0 < prefix_choices.size() && c0 < combos; ++c0) {
                        if (trace.row_solves > max_row_solves) return std::nullopt;
                        std::vector<Vec> V = zero_rows;
                        for (int l = 0; l + 1 < r; ++l) {
                            const Vec& y = prefix_choices[(c0 + size_t(l)) % prefix_choices.size()];
                            Vec v(n, Scalar::zero(F));
                            for (size_t b = 0; b < W.size(); ++b)
                                if (!y[b].is_zero()) v = vec_add(v, scaled(y[b], W[b]));
                            V[size_t(l)] = std::move(v);
                        }
                        if (attempt(V)) return N;
                    }
                }
            }
        }
    }
    return std::nullopt;
}

std::string SolveTrace::str() const {
    std::ostringstream os;
    os << "targets=" << targets_tried << " factor_pairs=" << factors_tried
       << " row_solves=" << row_solves << " sweeps=" << sweeps_run;
    return os.str();
}

}  // namespace permat
