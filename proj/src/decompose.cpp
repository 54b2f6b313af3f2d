#include "permat/decompose.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace permat {

std::string strategy_name(Strategy s) {
    switch (s) {
        case Strategy::Trivial: return "trivial";
        case Strategy::PairFull: return "pair-full";
        case Strategy::SteerRank1: return "steer-rank1";
        case Strategy::SteerGeneral: return "steer-general";
        case Strategy::FpGlobal: return "fp-global";
    }
    return "?";
}

bool VerifyReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.pass; });
}

// -------- periodicity --------

std::optional<PeriodWitness> is_periodic(const Matrix& A, std::optional<std::int64_t> order_bound) {
    const FieldDescriptor& F = A.field();
    Polynomial m = minpoly(A);
    Polynomial x = Polynomial::x_power(F, 1);
    int a = 0;
    while (m.degree() >= 1 && m.coeff(0).is_zero()) {
        m = m / x;
        ++a;
    }
    std::int64_t s = 1;
    if (m.degree() >= 1) {
        if (F.kind() == FieldKind::Prime) {
            s = *torsion_order_poly(m);  // total over F_p: finite multiplicative structure
        } else {
            if (!is_squarefree(m)) return std::nullopt;
            UnitySplit us = unity_split(m);
            for (const auto& [d, mult] : us.cyclo) s = lcm_i64(s, d);
            if (!us.rest.is_one()) {
                // in-field divisor of some x^r - 1 (possible over Q(sqrt d)): bounded scan
                std::int64_t deg = m.degree();
                auto r = torsion_order_poly(us.rest, order_bound.value_or(2 * deg * deg));
                if (!r) return std::nullopt;
                s = lcm_i64(s, *r);
            }
        }
    }
    PeriodWitness w{std::max<std::int64_t>(a, 1), 0, a, s};
    w.m0 = w.n0 + s;
    if (A.pow(Int(w.m0)) != A.pow(Int(w.n0)))
        throw InternalInconsistencyError("period witness failed to verify");
    return w;
}

// -------- torsion order of a matrix --------

std::optional<std::int64_t> torsion_order_matrix(const Matrix& T,
                                                 std::optional<std::int64_t> order_bound) {
    const FieldDescriptor& F = T.field();
    Polynomial m = minpoly(T);
    if (m.coeff(0).is_zero()) return std::nullopt;  // not invertible
    std::optional<std::int64_t> s;
    if (F.kind() == FieldKind::Prime) {
        s = torsion_order_poly(m);
    } else {
        if (!is_squarefree(m)) return std::nullopt;
        UnitySplit us = unity_split(m);
        std::int64_t acc = 1;
        for (const auto& [d, mult] : us.cyclo) acc = lcm_i64(acc, d);
        if (!us.rest.is_one()) {
            std::int64_t deg = m.degree();
            auto r = torsion_order_poly(us.rest, order_bound.value_or(2 * deg * deg));
            if (!r) return std::nullopt;
            acc = lcm_i64(acc, *r);
        }
        s = acc;
    }
    if (!s) return std::nullopt;
    if (!T.pow(Int(*s)).is_identity())
        throw InternalInconsistencyError("computed torsion order failed the power check");
    return s;
}

// -------- idempotent + torsion --------

namespace {

Matrix ones_last_column_idempotent(const FieldDescriptor& F, int k) {
    Matrix e(F, k);
    for (int i = 0; i < k; ++i) e.at(i, k - 1) = Scalar::one(F);
    return e;
}

Polynomial all_ones_poly(const FieldDescriptor& F, int k) {
    std::vector<Scalar> cs(k + 1, Scalar::one(F));
    return Polynomial(F, std::move(cs));
}

}  // namespace

Certificate idempotent_torsion(const Matrix& A, std::optional<std::int64_t> order_bound) {
    const FieldDescriptor& F = A.field();
    if (!is_periodic(A, order_bound)) throw NotPeriodicError();
    CanonicalData canon = canonical_form(A);

    std::vector<Matrix> eblocks, tblocks;
    std::int64_t s = 1;
    for (const auto& div : canon.divisors) {
        switch (div.kind) {
            case ElementaryDivisor::Kind::X: {
                // (0) = (Id) + (-Id)
                eblocks.push_back(Matrix::identity(F, 1));
                tblocks.push_back(-Matrix::identity(F, 1));
                s = lcm_i64(s, *torsion_order_poly(Polynomial::from_ints(F, {1, 1})));
                break;
            }
            case ElementaryDivisor::Kind::Nilpotent: {
                int k = div.k;
                Polynomial t = all_ones_poly(F, k);
                Matrix tb = Matrix::companion(t);
                Matrix eb = ones_last_column_idempotent(F, k);
                if (eb + tb != Matrix::companion(div.poly))
                    throw InternalInconsistencyError("nilpotent block split failed");
                eblocks.push_back(std::move(eb));
                tblocks.push_back(std::move(tb));
                s = lcm_i64(s, *torsion_order_poly(t));
                break;
            }
            case ElementaryDivisor::Kind::Torsion: {
                if (!div.order) throw NotPeriodicError("invertible part is not torsion");
                eblocks.push_back(Matrix::zero(F, div.k));
                tblocks.push_back(Matrix::companion(div.poly));
                s = lcm_i64(s, *div.order);
                break;
            }
        }
    }
    Matrix E = canon.P * Matrix::block_diag(F, eblocks) * canon.Pinv;
    Matrix T = canon.P * Matrix::block_diag(F, tblocks) * canon.Pinv;
    Certificate cert{Certificate::Kind::ET, std::move(E), std::move(T), s, canon.P};
    if (!verify_certificate(A, cert).all_pass())
        throw InternalInconsistencyError("idempotent + torsion certificate failed verification");
    return cert;
}

// -------- Lemma "maximal pairing" --------

Matrix pair_full(const Matrix& Tk) {
    const FieldDescriptor& F = Tk.field();
    int k = Tk.n();
    auto ord = torsion_order_matrix(Tk);
    if (!ord) throw NotTorsionError();
    Matrix N(F, 2 * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            N.at(i, j) = -Tk.at(i, j);
            N.at(i, k + j) = -Tk.at(i, j);
            N.at(k + i, j) = Tk.at(i, j);
            N.at(k + i, k + j) = Tk.at(i, j);
        }
    if (!(N * N).is_zero()) throw InternalInconsistencyError("pairing block is not square-zero");
    Matrix A = Matrix::block_diag(F, {Matrix::zero(F, k), Tk});
    Matrix t6 = Tk.pow(6);
    if ((A - N).pow(6) != Matrix::block_diag(F, {t6, t6}))
        throw InternalInconsistencyError("pairing sixth-power identity failed");
    return N;
}

// -------- F_p completion --------

namespace {

bool in_span(const std::vector<Vec>& basis, const Vec& v, const FieldDescriptor& F) {
    std::vector<Vec> rows = basis;
    int before = rank_of_rows(rows, F);
    rows.push_back(v);
    return rank_of_rows(std::move(rows), F) == before;
}

Vec unit_vec(const FieldDescriptor& F, int n, int j) {
    Vec e(n, Scalar::zero(F));
    e[j] = Scalar::one(F);
    return e;
}

Vec first_outside(const std::vector<Vec>& span, int n, const FieldDescriptor& F) {
    for (int j = 0; j < n; ++j) {
        Vec e = unit_vec(F, n, j);
        if (!in_span(span, e, F)) return e;
    }
    throw InternalInconsistencyError("no standard vector outside a proper subspace");
}

}  // namespace

std::pair<Matrix, Matrix> fp_completion(const Matrix& A) {
    const FieldDescriptor& F = A.field();
    if (F.kind() != FieldKind::Prime)
        throw FieldMismatchError("fp_completion needs a prime field");
    int n = A.n();
    int rank = A.rank();
    if (2 * rank < n) throw RankTooLowError();
    int r = n - rank;
    if (r == 0) return {A, Matrix::zero(F, n)};

    std::vector<Vec> col = column_space(A);
    std::vector<Vec> ker = nullspace(A);

    // W with W + col(A) = F^n and W meeting ker(A) only in 0: greedily avoid
    // the two proper subspaces col+span(ws) and ker+span(ws)
    std::vector<Vec> ws;
    for (int step = 0; step < r; ++step) {
        std::vector<Vec> s1 = col, s2 = ker;
        s1.insert(s1.end(), ws.begin(), ws.end());
        s2.insert(s2.end(), ws.begin(), ws.end());
        Vec x = first_outside(s1, n, F);
        Vec y = first_outside(s2, n, F);
        Vec w = x;
        if (in_span(s2, x, F)) {
            if (!in_span(s1, y, F))
                w = y;
            else
                w = vec_add(x, y);  // outside both when x in s2 and y in s1
        }
        ws.push_back(std::move(w));
    }

    // adapted basis [W | ker A | complement]; V^T = the middle block of its inverse
    std::vector<Vec> basis = ws;
    basis.insert(basis.end(), ker.begin(), ker.end());
    for (int j = 0; j < n && int(basis.size()) < n; ++j) {
        Vec e = unit_vec(F, n, j);
        if (!in_span(basis, e, F)) basis.push_back(std::move(e));
    }
    Matrix B(F, n);
    for (int c = 0; c < n; ++c)
        for (int i = 0; i < n; ++i) B.at(i, c) = basis[c][i];
    auto binv = B.inverse();
    if (!binv) throw InternalInconsistencyError("adapted basis is singular");

    Matrix N = Matrix::zero(F, n);
    for (int l = 0; l < r; ++l) {
        Vec vt(n, Scalar::zero(F));
        for (int j = 0; j < n; ++j) vt[j] = binv->at(r + l, j);  // vanishes on W, iso on ker A
        N = N + outer(ws[l], vt, F);
    }
    Matrix T = A - N;
    if (!(N * N).is_zero()) throw InternalInconsistencyError("completion N is not square-zero");
    if (T.rank() != n) throw InternalInconsistencyError("completion T is not invertible");
    return {T, N};
}

// -------- zero allocation --------

ChunkPlan allocate_zeros(const CanonicalData& canon, const FieldDescriptor& field) {
    int n = canon.B.n();
    std::vector<int> xdiv, nildiv, tordiv;
    for (int i = 0; i < int(canon.divisors.size()); ++i) {
        switch (canon.divisors[i].kind) {
            case ElementaryDivisor::Kind::X: xdiv.push_back(i); break;
            case ElementaryDivisor::Kind::Nilpotent: nildiv.push_back(i); break;
            case ElementaryDivisor::Kind::Torsion: tordiv.push_back(i); break;
        }
    }
    int z = int(xdiv.size());
    int rank = n - z - int(nildiv.size());
    if (2 * rank < n) throw RankTooLowError();

    ChunkPlan plan;
    if (field.kind() == FieldKind::Prime) {
        Chunk c;
        c.zeros = z;
        c.core = nildiv;
        c.core.insert(c.core.end(), tordiv.begin(), tordiv.end());
        c.strategy = Strategy::FpGlobal;
        plan.chunks.push_back(std::move(c));
        return plan;
    }

    int remaining = z;
    for (int idx : nildiv) {  // descending k by canonical order
        int k = canon.divisors[idx].k;
        int take = std::min(remaining, k - 2);
        remaining -= take;
        plan.chunks.push_back({take, {idx}, take == 0 ? Strategy::Trivial : Strategy::SteerGeneral});
    }

    // exact subset-sum pairing of leftover zeros with torsion blocks
    std::vector<int> avail = tordiv;
    if (remaining > 0 && !avail.empty()) {
        int cap = remaining;
        std::vector<std::vector<bool>> reach(avail.size() + 1, std::vector<bool>(cap + 1, false));
        reach[0][0] = true;
        for (size_t i = 0; i < avail.size(); ++i) {
            int deg = canon.divisors[avail[i]].poly.degree();
            for (int s = 0; s <= cap; ++s) {
                if (!reach[i][s]) continue;
                reach[i + 1][s] = true;
                if (s + deg <= cap) reach[i + 1][s + deg] = true;
            }
        }
        int best = 0;
        for (int s = cap; s >= 1; --s)
            if (reach[avail.size()][s]) {
                best = s;
                break;
            }
        if (best > 0) {
            // reconstruct preferring earlier blocks
            std::vector<int> chosen;
            int s = best;
            for (int i = int(avail.size()); i >= 1; --i) {
                int deg = canon.divisors[avail[i - 1]].poly.degree();
                if (s >= deg && reach[i - 1][s - deg]) {
                    chosen.push_back(avail[i - 1]);
                    s -= deg;
                }
            }
            std::sort(chosen.begin(), chosen.end());
            plan.chunks.push_back({best, chosen, Strategy::PairFull});
            remaining -= best;
            std::vector<int> rest;
            for (int idx : avail)
                if (std::find(chosen.begin(), chosen.end(), idx) == chosen.end()) rest.push_back(idx);
            avail = std::move(rest);
        }
    }

    // maximal coprime groups of the remaining torsion blocks; each absorbs at
    // most one zero while staying non-derogatory
    std::vector<std::pair<std::vector<int>, std::set<std::string>>> groups;
    for (int idx : avail) {
        const Polynomial& p = canon.divisors[idx].poly;
        std::set<std::string> support;
        UnitySplit us = unity_split(p);
        for (const auto& [d, mult] : us.cyclo) support.insert("c" + std::to_string(d));
        if (!us.rest.is_one()) support.insert(us.rest.str());
        bool placed = false;
        for (auto& [members, sup] : groups) {
            bool disjoint = std::none_of(support.begin(), support.end(),
                                         [&](const std::string& k) { return sup.count(k) > 0; });
            if (disjoint) {
                members.push_back(idx);
                sup.insert(support.begin(), support.end());
                placed = true;
                break;
            }
        }
        if (!placed) groups.push_back({{idx}, support});
    }
    std::vector<size_t> torsion_chunks;
    for (auto& [members, sup] : groups) {
        int take = remaining > 0 ? 1 : 0;
        remaining -= take;
        torsion_chunks.push_back(plan.chunks.size());
        plan.chunks.push_back({take, members, take == 0 ? Strategy::Trivial : Strategy::SteerRank1});
    }
    // any zeros still left pile onto the torsion chunk with the most headroom
    while (remaining > 0) {
        size_t best = torsion_chunks.size();
        int headroom = 0;
        for (size_t ci : torsion_chunks) {
            Chunk& c = plan.chunks[ci];
            int degsum = 0;
            for (int idx : c.core) degsum += canon.divisors[idx].poly.degree();
            if (degsum - c.zeros > headroom) {
                headroom = degsum - c.zeros;
                best = ci;
            }
        }
        if (best == torsion_chunks.size())
            throw InternalInconsistencyError("zero allocation ran out of capacity despite rank check");
        Chunk& c = plan.chunks[best];
        ++c.zeros;
        --remaining;
        c.strategy = c.zeros == 1 ? Strategy::SteerRank1 : Strategy::SteerGeneral;
    }
    return plan;
}

// -------- torsion + square-zero --------

namespace {

struct ChunkSolution {
    Matrix T;
    Matrix N;
    std::int64_t order;
};

ChunkSolution solve_chunk(const CanonicalData& canon, const Chunk& chunk,
                          const FieldDescriptor& F, const SearchBudget& budget,
                          std::optional<std::int64_t> order_bound, std::uint64_t seed) {
    ChunkShape shape;
    shape.zeros = chunk.zeros;
    std::vector<Matrix> cores;
    for (int idx : chunk.core) {
        shape.cores.push_back(canon.divisors[idx].poly);
        cores.push_back(Matrix::companion(canon.divisors[idx].poly));
    }
    std::vector<Matrix> blocks{Matrix::zero(F, chunk.zeros)};
    blocks.insert(blocks.end(), cores.begin(), cores.end());
    Matrix M = Matrix::block_diag(F, blocks);

    auto finish = [&](Matrix N) -> ChunkSolution {
        Matrix T = M - N;
        auto ord = torsion_order_matrix(T, order_bound);
        if (!ord) throw InternalInconsistencyError("chunk torsion part has no finite order");
        return {std::move(T), std::move(N), *ord};
    };

    switch (chunk.strategy) {
        case Strategy::Trivial: {
            if (!chunk.core.empty() &&
                canon.divisors[chunk.core[0]].kind == ElementaryDivisor::Kind::Nilpotent) {
                // lone nilpotent block: rank-one steering toward a chosen target
                auto target = choose_target(shape, F);
                if (!target) throw SolverExhaustedError(SolveTrace{});
                Matrix Nsteer = steer_rank1(M, target->q, seed);
                return finish(-Nsteer);
            }
            return finish(Matrix::zero(F, M.n()));
        }
        case Strategy::PairFull: {
            Matrix Tk = Matrix::block_diag(F, cores);
            Matrix N = pair_full(Tk);
            return finish(N);
        }
        case Strategy::SteerRank1: {
            auto target = choose_target(shape, F);
            if (!target) throw SolverExhaustedError(SolveTrace{});
            Matrix Nsteer = steer_rank1(M, target->q, seed);
            return finish(-Nsteer);
        }
        case Strategy::SteerGeneral: {
            SolveTrace trace;
            auto pool = target_pool(shape, F);
            auto Nsteer = steer_general(M, pool, budget, trace, seed);
            if (!Nsteer) throw SolverExhaustedError(trace);
            return finish(-*Nsteer);
        }
        case Strategy::FpGlobal:
            throw InternalInconsistencyError("F_p chunks are solved globally");
    }
    throw InternalInconsistencyError("unknown chunk strategy");
}

}  // namespace

Certificate torsion_squarezero(const Matrix& A, const SearchBudget& budget,
                               std::optional<std::int64_t> order_bound, std::uint64_t seed) {
    const FieldDescriptor& F = A.field();
    int n = A.n();

    if (F.kind() == FieldKind::Prime) {
        auto [T, N] = fp_completion(A);
        auto ord = torsion_order_matrix(T);
        if (!ord) throw InternalInconsistencyError("finite-field torsion part has no order");
        Certificate cert{Certificate::Kind::TN, std::move(T), std::move(N), *ord,
                         Matrix::identity(F, n)};
        if (!verify_certificate(A, cert).all_pass())
            throw InternalInconsistencyError("torsion + square-zero certificate failed verification");
        return cert;
    }

    if (!is_periodic(A, order_bound)) throw NotPeriodicError();
    if (2 * A.rank() < n) throw RankTooLowError();
    CanonicalData canon = canonical_form(A);
    ChunkPlan plan = allocate_zeros(canon, F);

    // chunk-contiguous reordering of the canonical coordinates
    std::vector<int> offsets(canon.divisors.size(), 0);
    {
        int off = 0;
        for (size_t i = 0; i < canon.divisors.size(); ++i) {
            offsets[i] = off;
            off += canon.divisors[i].poly.degree();
        }
    }
    std::vector<int> xqueue;
    for (size_t i = 0; i < canon.divisors.size(); ++i)
        if (canon.divisors[i].kind == ElementaryDivisor::Kind::X) xqueue.push_back(offsets[i]);
    size_t xnext = 0;
    std::vector<int> pi;
    pi.reserve(n);
    for (const Chunk& chunk : plan.chunks) {
        for (int zi = 0; zi < chunk.zeros; ++zi) pi.push_back(xqueue.at(xnext++));
        for (int idx : chunk.core)
            for (int c = 0; c < canon.divisors[idx].poly.degree(); ++c)
                pi.push_back(offsets[idx] + c);
    }
    if (int(pi.size()) != n || xnext != xqueue.size())
        throw InternalInconsistencyError("chunk plan does not cover the canonical coordinates");
    Matrix perm = Matrix::zero(F, n);
    for (int c = 0; c < n; ++c) perm.at(pi[c], c) = Scalar::one(F);

    std::vector<Matrix> tparts, nparts;
    std::int64_t s = 1;
    for (const Chunk& chunk : plan.chunks) {
        ChunkSolution sol = solve_chunk(canon, chunk, F, budget, order_bound, seed);
        s = lcm_i64(s, sol.order);
        tparts.push_back(std::move(sol.T));
        nparts.push_back(std::move(sol.N));
    }
    Matrix Nc = Matrix::block_diag(F, nparts);
    Matrix Tc = Matrix::block_diag(F, tparts);
    if (Tc + Nc != perm.transpose() * canon.B * perm)
        throw InternalInconsistencyError("chunk solutions do not reassemble the canonical form");

    Matrix Q = canon.P * perm;
    Matrix Qinv = perm.transpose() * canon.Pinv;
    Matrix N = Q * Nc * Qinv;
    Matrix T = A - N;
    Certificate cert{Certificate::Kind::TN, std::move(T), std::move(N), s, std::move(Q)};
    if (!verify_certificate(A, cert).all_pass())
        throw InternalInconsistencyError("torsion + square-zero certificate failed verification");
    return cert;
}

// -------- certificate verification --------

namespace {

std::vector<std::int64_t> proper_divisors(std::int64_t s) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 1; d * d <= s; ++d) {
        if (s % d) continue;
        if (d < s) out.push_back(d);
        if (s / d < s && s / d != d) out.push_back(s / d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

VerifyReport verify_certificate(const Matrix& A, const Certificate& cert) {
    VerifyReport rep;
    auto add = [&](const std::string& name, bool pass, const std::string& detail = "") {
        rep.checks.push_back({name, pass, detail});
    };
    bool shape_ok = cert.first.field() == A.field() && cert.second.field() == A.field() &&
                    cert.first.n() == A.n() && cert.second.n() == A.n();
    add("field-and-size", shape_ok);
    if (!shape_ok) return rep;

    add("parts-sum", cert.first + cert.second == A);

    const Matrix& T = cert.kind == Certificate::Kind::ET ? cert.second : cert.first;
    if (cert.kind == Certificate::Kind::ET) {
        const Matrix& E = cert.first;
        add("idempotent", E * E == E);
    } else {
        const Matrix& N = cert.second;
        add("square-zero", (N * N).is_zero());
    }
    bool invertible = T.rank() == T.n();
    add("torsion-invertible", invertible);
    bool order_positive = cert.torsion_order >= 1;
    add("order-positive", order_positive);
    if (invertible && order_positive) {
        add("torsion-power", T.pow(Int(cert.torsion_order)).is_identity());
        bool minimal = true;
        std::string offender;
        for (std::int64_t d : proper_divisors(cert.torsion_order)) {
            if (T.pow(Int(d)).is_identity()) {
                minimal = false;
                offender = "T^" + std::to_string(d) + " = Id";
                break;
            }
        }
        add("order-minimal", minimal, offender);
    }
    return rep;
}

// -------- the Q(sqrt 2) obstruction --------

ObstructionReport check_remark29() {
    FieldDescriptor F = FieldDescriptor::quadratic(2);
    const Scalar one = Scalar::one(F);
    const Scalar sqrt2 = Scalar::quadratic(F, 0, 1);

    Matrix A(F, 3);
    A.at(1, 2) = -one;
    A.at(2, 1) = one;
    A.at(2, 2) = -sqrt2;

    ObstructionReport rep{A, false, Polynomial::zero(F), Polynomial::zero(F),
                          Polynomial::zero(FieldDescriptor::rationals()),
                          Scalar::zero(FieldDescriptor::rationals()), {}, false};

    rep.period_ok = A.pow(9) == A;
    if (!rep.period_ok) throw InternalInconsistencyError("A^9 = A failed");

    // the only characteristic polynomial a torsion A+N could have
    rep.forced_quadratic = Polynomial(F, {one, sqrt2 - one, one});
    rep.forced = Polynomial(F, {one, one}) * rep.forced_quadratic;
    if (trace_of(rep.forced) != A.trace())
        throw InternalInconsistencyError("forced polynomial trace mismatch");

    // eliminate sqrt 2 by multiplying with the conjugate (a resultant with y^2 - 2)
    std::vector<Scalar> conj_cs;
    for (int i = 0; i <= rep.forced_quadratic.degree(); ++i) {
        const Scalar& c = rep.forced_quadratic.coeff(i);
        conj_cs.push_back(Scalar::quadratic(F, c.a(), -c.b()));
    }
    Polynomial norm = rep.forced_quadratic * Polynomial(F, std::move(conj_cs));
    const FieldDescriptor Q = FieldDescriptor::rationals();
    std::vector<Scalar> rat_cs;
    for (int i = 0; i <= norm.degree(); ++i) {
        if (!norm.coeff(i).b().is_zero())
            throw InternalInconsistencyError("norm polynomial is not rational");
        rat_cs.push_back(Scalar::from_rat(Q, norm.coeff(i).a()));
    }
    rep.min_poly_q = Polynomial(Q, std::move(rat_cs));
    if (rep.min_poly_q != Polynomial::from_ints(Q, {1, -2, 1, -2, 1}))
        throw InternalInconsistencyError("minimal polynomial is not x^4 - 2x^3 + x^2 - 2x + 1");

    rep.min_poly_trace = trace_of(rep.min_poly_q);
    if (rep.min_poly_trace != Scalar::from_int(Q, 2))
        throw InternalInconsistencyError("minimal polynomial trace is not 2");

    rep.candidates = cyclotomic_indices_of_degree(4);
    rep.all_candidates_differ = true;
    for (std::int64_t d : rep.candidates)
        rep.all_candidates_differ = rep.all_candidates_differ && cyclotomic(d) != rep.min_poly_q;
    if (!rep.all_candidates_differ)
        throw InternalInconsistencyError("minimal polynomial matched a cyclotomic");
    return rep;
}

}  // namespace permat
