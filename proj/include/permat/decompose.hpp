#pragma once

#include <cstdint>
#include <string>

#include "permat/canonical.hpp"

namespace permat {

/// Normalized witness of A^m0 = A^n0: n0 = max(nilpotency index, 1) and
/// m0 = n0 + torsion order of the invertible part.
struct PeriodWitness {
    std::int64_t n0;
    std::int64_t m0;
    int nil_index;               // largest x-power among elementary divisors, 0 if invertible
    std::int64_t torsion_order;  // order of the invertible part, 1 if nilpotent
};

/// Periodicity test. Over F_p every matrix is periodic; in characteristic zero
/// the invertible part of the minimal polynomial must be squarefree with all
/// roots roots of unity (detected structurally via cyclotomic extraction, with
/// a bounded order scan for in-field divisors over Q(sqrt d)).
std::optional<PeriodWitness> is_periodic(const Matrix& A,
                                         std::optional<std::int64_t> order_bound = std::nullopt);

enum class Strategy { Trivial, PairFull, SteerRank1, SteerGeneral, FpGlobal };
std::string strategy_name(Strategy s);

/// One block of the zero-distribution plan: `zeros` elementary divisors x
/// followed by the cores listed by index into CanonicalData::divisors.
struct Chunk {
    int zeros = 0;
    std::vector<int> core;
    Strategy strategy = Strategy::Trivial;
};

struct ChunkPlan {
    std::vector<Chunk> chunks;
};

/// Zero distribution for the torsion + square-zero decomposition. Feasible
/// exactly when 2*rank >= n, i.e. #X <= sum(k_i - 2) + dim(torsion part).
ChunkPlan allocate_zeros(const CanonicalData& canon, const FieldDescriptor& field);

/// Shape of a chunk as polynomials, independent of any particular matrix.
struct ChunkShape {
    int zeros = 0;
    std::vector<Polynomial> cores;
    int size() const;
    Scalar trace(const FieldDescriptor& f) const;
};

/// A candidate characteristic polynomial for steering: monic, of the chunk
/// size, trace-matched; in characteristic zero a squarefree product of
/// cyclotomics dividing x^claimed_order - 1.
struct SteerTarget {
    Polynomial q;
    std::optional<std::int64_t> claimed_order;  // nullopt: invertible-only (F_p)
};

/// The preferred target for a chunk over a characteristic-zero field, or
/// nullopt when no trace-matching squarefree cyclotomic product of the right
/// degree exists.
std::optional<SteerTarget> choose_target(const ChunkShape& chunk, const FieldDescriptor& field);
/// Deterministically ordered candidate pool: the preferred target first, then
/// all subset-search products by (claimed order, coefficient sequence).
std::vector<SteerTarget> target_pool(const ChunkShape& chunk, const FieldDescriptor& field);

/// Square-zero rank-one steering for non-derogatory M: returns N = u v^T with
/// v^T u = 0 and charpoly(M + N) = q. Deterministic; requires
/// trace_of(q) = trace(M) and minpoly(M) = charpoly(M).
Matrix steer_rank1(const Matrix& M, const Polynomial& q, std::uint64_t seed = 1);

struct SearchBudget {
    int max_rank = 3;
    int max_height = 2;
    int max_sweeps = 3;
};

struct SolveTrace {
    std::int64_t targets_tried = 0;
    std::int64_t factors_tried = 0;
    std::int64_t row_solves = 0;
    std::int64_t sweeps_run = 0;
    std::string str() const;
};

struct SolverExhaustedError : Error {
    SolveTrace trace;
    explicit SolverExhaustedError(SolveTrace t)
        : Error("steering search exhausted its budget (" + t.str() + ")"), trace(std::move(t)) {}
};

/// Best-effort square-zero steering toward any target in the pool. Delegates
/// to steer_rank1 when M is non-derogatory; otherwise runs a bounded search
/// over structured factor pairs N = U V^T with V^T U = 0, accepting only on an
/// exact certificate. Returns nullopt when the budget is exhausted.
std::optional<Matrix> steer_general(const Matrix& M, const std::vector<SteerTarget>& targets,
                                    const SearchBudget& budget, SolveTrace& trace,
                                    std::uint64_t seed = 1);

/// Lemma "maximal pairing": for torsion Tk of size k and A = diag(0_k, Tk),
/// N = [[-T, -T], [T, T]] is square-zero and (A - N)^6 = diag(T^6, T^6).
Matrix pair_full(const Matrix& Tk);

/// Deterministic torsion + square-zero completion over F_p with 2*rank >= n:
/// N = U V^T square-zero with T = A - N invertible. Returns (T, N).
std::pair<Matrix, Matrix> fp_completion(const Matrix& A);

/// Exact order: least s >= 1 with T^s = Id, or nullopt when T is not torsion.
std::optional<std::int64_t> torsion_order_matrix(const Matrix& T,
                                                 std::optional<std::int64_t> order_bound = std::nullopt);

struct Certificate {
    enum class Kind { ET, TN };
    Kind kind;
    /// ET: (E, T) with E idempotent; TN: (T, N) with N square-zero.
    Matrix first;
    Matrix second;
    std::int64_t torsion_order;
    /// Similarity used: decompositions are computed in canonical coordinates
    /// and conjugated back through this matrix.
    Matrix transform;
};

/// Proposition "idempotent + torsion": total on periodic matrices.
Certificate idempotent_torsion(const Matrix& A,
                               std::optional<std::int64_t> order_bound = std::nullopt);

/// Theorem "torsion + square-zero" for 2*rank >= n. Throws RankTooLowError,
/// NotPeriodicError, NotSplitOverFieldError or SolverExhaustedError.
Certificate torsion_squarezero(const Matrix& A, const SearchBudget& budget = {},
                               std::optional<std::int64_t> order_bound = std::nullopt,
                               std::uint64_t seed = 1);

struct VerifyCheck {
    std::string name;
    bool pass;
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;
    bool all_pass() const;
};

/// Recomputes every certificate invariant by exact arithmetic; the torsion
/// order is also checked minimal (no proper divisor of s reaches Id).
VerifyReport verify_certificate(const Matrix& A, const Certificate& cert);

/// The counterexample over Q(sqrt 2): a periodic rank-2 matrix of size 3 that
/// admits no torsion + square-zero decomposition.
struct ObstructionReport {
    Matrix A;
    bool period_ok;                       // A^9 = A
    Polynomial forced;                    // (x+1)(x^2 + (sqrt2 - 1)x + 1)
    Polynomial forced_quadratic;          // x^2 + (sqrt2 - 1)x + 1
    Polynomial min_poly_q;                // x^4 - 2x^3 + x^2 - 2x + 1 over Q
    Scalar min_poly_trace;                // 2, hence not cyclotomic
    std::vector<std::int64_t> candidates; // all d with phi(d) = 4
    bool all_candidates_differ;
};
ObstructionReport check_remark29();

}  // namespace permat
