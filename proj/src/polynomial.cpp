#include "permat/polynomial.hpp"

#include <algorithm>
#include <mutex>
#include <ostream>
#include <random>
#include <sstream>

namespace permat {

Polynomial::Polynomial(const FieldDescriptor& f, std::vector<Scalar> coeffs)
    : field_(f), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
        if (c.field() != field_) throw FieldMismatchError();
    trim();
}

Polynomial Polynomial::from_ints(const FieldDescriptor& f, const std::vector<std::int64_t>& coeffs) {
    std::vector<Scalar> cs;
    cs.reserve(coeffs.size());
    for (auto v : coeffs) cs.push_back(Scalar::from_int(f, v));
    return Polynomial(f, std::move(cs));
}

Polynomial Polynomial::constant(const Scalar& c) { return Polynomial(c.field(), {c}); }

Polynomial Polynomial::x_power(const FieldDescriptor& f, int k) {
    std::vector<Scalar> cs(k + 1, Scalar::zero(f));
    cs[k] = Scalar::one(f);
    return Polynomial(f, std::move(cs));
}

Polynomial Polynomial::x_pow_minus_one(const FieldDescriptor& f, std::int64_t r) {
    std::vector<Scalar> cs(r + 1, Scalar::zero(f));
    cs[0] = -Scalar::one(f);
    cs[r] = Scalar::one(f);
    return Polynomial(f, std::move(cs));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar Polynomial::coeff(int i) const {
    if (i < 0 || i > degree()) return Scalar::zero(field_);
    return coeffs_[i];
}

Polynomial Polynomial::monic() const {
    if (is_zero()) throw DivisionByZeroError("cannot normalize the zero polynomial");
    if (is_monic()) return *this;
    Scalar lcinv = leading().inv();
    std::vector<Scalar> cs;
    cs.reserve(coeffs_.size());
    for (const auto& c : coeffs_) cs.push_back(c * lcinv);
    return Polynomial(field_, std::move(cs));
}

Polynomial Polynomial::derivative() const {
    std::vector<Scalar> cs;
    for (int i = 1; i <= degree(); ++i) cs.push_back(Scalar::from_int(field_, i) * coeffs_[i]);
    return Polynomial(field_, std::move(cs));
}

Scalar Polynomial::eval(const Scalar& x) const {
    Scalar acc = Scalar::zero(field_);
    for (int i = degree(); i >= 0; --i) acc = acc * x + coeffs_[i];
    return acc;
}

Polynomial Polynomial::shifted(int k) const {
    if (is_zero()) return *this;
    std::vector<Scalar> cs(coeffs_.size() + k, Scalar::zero(field_));
    for (size_t i = 0; i < coeffs_.size(); ++i) cs[i + k] = coeffs_[i];
    return Polynomial(field_, std::move(cs));
}

Polynomial Polynomial::operator-() const {
    std::vector<Scalar> cs;
    cs.reserve(coeffs_.size());
    for (const auto& c : coeffs_) cs.push_back(-c);
    return Polynomial(field_, std::move(cs));
}

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
    if (f.field_ != g.field_) throw FieldMismatchError();
    std::vector<Scalar> cs(std::max(f.coeffs_.size(), g.coeffs_.size()), Scalar::zero(f.field_));
    for (size_t i = 0; i < cs.size(); ++i) cs[i] = f.coeff(int(i)) + g.coeff(int(i));
    return Polynomial(f.field_, std::move(cs));
}

Polynomial operator-(const Polynomial& f, const Polynomial& g) { return f + (-g); }

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
    if (f.field_ != g.field_) throw FieldMismatchError();
    if (f.is_zero() || g.is_zero()) return Polynomial::zero(f.field_);
    std::vector<Scalar> cs(f.coeffs_.size() + g.coeffs_.size() - 1, Scalar::zero(f.field_));
    for (size_t i = 0; i < f.coeffs_.size(); ++i) {
        if (f.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < g.coeffs_.size(); ++j)
            cs[i + j] += f.coeffs_[i] * g.coeffs_[j];
    }
    return Polynomial(f.field_, std::move(cs));
}

Polynomial operator*(const Scalar& c, const Polynomial& f) {
    std::vector<Scalar> cs;
    cs.reserve(f.coeffs_.size());
    for (const auto& a : f.coeffs_) cs.push_back(c * a);
    return Polynomial(f.field_, std::move(cs));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& f, const Polynomial& g) {
    if (f.field() != g.field()) throw FieldMismatchError();
    if (g.is_zero()) throw DivisionByZeroError("polynomial division by zero");
    const FieldDescriptor& F = f.field();
    std::vector<Scalar> rem(f.coeffs().begin(), f.coeffs().end());
    int dg = g.degree();
    int df = f.degree();
    if (df < dg) return {Polynomial::zero(F), f};
    std::vector<Scalar> quo(df - dg + 1, Scalar::zero(F));
    Scalar lginv = g.leading().inv();
    for (int i = df; i >= dg; --i) {
        if (rem[i].is_zero()) continue;
        Scalar q = rem[i] * lginv;
        quo[i - dg] = q;
        for (int j = 0; j <= dg; ++j) rem[i - dg + j] -= q * g.coeff(j);
    }
    return {Polynomial(F, std::move(quo)), Polynomial(F, std::move(rem))};
}

Polynomial operator/(const Polynomial& f, const Polynomial& g) { return divmod(f, g).first; }
Polynomial operator%(const Polynomial& f, const Polynomial& g) { return divmod(f, g).second; }

Polynomial poly_gcd(const Polynomial& f, const Polynomial& g) {
    Polynomial a = f, b = g;
    while (!b.is_zero()) {
        Polynomial r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

ExtendedGcd poly_xgcd(const Polynomial& f, const Polynomial& h) {
    const FieldDescriptor& F = f.field();
    Polynomial r0 = f, r1 = h;
    Polynomial s0 = Polynomial::one(F), s1 = Polynomial::zero(F);
    Polynomial t0 = Polynomial::zero(F), t1 = Polynomial::one(F);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Polynomial s = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s);
        Polynomial t = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Scalar c = r0.leading().inv();
    return {Polynomial::constant(c) * r0, Polynomial::constant(c) * s0, Polynomial::constant(c) * t0};
}

Polynomial poly_powmod(const Polynomial& base, const Int& e, const Polynomial& m) {
    if (m.degree() < 1) throw DivisionByZeroError("modulus must be nonconstant");
    Polynomial acc = Polynomial::one(base.field());
    Polynomial b = base % m;
    Int k = e;
    while (k > 0) {
        if (bit_test(k, 0)) acc = (acc * b) % m;
        b = (b * b) % m;
        k >>= 1;
    }
    return acc;
}

bool is_squarefree(const Polynomial& f) {
    if (f.degree() < 1) return true;
    return poly_gcd(f, f.derivative()).degree() == 0;
}

int compare_polynomials(const Polynomial& f, const Polynomial& g) {
    if (f.degree() != g.degree()) return f.degree() < g.degree() ? -1 : 1;
    for (int i = 0; i <= f.degree(); ++i)
        if (int c = compare_scalars(f.coeff(i), g.coeff(i))) return c;
    return 0;
}

Scalar trace_of(const Polynomial& f) {
    if (!f.is_monic() || f.degree() < 1) throw NotMonicError("trace needs a monic polynomial of degree >= 1");
    return -f.coeff(f.degree() - 1);
}

std::vector<std::pair<Int, int>> factor_integer(Int n) {
    if (n < 1) throw Error("factor_integer expects n >= 1");
    std::vector<std::pair<Int, int>> out;
    for (Int q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            int e = 0;
            while (n % q == 0) {
                n /= q;
                ++e;
            }
            out.emplace_back(q, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::int64_t moebius(std::int64_t n) {
    if (n < 1) throw Error("moebius expects n >= 1");
    auto fs = factor_integer(Int(n));
    for (const auto& [q, e] : fs)
        if (e > 1) return 0;
    return fs.size() % 2 == 0 ? 1 : -1;
}

std::int64_t euler_phi(std::int64_t n) {
    if (n < 1) throw Error("euler_phi expects n >= 1");
    Int r = n;
    for (const auto& [q, e] : factor_integer(Int(n))) r = r / q * (q - 1);
    return static_cast<std::int64_t>(r);
}

std::int64_t lcm_i64(std::int64_t a, std::int64_t b) {
    Int l = boost::multiprecision::lcm(Int(a), Int(b));
    if (l > std::numeric_limits<std::int64_t>::max())
        throw Error("order overflows the supported range");
    return static_cast<std::int64_t>(l);
}

Polynomial cyclotomic(std::int64_t d) {
    static std::map<std::int64_t, Polynomial> cache;
    static std::mutex mu;
    if (d < 1) throw Error("cyclotomic index must be >= 1");
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(d);
        if (it != cache.end()) return it->second;
    }
    const FieldDescriptor Q = FieldDescriptor::rationals();
    Polynomial num = Polynomial::x_pow_minus_one(Q, d);
    for (std::int64_t e = 1; e < d; ++e) {
        if (d % e == 0) num = num / cyclotomic(e);
    }
    {
        std::lock_guard<std::mutex> lock(mu);
        cache.emplace(d, num);
    }
    return num;
}

Polynomial cyclotomic_in(const FieldDescriptor& f, std::int64_t d) {
    Polynomial phi = cyclotomic(d);
    std::vector<Scalar> cs;
    cs.reserve(phi.degree() + 1);
    for (int i = 0; i <= phi.degree(); ++i) cs.push_back(Scalar::from_rat(f, phi.coeff(i).a()));
    return Polynomial(f, std::move(cs));
}

std::vector<std::int64_t> cyclotomic_indices_up_to_degree(std::int64_t deg) {
    std::vector<std::int64_t> out;
    if (deg < 1) return out;
    // euler_phi(d) >= sqrt(d/2), so every index with phi(d) <= deg satisfies d <= 2*deg^2
    for (std::int64_t d = 1; d <= 2 * deg * deg; ++d)
        if (euler_phi(d) <= deg) out.push_back(d);
    return out;
}

std::vector<std::int64_t> cyclotomic_indices_of_degree(std::int64_t deg) {
    std::vector<std::int64_t> out;
    for (std::int64_t d : cyclotomic_indices_up_to_degree(deg))
        if (euler_phi(d) == deg) out.push_back(d);
    return out;
}

// -------- torsion order --------

namespace {

std::optional<std::int64_t> torsion_order_char0(const Polynomial& f, std::int64_t bound) {
    if (!f.coeff(0).is_zero()) {
        // incremental x^r mod f
        Polynomial x = Polynomial::x_power(f.field(), 1);
        Polynomial cur = x % f;
        Polynomial one = Polynomial::one(f.field());
        for (std::int64_t r = 1; r <= bound; ++r) {
            if (cur == one) return r;
            cur = (cur * x) % f;
        }
    }
    return std::nullopt;
}

// order of x in F_p[x]/(g), g irreducible with g(0) != 0
Int order_mod_irreducible(const Polynomial& g, std::int64_t p) {
    Int m = boost::multiprecision::pow(Int(p), unsigned(g.degree())) - 1;
    Polynomial x = Polynomial::x_power(g.field(), 1);
    for (const auto& [q, e] : factor_integer(m)) {
        for (int i = 0; i < e; ++i) {
            if (m % q != 0) break;
            if (poly_powmod(x, m / q, g).is_one())
                m /= q;
            else
                break;
        }
    }
    return m;
}

std::optional<std::int64_t> torsion_order_fp(const Polynomial& f) {
    if (f.coeff(0).is_zero()) return std::nullopt;
    std::int64_t p = f.field().p();
    auto factors = factor_fp(f);
    Int s = 1;
    int max_e = 1;
    for (const auto& [g, e] : factors) {
        s = boost::multiprecision::lcm(s, order_mod_irreducible(g, p));
        max_e = std::max(max_e, e);
    }
    // p^ceil(log_p max_e): the least power of p at or above the largest multiplicity
    Int t = 1;
    while (t < max_e) t *= p;
    s *= t;
    if (s > std::numeric_limits<std::int64_t>::max()) throw Error("torsion order overflows");
    return static_cast<std::int64_t>(s);
}

}  // namespace

std::optional<std::int64_t> torsion_order_poly(const Polynomial& f, std::optional<std::int64_t> bound) {
    if (!f.is_monic() || f.degree() < 1)
        throw NotMonicError("torsion_order_poly needs a monic polynomial of degree >= 1");
    if (f.field().kind() == FieldKind::Prime) return torsion_order_fp(f);
    std::int64_t deg = f.degree();
    return torsion_order_char0(f, bound.value_or(2 * deg * deg));
}

// -------- factorization over F_p --------

namespace {

Polynomial pth_root(const Polynomial& f) {
    // over the prime field, f = g(x^p) implies g has the same coefficients
    std::int64_t p = f.field().p();
    std::vector<Scalar> cs;
    for (int i = 0; i <= f.degree(); i += int(p)) cs.push_back(f.coeff(i));
    return Polynomial(f.field(), std::move(cs));
}

void squarefree_decompose(const Polynomial& f, int outer_mult,
                          std::vector<std::pair<Polynomial, int>>& parts) {
    std::int64_t p = f.field().p();
    Polynomial d = f.derivative();
    if (d.is_zero()) {
        squarefree_decompose(pth_root(f), outer_mult * int(p), parts);
        return;
    }
    Polynomial c = poly_gcd(f, d);
    Polynomial w = f / c;
    int i = 1;
    while (!w.is_one()) {
        Polynomial y = poly_gcd(w, c);
        Polynomial fac = w / y;
        if (!fac.is_one()) parts.emplace_back(fac, i * outer_mult);
        w = std::move(y);
        c = c / w;
        ++i;
    }
    if (!c.is_one()) squarefree_decompose(pth_root(c), outer_mult * int(p), parts);
}

Polynomial random_poly_below(const FieldDescriptor& F, int deg, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> dist(0, F.p() - 1);
    std::vector<Scalar> cs;
    for (int i = 0; i < deg; ++i) cs.push_back(Scalar::from_int(F, dist(rng)));
    return Polynomial(F, std::move(cs));
}

// h: squarefree product of irreducibles all of degree d
void equal_degree_split(const Polynomial& h, int d, std::mt19937_64& rng,
                        std::vector<Polynomial>& out) {
    if (h.degree() == d) {
        out.push_back(h);
        return;
    }
    const FieldDescriptor& F = h.field();
    std::int64_t p = F.p();
    while (true) {
        Polynomial a = random_poly_below(F, h.degree(), rng);
        if (a.degree() < 1) continue;
        Polynomial g = poly_gcd(a, h);
        if (g.degree() == 0) {
            if (p == 2) {
                // trace map a + a^2 + a^4 + ... over F_2
                Polynomial t = a % h, c = a % h;
                for (int j = 1; j < d; ++j) {
                    c = (c * c) % h;
                    t = t + c;
                }
                g = poly_gcd(t, h);
            } else {
                Int e = (boost::multiprecision::pow(Int(p), unsigned(d)) - 1) / 2;
                Polynomial b = poly_powmod(a, e, h);
                g = poly_gcd(b - Polynomial::one(F), h);
            }
        }
        if (g.degree() > 0 && g.degree() < h.degree()) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split(h / g, d, rng, out);
            return;
        }
    }
}

void distinct_degree_factor(Polynomial g, std::mt19937_64& rng,
                            std::vector<Polynomial>& irreducibles) {
    const FieldDescriptor& F = g.field();
    std::int64_t p = F.p();
    Polynomial x = Polynomial::x_power(F, 1);
    Polynomial h = x % g;
    int d = 0;
    while (g.degree() >= 2 * (d + 1)) {
        ++d;
        h = poly_powmod(h, Int(p), g);
        Polynomial gd = poly_gcd(h - x, g);
        if (gd.degree() > 0) {
            equal_degree_split(gd, d, rng, irreducibles);
            g = g / gd;
            h = h % g;
        }
    }
    if (g.degree() > 0) irreducibles.push_back(g);
}

}  // namespace

std::vector<std::pair<Polynomial, int>> factor_fp(const Polynomial& f, std::uint64_t seed) {
    if (f.field().kind() != FieldKind::Prime) throw FieldMismatchError("factor_fp needs a prime field");
    if (!f.is_monic() || f.degree() < 1)
        throw NotMonicError("factor_fp needs a monic polynomial of degree >= 1");
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);

    std::vector<std::pair<Polynomial, int>> squarefree_parts;
    squarefree_decompose(f, 1, squarefree_parts);

    std::map<std::string, std::pair<Polynomial, int>> acc;
    for (const auto& [part, mult] : squarefree_parts) {
        std::vector<Polynomial> irr;
        distinct_degree_factor(part, rng, irr);
        for (const auto& g : irr) {
            auto it = acc.find(g.str());
            if (it == acc.end())
                acc.emplace(g.str(), std::make_pair(g, mult));
            else
                it->second.second += mult;
        }
    }
    std::vector<std::pair<Polynomial, int>> out;
    out.reserve(acc.size());
    for (auto& [key, val] : acc) out.push_back(std::move(val));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return compare_polynomials(a.first, b.first) < 0;
    });
    return out;
}

UnitySplit unity_split(const Polynomial& f) {
    if (f.field().kind() == FieldKind::Prime)
        throw FieldMismatchError("unity_split is defined over characteristic-zero fields");
    if (!f.is_monic()) throw NotMonicError("unity_split needs a monic polynomial");
    UnitySplit res{0, {}, f};
    std::int64_t original_degree = f.degree();
    Polynomial x = Polynomial::x_power(f.field(), 1);
    while (res.rest.degree() >= 1 && res.rest.coeff(0).is_zero()) {
        res.rest = res.rest / x;
        ++res.x_power;
    }
    for (std::int64_t d : cyclotomic_indices_up_to_degree(original_degree)) {
        if (euler_phi(d) > res.rest.degree()) continue;
        Polynomial phi = cyclotomic_in(f.field(), d);
        while (res.rest.degree() >= phi.degree() && (res.rest % phi).is_zero()) {
            res.rest = res.rest / phi;
            ++res.cyclo[d];
        }
    }
    return res;
}

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (coeffs_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || !coeffs_[i].is_one()) {
            os << "(" << coeffs_[i].str() << ")";
            if (i > 0) os << "*";
        }
        if (i == 1)
            os << "x";
        else if (i > 1)
            os << "x^" << i;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

}  // namespace permat
