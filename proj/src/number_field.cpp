#include "splitcubic/number_field.hpp"

#include "splitcubic/errors.hpp"

#include <algorithm>
#include <set>

namespace splitcubic {

namespace {

using Poly = std::vector<Rational>;  // dense, low to high

void trim(Poly& p)
{
    while (!p.empty() && is_zero(p.back()))
        p.pop_back();
}

// Quotient and remainder of a by b (b nonzero, trimmed) in Q[t].
std::pair<Poly, Poly> divmod(Poly a, const Poly& b)
{
    trim(a);
    Poly q;
    if (a.size() >= b.size())
        q.assign(a.size() - b.size() + 1, Rational(0));
    while (!a.empty() && a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        Rational factor = a.back() / b.back();
        q[shift] = factor;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] -= factor * b[i];
        a.pop_back();
        trim(a);
    }
    trim(q);
    return {q, a};
}

Poly poly_sub_mul(const Poly& a, const Poly& q, const Poly& b)
{
    // a - q*b
    Poly out = a;
    if (!q.empty() && !b.empty()) {
        if (out.size() < q.size() + b.size() - 1)
            out.resize(q.size() + b.size() - 1, Rational(0));
        for (std::size_t i = 0; i < q.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                out[i + j] -= q[i] * b[j];
    }
    trim(out);
    return out;
}

Poly pad(Poly p, std::size_t n)
{
    p.resize(n, Rational(0));
    return p;
}

}  // namespace

// ---------------------------------------------------------------- NumberField

NumberField::NumberField(std::vector<Rational> modulus, std::string label,
                         std::map<std::string, std::vector<Rational>, std::less<>> constants)
    : modulus_(std::move(modulus)), label_(std::move(label)), constants_(std::move(constants))
{
    if (modulus_.size() < 2)
        throw Error(ErrorCode::InvalidArgument, "modulus must have degree >= 1");
    if (modulus_.back() != 1)
        throw Error(ErrorCode::InvalidArgument, "modulus must be monic");
    for (auto& [name, c] : constants_) {
        if (c.size() > degree())
            throw Error(ErrorCode::InvalidArgument, "constant '" + name + "' is not reduced");
        c.resize(degree(), Rational(0));
    }
}

std::shared_ptr<const NumberField> NumberField::rationals()
{
    static const auto field = std::make_shared<const NumberField>(Poly{-1, 1}, "Q");
    return field;
}

std::shared_ptr<const NumberField> NumberField::eisenstein()
{
    static const auto field = std::make_shared<const NumberField>(
        Poly{1, 1, 1}, "Q(zeta3)",
        std::map<std::string, Poly, std::less<>>{{"omega", {0, 1}}, {"sqrt-3", {1, 2}}});
    return field;
}

std::shared_ptr<const NumberField> NumberField::cyclotomic12()
{
    // t = zeta12, t^4 = t^2 - 1, t^-1 = t - t^3.
    static const auto field = std::make_shared<const NumberField>(
        Poly{1, 0, -1, 0, 1}, "Q(zeta12)",
        std::map<std::string, Poly, std::less<>>{
            {"omega", {-1, 0, 1, 0}},
            {"sqrt3", {0, 2, 0, -1}},
            {"sqrt-3", {-1, 0, 2, 0}},
            {"i", {0, 0, 0, 1}},
        });
    return field;
}

std::shared_ptr<const NumberField> NumberField::preset(std::string_view name)
{
    if (name == "Q")
        return rationals();
    if (name == "Qzeta3" || name == "Q(zeta3)")
        return eisenstein();
    if (name == "Qzeta12" || name == "Q(zeta12)")
        return cyclotomic12();
    throw Error(ErrorCode::ParseError, "unknown field preset '" + std::string(name) + "'");
}

const std::vector<Rational>* NumberField::constant(std::string_view name) const
{
    auto it = constants_.find(name);
    return it == constants_.end() ? nullptr : &it->second;
}

bool NumberField::same_as(const NumberField& other) const
{
    return this == &other || (label_ == other.label_ && modulus_ == other.modulus_);
}

void require_same_field(const FieldPtr& a, const FieldPtr& b)
{
    if (a != b && !a->same_as(*b))
        throw Error(ErrorCode::MixedField, a->label() + " vs " + b->label());
}

// --------------------------------------------------------------- FieldElement

FieldElement::FieldElement(FieldPtr field, const Rational& value) : field_(std::move(field))
{
    coeffs_.assign(field_->degree(), Rational(0));
    coeffs_[0] = value;
}

FieldElement::FieldElement(FieldPtr field, std::vector<Rational> coefficients) : field_(std::move(field))
{
    const std::size_t n = field_->degree();
    if (coefficients.size() > n) {
        auto [q, r] = divmod(std::move(coefficients), field_->modulus());
        coefficients = std::move(r);
    }
    coeffs_ = pad(std::move(coefficients), n);
}

FieldElement FieldElement::generator(FieldPtr field)
{
    return FieldElement(field, Poly{0, 1});
}

FieldElement FieldElement::named(const FieldPtr& field, std::string_view name)
{
    if (const auto* c = field->constant(name))
        return FieldElement(field, *c);
    throw Error(ErrorCode::FieldTooSmall, field->label() + " has no constant '" + std::string(name) + "'");
}

bool FieldElement::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

bool FieldElement::is_one() const
{
    if (coeffs_[0] != 1)
        return false;
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

bool FieldElement::is_rational() const
{
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

Rational FieldElement::rational_value() const
{
    if (!is_rational())
        throw Error(ErrorCode::InvalidArgument, "element " + to_string() + " is not rational");
    return coeffs_[0];
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs)
{
    require_same_field(field_, rhs.field_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs)
{
    require_same_field(field_, rhs.field_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs)
{
    require_same_field(field_, rhs.field_);
    const std::size_t n = coeffs_.size();
    if (n == 1) {
        coeffs_[0] *= rhs.coeffs_[0];
        return *this;
    }
    Poly prod(2 * n - 1, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(coeffs_[i]) == 0)
            continue;
        for (std::size_t j = 0; j < n; ++j)
            if (sgn(rhs.coeffs_[j]) != 0)
                prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    const auto& m = field_->modulus();
    for (std::size_t k = 2 * n - 2; k >= n; --k) {
        if (sgn(prod[k]) == 0)
            continue;
        const Rational c = prod[k];
        for (std::size_t i = 0; i < n; ++i)
            if (sgn(m[i]) != 0)
                prod[k - n + i] -= c * m[i];
    }
    prod.resize(n);
    coeffs_ = std::move(prod);
    return *this;
}

FieldElement& FieldElement::operator*=(const Rational& rhs)
{
    for (auto& c : coeffs_)
        c *= rhs;
    return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs)
{
    return *this *= nf_inv(rhs);
}

FieldElement FieldElement::operator-() const
{
    FieldElement out = *this;
    for (auto& c : out.coeffs_)
        c = -c;
    return out;
}

FieldElement FieldElement::pow(unsigned exponent) const
{
    FieldElement result(field_, Rational(1));
    FieldElement base = *this;
    while (exponent > 0) {
        if (exponent & 1u)
            result *= base;
        exponent >>= 1u;
        if (exponent > 0)
            base *= base;
    }
    return result;
}

FieldElement FieldElement::inverse() const { return nf_inv(*this); }

bool operator==(const FieldElement& a, const FieldElement& b)
{
    require_same_field(a.field_, b.field_);
    return a.coeffs_ == b.coeffs_;
}

bool operator<(const FieldElement& a, const FieldElement& b)
{
    for (std::size_t i = 0; i < a.coeffs_.size() && i < b.coeffs_.size(); ++i) {
        const int c = cmp(a.coeffs_[i], b.coeffs_[i]);
        if (c != 0)
            return c < 0;
    }
    return a.coeffs_.size() < b.coeffs_.size();
}

std::string FieldElement::to_string(std::string_view var) const
{
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (sgn(c) == 0)
            continue;
        Rational mag = abs(c);
        std::string term;
        if (i == 0 || mag != 1)
            term = splitcubic::to_string(mag);
        if (i > 0) {
            if (!term.empty())
                term += "*";
            term += std::string(var);
            if (i > 1)
                term += "^" + std::to_string(i);
        }
        if (out.empty())
            out = (sgn(c) < 0 ? "-" : "") + term;
        else
            out += (sgn(c) < 0 ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

// ------------------------------------------------------------------ inverse

FieldElement nf_inv(const FieldElement& x)
{
    if (x.is_zero())
        throw Error(ErrorCode::ZeroInverse, "inverse of zero");
    const auto& field = x.field();
    // Extended Euclid: maintain s_i with s_i * x == r_i (mod m).
    Poly r0 = field->modulus();
    Poly r1 = x.coefficients();
    trim(r1);
    Poly s0;
    Poly s1{Rational(1)};
    while (r1.size() > 1) {
        auto [q, r] = divmod(r0, r1);
        Poly s = poly_sub_mul(s0, q, s1);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r1.empty()) {
        // x shares a non-constant factor (r0) with the modulus
        throw Error(ErrorCode::NotInvertible,
                    "gcd with modulus of " + field->label() + " is non-constant");
    }
    Rational inv_lead = 1 / r1[0];
    for (auto& c : s1)
        c *= inv_lead;
    return FieldElement(field, std::move(s1));
}

FieldElement embed(const FieldElement& x, const FieldPtr& target)
{
    return FieldElement(target, x.rational_value());
}

// --------------------------------------------------------------- pure roots

namespace {

Integer mod_of(const Integer& v, const Integer& modulus)
{
    Integer r;
    mpz_mod(r.get_mpz_t(), v.get_mpz_t(), modulus.get_mpz_t());
    return r;
}

Integer inverse_mod(const Integer& v, const Integer& modulus)
{
    Integer r;
    if (mpz_invert(r.get_mpz_t(), v.get_mpz_t(), modulus.get_mpz_t()) == 0)
        throw Error(ErrorCode::NotInvertible, "no modular inverse");
    return r;
}

Integer rational_mod(const Rational& q, const Integer& modulus)
{
    return mod_of(q.get_num() * inverse_mod(q.get_den(), modulus), modulus);
}

Integer eval_mod(const std::vector<Integer>& poly, const Integer& x, const Integer& modulus)
{
    Integer acc = 0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it)
        acc = mod_of(acc * x + *it, modulus);
    return acc;
}

Integer power_mod(const Integer& base, unsigned e, const Integer& modulus)
{
    Integer r;
    mpz_powm_ui(r.get_mpz_t(), base.get_mpz_t(), e, modulus.get_mpz_t());
    return r;
}

// Newton lift of a simple root of f from mod p to mod `modulus`.
Integer hensel_lift(const std::vector<Integer>& f, Integer root, const Integer& modulus)
{
    std::vector<Integer> df;
    for (std::size_t i = 1; i < f.size(); ++i)
        df.push_back(f[i] * static_cast<unsigned long>(i));
    for (int guard = 0; guard < 4096; ++guard) {
        Integer value = eval_mod(f, root, modulus);
        if (value == 0)
            return root;
        root = mod_of(root - value * inverse_mod(eval_mod(df, root, modulus), modulus), modulus);
    }
    throw Error(ErrorCode::VerificationFailed, "Hensel lifting did not converge");
}

// Smallest (in absolute value) fraction congruent to u modulo N, if one
// exists with numerator and denominator below sqrt(N/2).
std::optional<Rational> rational_reconstruct(const Integer& u, const Integer& N)
{
    Integer bound;
    Integer half = N / 2;
    mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
    Integer r0 = N, r1 = mod_of(u, N);
    Integer s0 = 0, s1 = 1;
    while (r1 > bound) {
        Integer q = r0 / r1;
        Integer r2 = r0 - q * r1;
        Integer s2 = s0 - q * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    if (s1 == 0 || abs(s1) > bound)
        return std::nullopt;
    Integer g;
    mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), s1.get_mpz_t());
    if (g != 1)
        return std::nullopt;
    Rational out(r1, s1);
    out.canonicalize();
    return out;
}

struct SplitPrime {
    unsigned long p = 0;
    std::vector<unsigned long> modulus_roots;  // the n distinct roots of m mod p
};

bool is_prime(unsigned long n)
{
    if (n < 2)
        return false;
    for (unsigned long f = 2; f * f <= n; ++f)
        if (n % f == 0)
            return false;
    return true;
}

// A prime p not dividing the denominators or d, at which m splits into
// distinct linear factors and `a` is a unit at every root.
std::optional<SplitPrime> find_split_prime(const FieldElement& a, unsigned d, unsigned long start)
{
    const auto& m = a.field()->modulus();
    const std::size_t n = a.field()->degree();
    Integer denominators = 1;
    for (const auto& c : m)
        denominators *= c.get_den();
    for (const auto& c : a.coefficients())
        denominators *= c.get_den();

    for (unsigned long p = start; p < 200000; ++p) {
        if (!is_prime(p) || p % d == 0 || mpz_divisible_ui_p(denominators.get_mpz_t(), p))
            continue;
        const Integer P(p);
        std::vector<Integer> mp;
        for (const auto& c : m)
            mp.push_back(rational_mod(c, P));
        SplitPrime sp{p, {}};
        for (unsigned long x = 0; x < p && sp.modulus_roots.size() <= n; ++x)
            if (eval_mod(mp, Integer(x), P) == 0)
                sp.modulus_roots.push_back(x);
        if (sp.modulus_roots.size() != n)
            continue;
        // distinct roots of a degree-n polynomial: need m'(root) != 0 mod p
        bool good = true;
        std::vector<Integer> ap;
        for (const auto& c : a.coefficients())
            ap.push_back(rational_mod(c, P));
        for (auto root : sp.modulus_roots) {
            std::vector<Integer> dm;
            for (std::size_t i = 1; i < mp.size(); ++i)
                dm.push_back(mp[i] * static_cast<unsigned long>(i));
            if (eval_mod(dm, Integer(root), P) == 0 || eval_mod(ap, Integer(root), P) == 0) {
                good = false;
                break;
            }
        }
        if (good)
            return sp;
    }
    return std::nullopt;
}

// Solves V r = s (mod N) where V[k][i] = t_k^i is invertible mod p.
std::vector<Integer> solve_vandermonde(const std::vector<Integer>& nodes, std::vector<Integer> rhs,
                                       const Integer& N, const Integer& p)
{
    const std::size_t n = nodes.size();
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n + 1));
    for (std::size_t k = 0; k < n; ++k) {
        Integer power = 1;
        for (std::size_t i = 0; i < n; ++i) {
            a[k][i] = power;
            power = mod_of(power * nodes[k], N);
        }
        a[k][n] = rhs[k];
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && mod_of(a[piv][col], p) == 0)
            ++piv;
        if (piv == n)
            throw Error(ErrorCode::NotInvertible, "Vandermonde system singular mod p");
        std::swap(a[piv], a[col]);
        Integer inv = inverse_mod(a[col][col], N);
        for (auto& v : a[col])
            v = mod_of(v * inv, N);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0)
                continue;
            Integer f = a[r][col];
            for (std::size_t c = col; c <= n; ++c)
                a[r][c] = mod_of(a[r][c] - f * a[col][c], N);
        }
    }
    std::vector<Integer> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = a[i][n];
    return out;
}

}  // namespace

std::vector<FieldElement> pure_roots(const FieldElement& a, unsigned d)
{
    if (d == 0)
        throw Error(ErrorCode::InvalidArgument, "root degree must be >= 1");
    if (a.is_zero())
        return {a};
    if (d == 1)
        return {a};

    const auto& field = a.field();
    const std::size_t n = field->degree();
    auto prime = find_split_prime(a, d, 5);
    if (!prime)
        throw Error(ErrorCode::Unsupported, "no split prime found for " + field->label());

    const Integer p(prime->p);
    std::vector<Integer> a_poly;
    for (const auto& c : a.coefficients())
        a_poly.push_back(rational_mod(c, p));

    // d-th roots of a at each embedding, mod p
    std::vector<std::vector<unsigned long>> local(n);
    for (std::size_t k = 0; k < n; ++k) {
        const Integer ak = eval_mod(a_poly, Integer(prime->modulus_roots[k]), p);
        for (unsigned long r = 1; r < prime->p; ++r)
            if (power_mod(Integer(r), d, p) == ak)
                local[k].push_back(r);
        if (local[k].empty())
            return {};  // not even a local d-th power
    }

    std::set<std::vector<Rational>> found;
    const auto& m = field->modulus();

    // start around 128 bits of p-adic precision and double until a root verifies
    const std::size_t p_bits = mpz_sizeinbase(p.get_mpz_t(), 2);
    unsigned exponent = static_cast<unsigned>(128 / p_bits + 1);
    bool extra_round_done = false;
    for (; p_bits * exponent <= 8192; exponent *= 2) {
        Integer N;
        mpz_pow_ui(N.get_mpz_t(), p.get_mpz_t(), exponent);
        std::vector<Integer> mN;
        for (const auto& c : m)
            mN.push_back(rational_mod(c, N));
        std::vector<Integer> aN;
        for (const auto& c : a.coefficients())
            aN.push_back(rational_mod(c, N));

        std::vector<Integer> nodes(n);
        std::vector<std::vector<Integer>> lifted(n);
        for (std::size_t k = 0; k < n; ++k) {
            nodes[k] = hensel_lift(mN, Integer(prime->modulus_roots[k]), N);
            const Integer ak = eval_mod(aN, nodes[k], N);
            std::vector<Integer> f(d + 1, Integer(0));
            f[0] = mod_of(-ak, N);
            f[d] = 1;
            for (auto r : local[k])
                lifted[k].push_back(hensel_lift(f, Integer(r), N));
        }

        // enumerate one local root per embedding
        std::vector<std::size_t> choice(n, 0);
        while (true) {
            std::vector<Integer> rhs(n);
            for (std::size_t k = 0; k < n; ++k)
                rhs[k] = lifted[k][choice[k]];
            auto coeffs = solve_vandermonde(nodes, rhs, N, p);
            std::vector<Rational> candidate;
            bool ok = true;
            for (const auto& c : coeffs) {
                auto q = rational_reconstruct(c, N);
                if (!q) {
                    ok = false;
                    break;
                }
                candidate.push_back(*q);
            }
            if (ok) {
                FieldElement rho(field, candidate);
                if (rho.pow(d) == a)
                    found.insert(rho.coefficients());
            }
            std::size_t k = 0;
            while (k < n && ++choice[k] == lifted[k].size()) {
                choice[k] = 0;
                ++k;
            }
            if (k == n)
                break;
        }
        if (!found.empty()) {
            // one more doubling so that roots of larger height are not missed
            if (extra_round_done)
                break;
            extra_round_done = true;
        }
    }

    std::vector<FieldElement> out;
    for (const auto& c : found)
        out.emplace_back(field, c);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<FieldElement> roots_of_unity(const FieldPtr& field, unsigned d)
{
    return pure_roots(FieldElement(field, Rational(1)), d);
}

FieldElement omega(const FieldPtr& field)
{
    if (field->constant("omega"))
        return FieldElement::named(field, "omega");
    for (const auto& z : roots_of_unity(field, 3))
        if (!z.is_one())
            return z;
    throw Error(ErrorCode::FieldTooSmall, field->label() + " does not contain a primitive cube root of unity");
}

}  // namespace splitcubic
