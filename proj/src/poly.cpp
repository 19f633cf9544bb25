#include "knotorder/poly.hpp"

#include <algorithm>
#include <sstream>

namespace knotorder {

Rat rat_pow(const Rat& x, long e) {
    if (e == 0) return Rat(1);
    if (x == 0) {
        if (e < 0) throw DivisionByZeroError();
        return Rat(0);
    }
    const unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    Int num, den;
    mpz_pow_ui(num.get_mpz_t(), x.get_num().get_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), x.get_den().get_mpz_t(), k);
    Rat r;
    if (e > 0) {
        r = Rat(num, den);
    } else {
        r = Rat(den, num);
    }
    r.canonicalize();
    return r;
}

std::string format_decimal(const Rat& x, int decimals) {
    const bool negative = sgn(x) < 0;
    Rat y = abs(x);
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(decimals));
    // round(|x| * 10^d) with ties away from zero
    Int num = y.get_num() * scale;
    Int den = y.get_den();
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (2 * r >= den) q += 1;
    std::string digits = q.get_str();
    if (static_cast<int>(digits.size()) <= decimals) {
        digits.insert(0, static_cast<size_t>(decimals) + 1 - digits.size(), '0');
    }
    const size_t point = digits.size() - static_cast<size_t>(decimals);
    std::string out = digits.substr(0, point);
    if (decimals > 0) out += "." + digits.substr(point);
    if (negative && q != 0) out.insert(0, "-");
    return out;
}

// --- LaurentPolynomial ------------------------------------------------------

void LaurentPolynomial::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0) {
            it = terms_.erase(it);
        } else {
            ++it;
        }
    }
}

LaurentPolynomial LaurentPolynomial::constant(Int c) {
    return monomial(0, std::move(c));
}

LaurentPolynomial LaurentPolynomial::monomial(long exponent, Int coefficient) {
    LaurentPolynomial p;
    if (coefficient != 0) p.terms_.emplace(exponent, std::move(coefficient));
    return p;
}

LaurentPolynomial LaurentPolynomial::from_terms(std::map<long, Int> terms) {
    LaurentPolynomial p;
    p.terms_ = std::move(terms);
    p.prune();
    return p;
}

Int LaurentPolynomial::coefficient(long exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Int(0) : it->second;
}

long LaurentPolynomial::min_exponent() const {
    if (is_zero()) throw ZeroPolynomialError();
    return terms_.begin()->first;
}

long LaurentPolynomial::max_exponent() const {
    if (is_zero()) throw ZeroPolynomialError();
    return terms_.rbegin()->first;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& other) const {
    LaurentPolynomial out = *this;
    for (const auto& [e, c] : other.terms_) out.terms_[e] += c;
    out.prune();
    return out;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& other) const {
    LaurentPolynomial out = *this;
    for (const auto& [e, c] : other.terms_) out.terms_[e] -= c;
    out.prune();
    return out;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& other) const {
    LaurentPolynomial out;
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : other.terms_) {
            out.terms_[e1 + e2] += c1 * c2;
        }
    }
    out.prune();
    return out;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

Rat LaurentPolynomial::evaluate(const Rat& x) const {
    if (is_zero()) return Rat(0);
    const long lo = min_exponent();
    const long hi = max_exponent();
    if (x == 0) {
        if (lo < 0) throw DivisionByZeroError();
        return Rat(coefficient(0));
    }
    // Horner over the full exponent range, then scale by x^lo.
    Rat acc(0);
    for (long e = hi; e >= lo; --e) {
        acc *= x;
        auto it = terms_.find(e);
        if (it != terms_.end()) acc += Rat(it->second);
    }
    return acc * rat_pow(x, lo);
}

namespace {

void append_term(std::string& out, long exponent, const Int& coeff) {
    const bool first = out.empty();
    const bool negative = sgn(coeff) < 0;
    Int mag = abs(coeff);
    if (first) {
        if (negative) out += "-";
    } else {
        out += negative ? " - " : " + ";
    }
    if (exponent == 0) {
        out += mag.get_str();
        return;
    }
    if (mag != 1) out += mag.get_str();
    out += "t";
    if (exponent != 1) out += "^" + std::to_string(exponent);
}

}  // namespace

std::string LaurentPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) append_term(out, e, c);
    return out;
}

// --- DensePolynomial --------------------------------------------------------

void DensePolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

DensePolynomial::DensePolynomial(std::vector<Int> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
}

DensePolynomial DensePolynomial::from_coefficients(std::initializer_list<long> coefficients) {
    std::vector<Int> c;
    c.reserve(coefficients.size());
    for (long v : coefficients) c.emplace_back(v);
    return DensePolynomial(std::move(c));
}

const Int& DensePolynomial::leading_coefficient() const {
    if (is_zero()) throw ZeroPolynomialError();
    return coeffs_.back();
}

Int DensePolynomial::coefficient(size_t exponent) const {
    return exponent < coeffs_.size() ? coeffs_[exponent] : Int(0);
}

DensePolynomial DensePolynomial::operator+(const DensePolynomial& other) const {
    std::vector<Int> out(std::max(coeffs_.size(), other.coeffs_.size()), Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (size_t i = 0; i < other.coeffs_.size(); ++i) out[i] += other.coeffs_[i];
    return DensePolynomial(std::move(out));
}

DensePolynomial DensePolynomial::operator-(const DensePolynomial& other) const {
    std::vector<Int> out(std::max(coeffs_.size(), other.coeffs_.size()), Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (size_t i = 0; i < other.coeffs_.size(); ++i) out[i] -= other.coeffs_[i];
    return DensePolynomial(std::move(out));
}

DensePolynomial DensePolynomial::operator*(const DensePolynomial& other) const {
    if (is_zero() || other.is_zero()) return DensePolynomial();
    std::vector<Int> out(coeffs_.size() + other.coeffs_.size() - 1, Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        for (size_t j = 0; j < other.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * other.coeffs_[j];
        }
    }
    return DensePolynomial(std::move(out));
}

DensePolynomial DensePolynomial::operator-() const {
    std::vector<Int> out = coeffs_;
    for (auto& c : out) c = -c;
    return DensePolynomial(std::move(out));
}

DensePolynomial DensePolynomial::operator*(const Int& scalar) const {
    std::vector<Int> out = coeffs_;
    for (auto& c : out) c *= scalar;
    return DensePolynomial(std::move(out));
}

DensePolynomial DensePolynomial::derivative() const {
    if (coeffs_.size() <= 1) return DensePolynomial();
    std::vector<Int> out(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Int(static_cast<long>(i));
    return DensePolynomial(std::move(out));
}

DensePolynomial DensePolynomial::shifted_up(size_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<Int> out(coeffs_.size() + k, Int(0));
    std::copy(coeffs_.begin(), coeffs_.end(), out.begin() + static_cast<long>(k));
    return DensePolynomial(std::move(out));
}

Rat DensePolynomial::evaluate(const Rat& x) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += Rat(*it);
    }
    return acc;
}

Int DensePolynomial::evaluate_int(const Int& x) const {
    Int acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

int DensePolynomial::sign_at(const Rat& x) const {
    if (is_zero()) return 0;
    // sign of sum a_i n^i d^(deg-i), all integer arithmetic
    const Int& num = x.get_num();
    const Int& den = x.get_den();
    Int acc = coeffs_.back();
    Int den_power(1);
    for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it) {
        den_power *= den;
        acc *= num;
        acc += *it * den_power;
    }
    return sgn(acc);
}

DensePolynomial DensePolynomial::reciprocal() const {
    std::vector<Int> out(coeffs_.rbegin(), coeffs_.rend());
    return DensePolynomial(std::move(out));
}

LaurentPolynomial DensePolynomial::to_laurent(long shift) const {
    std::map<long, Int> terms;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) terms.emplace(static_cast<long>(i) + shift, coeffs_[i]);
    }
    return LaurentPolynomial::from_terms(std::move(terms));
}

std::string DensePolynomial::to_string(const std::string& variable) const {
    std::string s = to_laurent().to_string();
    if (variable != "t") {
        std::string out;
        for (char ch : s) {
            if (ch == 't') {
                out += variable;
            } else {
                out += ch;
            }
        }
        return out;
    }
    return s;
}

// --- helpers ----------------------------------------------------------------

Int content(const DensePolynomial& p) {
    Int g(0);
    for (const auto& c : p.coefficients()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

DensePolynomial primitive_part(const DensePolynomial& p) {
    if (p.is_zero()) return p;
    Int g = content(p);
    if (g == 1) return p;
    std::vector<Int> out = p.coefficients();
    for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return DensePolynomial(std::move(out));
}

namespace {

// Pseudo-remainder scaled by a positive multiple of lc(b): returns r with
// m * a = q * b + r for some m > 0, so sign information is preserved.
DensePolynomial pseudo_remainder_positive(const DensePolynomial& a, const DensePolynomial& b) {
    DensePolynomial r = a;
    const Int& lb = b.leading_coefficient();
    long steps = a.degree() - b.degree() + 1;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const Int lr = r.leading_coefficient();
        const size_t k = static_cast<size_t>(r.degree() - b.degree());
        r = r * lb - b.shifted_up(k) * lr;
        --steps;
    }
    // Total multiplier so far is lb^(d_a - d_b + 1 - steps); bring it to an
    // unambiguous lb^(d_a - d_b + 1), then flip if that multiple is negative.
    bool negative_multiplier = sgn(lb) < 0 && (a.degree() - b.degree() + 1) % 2 != 0;
    if (steps > 0) {
        Int extra;
        mpz_pow_ui(extra.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(steps));
        r = r * extra;
    }
    if (negative_multiplier) r = -r;
    return r;
}

DensePolynomial with_positive_leading(DensePolynomial p) {
    if (!p.is_zero() && sgn(p.leading_coefficient()) < 0) return -p;
    return p;
}

}  // namespace

DensePolynomial poly_gcd(const DensePolynomial& a, const DensePolynomial& b) {
    DensePolynomial u = primitive_part(a);
    DensePolynomial v = primitive_part(b);
    if (u.is_zero()) return with_positive_leading(v);
    if (v.is_zero()) return with_positive_leading(u);
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        DensePolynomial r = primitive_part(pseudo_remainder_positive(u, v));
        u = std::move(v);
        v = std::move(r);
    }
    return with_positive_leading(u);
}

bool RationalDivision::remainder_is_zero() const {
    for (const auto& c : remainder) {
        if (c != 0) return false;
    }
    return true;
}

bool RationalDivision::quotient_is_integral() const {
    for (const auto& c : quotient) {
        if (c.get_den() != 1) return false;
    }
    return true;
}

RationalDivision divide_in_rationals(const DensePolynomial& p, const DensePolynomial& q) {
    if (q.is_zero()) throw ZeroPolynomialError();
    std::vector<Rat> rem;
    rem.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) rem.emplace_back(c);
    const long dq = q.degree();
    std::vector<Rat> quot;
    if (p.degree() >= dq) quot.assign(static_cast<size_t>(p.degree() - dq) + 1, Rat(0));
    const Rat lead(q.leading_coefficient());
    for (long i = p.degree(); i >= dq; --i) {
        Rat c = rem[static_cast<size_t>(i)] / lead;
        if (c == 0) continue;
        quot[static_cast<size_t>(i - dq)] = c;
        for (long j = 0; j <= dq; ++j) {
            rem[static_cast<size_t>(i - dq + j)] -= c * Rat(q.coefficient(static_cast<size_t>(j)));
        }
    }
    if (!rem.empty()) rem.resize(static_cast<size_t>(std::min<long>(p.degree() + 1, dq)) , Rat(0));
    return RationalDivision{std::move(quot), std::move(rem)};
}

DensePolynomial exact_quotient(const DensePolynomial& p, const DensePolynomial& q) {
    RationalDivision d = divide_in_rationals(p, q);
    if (!d.remainder_is_zero() || !d.quotient_is_integral()) {
        throw Error("division expected to be exact is not");
    }
    std::vector<Int> out;
    out.reserve(d.quotient.size());
    for (const auto& c : d.quotient) out.push_back(c.get_num());
    return DensePolynomial(std::move(out));
}

// --- normalization ----------------------------------------------------------

NormalizedPoly normalize(const LaurentPolynomial& p) {
    if (p.is_zero()) throw ZeroPolynomialError();
    const long shift = p.min_exponent();
    std::vector<Int> coeffs(static_cast<size_t>(p.max_exponent() - shift) + 1, Int(0));
    for (const auto& [e, c] : p.terms()) coeffs[static_cast<size_t>(e - shift)] = c;
    DensePolynomial q{std::move(coeffs)};
    int sign = 1;
    if (sgn(q.leading_coefficient()) < 0) {
        sign = -1;
        q = -q;
    }
    return NormalizedPoly{std::move(q), shift, sign};
}

// --- Alexander checks -------------------------------------------------------

bool is_symmetric(const LaurentPolynomial& p) {
    if (p.is_zero()) throw ZeroPolynomialError();
    const auto& c = normalize(p).poly.coefficients();
    const size_t n = c.size();
    bool plain = true, negated = true;
    for (size_t i = 0; i < n; ++i) {
        if (c[i] != c[n - 1 - i]) plain = false;
        if (c[i] != -c[n - 1 - i]) negated = false;
    }
    return plain || negated;
}

std::string to_string(AlexanderViolation v) {
    switch (v) {
        case AlexanderViolation::Delta1NotUnit: return "Delta1NotUnit";
        case AlexanderViolation::NotSymmetric: return "NotSymmetric";
        case AlexanderViolation::NotMonicFibred: return "NotMonicFibred";
    }
    return "?";
}

std::vector<AlexanderViolation> validate_alexander(const LaurentPolynomial& p, bool fibred) {
    if (p.is_zero()) throw ZeroPolynomialError();
    std::vector<AlexanderViolation> out;
    if (abs(p.evaluate(Rat(1))) != 1) out.push_back(AlexanderViolation::Delta1NotUnit);
    if (!is_symmetric(p)) out.push_back(AlexanderViolation::NotSymmetric);
    if (fibred) {
        const auto& c = normalize(p).poly.coefficients();
        if (abs(c.front()) != 1 || abs(c.back()) != 1) {
            out.push_back(AlexanderViolation::NotMonicFibred);
        }
    }
    return out;
}

// --- Laurent division -------------------------------------------------------

LaurentPolynomial exact_divide(const LaurentPolynomial& p, const LaurentPolynomial& q) {
    if (q.is_zero()) throw ZeroPolynomialError();
    if (p.is_zero()) return LaurentPolynomial();
    NormalizedPoly np = normalize(p);
    NormalizedPoly nq = normalize(q);
    RationalDivision d = divide_in_rationals(np.poly, nq.poly);
    if (!d.remainder_is_zero() || !d.quotient_is_integral()) {
        std::map<long, Int> remainder_terms;
        // Remainder reported in the inputs' scale, over a common denominator.
        Int den(1);
        for (const auto& c : d.remainder) den = den * c.get_den() / gcd(den, c.get_den());
        for (size_t i = 0; i < d.remainder.size(); ++i) {
            Int scaled = d.remainder[i].get_num() * (den / d.remainder[i].get_den());
            if (scaled != 0) remainder_terms.emplace(static_cast<long>(i), scaled);
        }
        LaurentPolynomial rem = LaurentPolynomial::from_terms(std::move(remainder_terms));
        std::string text = rem.to_string();
        if (den != 1) text = "(" + text + ")/" + den.get_str();
        throw InexactDivisionError(text);
    }
    std::map<long, Int> terms;
    const long shift = np.shift - nq.shift;
    for (size_t i = 0; i < d.quotient.size(); ++i) {
        if (d.quotient[i] != 0) {
            Int c = d.quotient[i].get_num();
            if (np.sign != nq.sign) c = -c;
            terms.emplace(static_cast<long>(i) + shift, std::move(c));
        }
    }
    return LaurentPolynomial::from_terms(std::move(terms));
}

}  // namespace knotorder
