#include "goppa/galois.hpp"

#include <stdexcept>
#include <string>

namespace goppa {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; static_cast<int64_t>(d) * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::vector<uint64_t> distinct_prime_factors(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// dense coefficient vectors over F_p, length = extension degree
std::vector<int> poly_mul_mod(const std::vector<int>& a, const std::vector<int>& b,
                              const std::vector<int>& mod, int p) {
    const size_t d = mod.size();
    std::vector<int> res(2 * d - 1, 0);
    for (size_t i = 0; i < d; ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < d; ++j) {
            if (b[j] == 0) continue;
            res[i + j] = static_cast<int>((res[i + j] + static_cast<int64_t>(a[i]) * b[j]) % p);
        }
    }
    for (size_t i = res.size(); i-- > d;) {
        int c = res[i];
        if (c == 0) continue;
        res[i] = 0;
        for (size_t j = 0; j < d; ++j) {
            res[i - d + j] = ((res[i - d + j] - c * mod[j]) % p + p) % p;
        }
    }
    res.resize(d);
    return res;
}

std::vector<int> poly_pow_mod(std::vector<int> base, uint64_t n,
                              const std::vector<int>& mod, int p) {
    std::vector<int> acc(mod.size(), 0);
    acc[0] = 1;
    while (n) {
        if (n & 1) acc = poly_mul_mod(acc, base, mod, p);
        base = poly_mul_mod(base, base, mod, p);
        n >>= 1;
    }
    return acc;
}

}  // namespace

Field::Field(int p, int e) : p_(p), e_(e), deg_(2 * e) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime, got " + std::to_string(p));
    if (p % 2 == 0) throw std::invalid_argument("field characteristic must be odd");
    if (e < 1) throw std::invalid_argument("extension degree must be positive");

    uint64_t size = 1;
    for (int i = 0; i < deg_; ++i) {
        size *= static_cast<uint64_t>(p);
        if (size > (1u << 20)) {
            throw std::invalid_argument("field size p^(2e) exceeds the 2^20 guard");
        }
    }
    size_ = static_cast<uint32_t>(size);
    q_ = 1;
    for (int i = 0; i < e_; ++i) q_ *= static_cast<uint32_t>(p);

    modulus_ = find_modulus();
    if (size_ <= (1u << 16)) build_tables();
}

// Lexicographically smallest (constant term first) monic polynomial of
// degree 2e whose root t has multiplicative order exactly p^{2e} - 1 in
// F_p[x]/(f). That order is attainable only when f is irreducible, so the
// single order test covers both irreducibility and primitivity.
std::vector<int> Field::find_modulus() const {
    const uint64_t group = static_cast<uint64_t>(size_) - 1;
    const std::vector<uint64_t> primes = distinct_prime_factors(group);

    std::vector<int> c(deg_, 0);
    std::vector<int> t(deg_, 0);
    t[1] = 1;  // deg_ >= 2 always
    std::vector<int> one(deg_, 0);
    one[0] = 1;

    while (true) {
        if (c[0] != 0) {
            bool ok = poly_pow_mod(t, group, c, p_) == one;
            for (size_t i = 0; ok && i < primes.size(); ++i) {
                ok = poly_pow_mod(t, group / primes[i], c, p_) != one;
            }
            if (ok) return c;
        }
        // next coefficient tuple; c[0] is the most significant position
        int i = deg_ - 1;
        while (i >= 0 && c[i] == p_ - 1) c[i--] = 0;
        if (i < 0) break;
        ++c[i];
    }
    throw std::logic_error("no primitive polynomial found");  // unreachable
}

void Field::build_tables() {
    const uint32_t n = size_ - 1;
    exp_.assign(n, 0);
    log_.assign(size_, 0);
    const uint32_t g = static_cast<uint32_t>(p_);  // encoding of t
    uint32_t cur = 1;
    for (uint32_t k = 0; k < n; ++k) {
        exp_[k] = cur;
        log_[cur] = k;
        cur = mul_basic(cur, g);
    }
    if (cur != 1) throw std::logic_error("generator order mismatch while building tables");
    zech_.assign(n, kZechNone);
    for (uint32_t d = 0; d < n; ++d) {
        uint32_t s = add_basic(1, exp_[d]);
        zech_[d] = s == 0 ? kZechNone : log_[s];
    }
    has_tables_ = true;
}

std::vector<int> Field::coeffs_of(uint32_t enc) const {
    std::vector<int> c(deg_);
    for (int i = 0; i < deg_; ++i) {
        c[i] = static_cast<int>(enc % static_cast<uint32_t>(p_));
        enc /= static_cast<uint32_t>(p_);
    }
    return c;
}

uint32_t Field::add_basic(uint32_t a, uint32_t b) const {
    uint32_t out = 0;
    uint32_t mult = 1;
    for (int i = 0; i < deg_; ++i) {
        uint32_t da = a % p_, db = b % p_;
        a /= p_;
        b /= p_;
        out += ((da + db) % p_) * mult;
        mult *= p_;
    }
    return out;
}

uint32_t Field::mul_basic(uint32_t a, uint32_t b) const {
    std::vector<int> prod = poly_mul_mod(coeffs_of(a), coeffs_of(b), modulus_, p_);
    uint32_t out = 0;
    for (int i = deg_; i-- > 0;) out = out * p_ + static_cast<uint32_t>(prod[i]);
    return out;
}

uint32_t Field::add_enc(uint32_t a, uint32_t b) const {
    if (!has_tables_) return add_basic(a, b);
    if (a == 0) return b;
    if (b == 0) return a;
    const uint32_t n = size_ - 1;
    uint32_t la = log_[a], lb = log_[b];
    uint32_t d = lb >= la ? lb - la : n - (la - lb);
    uint32_t z = zech_[d];
    if (z == kZechNone) return 0;
    uint32_t k = la + z;
    if (k >= n) k -= n;
    return exp_[k];
}

uint32_t Field::neg_enc(uint32_t a) const {
    uint32_t out = 0;
    uint32_t mult = 1;
    for (int i = 0; i < deg_; ++i) {
        uint32_t da = a % p_;
        a /= p_;
        out += ((p_ - da) % p_) * mult;
        mult *= p_;
    }
    return out;
}

uint32_t Field::sub_enc(uint32_t a, uint32_t b) const { return add_enc(a, neg_enc(b)); }

uint32_t Field::mul_enc(uint32_t a, uint32_t b) const {
    if (!has_tables_) return mul_basic(a, b);
    if (a == 0 || b == 0) return 0;
    const uint32_t n = size_ - 1;
    uint32_t k = log_[a] + log_[b];
    if (k >= n) k -= n;
    return exp_[k];
}

uint32_t Field::inv_enc(uint32_t a) const {
    if (a == 0) throw std::domain_error("zero element has no inverse");
    if (has_tables_) {
        const uint32_t n = size_ - 1;
        uint32_t l = log_[a];
        return exp_[l == 0 ? 0 : n - l];
    }
    return pow_enc(a, size_ - 2);
}

uint32_t Field::pow_enc(uint32_t a, uint64_t n) const {
    uint32_t r = 1;
    while (n) {
        if (n & 1) r = mul_enc(r, a);
        a = mul_enc(a, a);
        n >>= 1;
    }
    return r;
}

uint32_t Field::conj_enc(uint32_t a) const { return pow_enc(a, q_); }

FieldElement Field::element(uint32_t enc) const {
    if (enc >= size_) throw std::invalid_argument("encoding out of range");
    return FieldElement(this, enc);
}

FieldElement Field::generator() const { return FieldElement(this, static_cast<uint32_t>(p_)); }

FieldElement Field::from_coeffs(const std::vector<int>& coeffs) const {
    if (coeffs.size() > static_cast<size_t>(deg_)) throw std::invalid_argument("too many coefficients");
    uint32_t out = 0;
    for (size_t i = coeffs.size(); i-- > 0;) {
        int c = coeffs[i];
        if (c < 0 || c >= p_) throw std::invalid_argument("coefficient out of range");
        out = out * p_ + static_cast<uint32_t>(c);
    }
    return FieldElement(this, out);
}

std::vector<FieldElement> Field::enumerate() const {
    std::vector<FieldElement> out;
    out.reserve(size_);
    for (uint32_t v = 0; v < size_; ++v) out.emplace_back(this, v);
    return out;
}

std::vector<FieldElement> Field::subfield_elements() const {
    std::vector<FieldElement> out;
    out.reserve(q_);
    for (uint32_t v = 0; v < size_; ++v) {
        if (conj_enc(v) == v) out.emplace_back(this, v);
    }
    return out;
}

namespace {

const Field& require_field(const Field* f) {
    if (f == nullptr) throw std::logic_error("operation on default-constructed FieldElement");
    return *f;
}

const Field& require_same(const Field* a, const Field* b) {
    const Field& fa = require_field(a);
    const Field& fb = require_field(b);
    if (&fa != &fb && !fa.same_as(fb)) throw std::invalid_argument("elements belong to different fields");
    return fa;
}

}  // namespace

const Field& FieldElement::field() const { return require_field(field_); }

FieldElement FieldElement::operator+(FieldElement o) const {
    const Field& f = require_same(field_, o.field_);
    return FieldElement(&f, f.add_enc(v_, o.v_));
}

FieldElement FieldElement::operator-(FieldElement o) const {
    const Field& f = require_same(field_, o.field_);
    return FieldElement(&f, f.sub_enc(v_, o.v_));
}

FieldElement FieldElement::operator*(FieldElement o) const {
    const Field& f = require_same(field_, o.field_);
    return FieldElement(&f, f.mul_enc(v_, o.v_));
}

FieldElement FieldElement::operator/(FieldElement o) const {
    const Field& f = require_same(field_, o.field_);
    return FieldElement(&f, f.mul_enc(v_, f.inv_enc(o.v_)));
}

FieldElement FieldElement::operator-() const {
    const Field& f = require_field(field_);
    return FieldElement(&f, f.neg_enc(v_));
}

FieldElement FieldElement::inverse() const {
    const Field& f = require_field(field_);
    return FieldElement(&f, f.inv_enc(v_));
}

FieldElement FieldElement::pow(uint64_t n) const {
    const Field& f = require_field(field_);
    return FieldElement(&f, f.pow_enc(v_, n));
}

FieldElement FieldElement::conj() const {
    const Field& f = require_field(field_);
    return FieldElement(&f, f.conj_enc(v_));
}

bool FieldElement::in_subfield() const {
    const Field& f = require_field(field_);
    return f.conj_enc(v_) == v_;
}

bool FieldElement::operator==(FieldElement o) const {
    if (field_ == o.field_) return v_ == o.v_;
    if (field_ == nullptr || o.field_ == nullptr) return false;
    return field_->same_as(*o.field_) && v_ == o.v_;
}

}  // namespace goppa
