#include "goppa/bigint.hpp"

#include <stdexcept>

namespace goppa {

BigInt::BigInt(int64_t v) {
    negative_ = v < 0;
    uint64_t u = negative_ ? (~static_cast<uint64_t>(v) + 1) : static_cast<uint64_t>(v);
    while (u) {
        mag_.push_back(static_cast<uint32_t>(u & 0xffffffffu));
        u >>= 32;
    }
    if (mag_.empty()) negative_ = false;
}

BigInt BigInt::pow(uint32_t base, uint32_t exp) {
    BigInt r(1);
    BigInt b(static_cast<int64_t>(base));
    while (exp) {
        if (exp & 1) r = r * b;
        b = b * b;
        exp >>= 1;
    }
    return r;
}

int BigInt::compare_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    const std::vector<uint32_t>& lo = a.size() < b.size() ? a : b;
    const std::vector<uint32_t>& hi = a.size() < b.size() ? b : a;
    std::vector<uint32_t> out(hi.size(), 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < hi.size(); ++i) {
        uint64_t s = carry + hi[i] + (i < lo.size() ? lo[i] : 0);
        out[i] = static_cast<uint32_t>(s & 0xffffffffu);
        carry = s >> 32;
    }
    if (carry) out.push_back(static_cast<uint32_t>(carry));
    return out;
}

// requires |a| >= |b|
std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> out(a.size(), 0);
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t d = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (d < 0) {
            d += (1ll << 32);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out[i] = static_cast<uint32_t>(d);
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) negative_ = false;
}

BigInt& BigInt::operator+=(const BigInt& o) {
    if (negative_ == o.negative_) {
        mag_ = add_mag(mag_, o.mag_);
    } else {
        int c = compare_mag(mag_, o.mag_);
        if (c == 0) {
            mag_.clear();
            negative_ = false;
        } else if (c > 0) {
            mag_ = sub_mag(mag_, o.mag_);
        } else {
            mag_ = sub_mag(o.mag_, mag_);
            negative_ = o.negative_;
        }
    }
    trim();
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) { return *this += -o; }

BigInt BigInt::operator+(const BigInt& o) const {
    BigInt r = *this;
    r += o;
    return r;
}

BigInt BigInt::operator-(const BigInt& o) const {
    BigInt r = *this;
    r -= o;
    return r;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    if (!r.mag_.empty()) r.negative_ = !r.negative_;
    return r;
}

BigInt BigInt::operator*(const BigInt& o) const {
    BigInt r;
    if (mag_.empty() || o.mag_.empty()) return r;
    r.mag_.assign(mag_.size() + o.mag_.size(), 0);
    for (size_t i = 0; i < mag_.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < o.mag_.size(); ++j) {
            uint64_t cur = r.mag_[i + j] + static_cast<uint64_t>(mag_[i]) * o.mag_[j] + carry;
            r.mag_[i + j] = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        size_t k = i + o.mag_.size();
        while (carry) {
            uint64_t cur = r.mag_[k] + carry;
            r.mag_[k] = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    r.negative_ = negative_ != o.negative_;
    r.trim();
    return r;
}

BigInt BigInt::div_small(uint32_t d, uint32_t& remainder) const {
    if (d == 0) throw std::domain_error("BigInt: division by zero");
    BigInt q;
    q.mag_.assign(mag_.size(), 0);
    uint64_t rem = 0;
    for (size_t i = mag_.size(); i-- > 0;) {
        uint64_t cur = (rem << 32) | mag_[i];
        q.mag_[i] = static_cast<uint32_t>(cur / d);
        rem = cur % d;
    }
    remainder = static_cast<uint32_t>(rem);
    q.negative_ = negative_;
    q.trim();
    return q;
}

bool BigInt::operator==(const BigInt& o) const {
    return negative_ == o.negative_ && mag_ == o.mag_;
}

bool BigInt::operator<(const BigInt& o) const {
    if (negative_ != o.negative_) return negative_;
    int c = compare_mag(mag_, o.mag_);
    return negative_ ? c > 0 : c < 0;
}

uint64_t BigInt::to_uint64() const {
    if (negative_) throw std::overflow_error("BigInt: negative value");
    if (mag_.size() > 2) throw std::overflow_error("BigInt: value exceeds 64 bits");
    uint64_t v = 0;
    if (mag_.size() > 1) v = static_cast<uint64_t>(mag_[1]) << 32;
    if (!mag_.empty()) v |= mag_[0];
    return v;
}

std::string BigInt::to_string() const {
    if (mag_.empty()) return "0";
    std::string digits;
    BigInt cur = *this;
    cur.negative_ = false;
    while (!cur.is_zero()) {
        uint32_t rem = 0;
        cur = cur.div_small(1000000000u, rem);
        for (int i = 0; i < 9; ++i) {
            digits.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (negative_) digits.push_back('-');
    return std::string(digits.rbegin(), digits.rend());
}

}  // namespace goppa
