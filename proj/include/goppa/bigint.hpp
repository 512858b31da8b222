#ifndef GOPPA_BIGINT_HPP
#define GOPPA_BIGINT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace goppa {

// Signed arbitrary-precision integer (sign + base-2^32 magnitude).
// Weight distributions of dual codes overflow 64 bits already for the
// [65, 62] duals handled here, so the MacWilliams transform works on these.
class BigInt {
  public:
    BigInt() = default;
    BigInt(int64_t v);

    static BigInt pow(uint32_t base, uint32_t exp);

    BigInt& operator+=(const BigInt& o);
    BigInt& operator-=(const BigInt& o);
    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    BigInt operator-() const;

    // quotient of this / d for small d; remainder of |this| via out-param
    BigInt div_small(uint32_t d, uint32_t& remainder) const;

    bool operator==(const BigInt& o) const;
    bool operator!=(const BigInt& o) const { return !(*this == o); }
    bool operator<(const BigInt& o) const;

    bool is_zero() const { return mag_.empty(); }
    bool is_negative() const { return negative_; }

    uint64_t to_uint64() const;  // throws std::overflow_error when out of range
    std::string to_string() const;

  private:
    bool negative_ = false;           // never set when mag_ is empty
    std::vector<uint32_t> mag_;       // little-endian limbs, no leading zeros

    static int compare_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    void trim();
};

}  // namespace goppa

#endif
