#ifndef GOPPA_GALOIS_HPP
#define GOPPA_GALOIS_HPP

#include <cstdint>
#include <vector>

namespace goppa {

class Field;

// Element of F_{q^2} in polynomial-basis representation, held as its
// canonical integer encoding enc(a) = sum_i coeffs[i] * p^i. The element
// keeps a pointer to its field; the Field must outlive every element
// created from it. Immutable, cheap to copy.
class FieldElement {
  public:
    FieldElement() = default;
    FieldElement(const Field* field, uint32_t enc) : field_(field), v_(enc) {}

    uint32_t encoding() const { return v_; }
    const Field& field() const;
    bool is_zero() const { return v_ == 0; }

    FieldElement operator+(FieldElement o) const;
    FieldElement operator-(FieldElement o) const;
    FieldElement operator*(FieldElement o) const;
    FieldElement operator/(FieldElement o) const;
    FieldElement operator-() const;

    FieldElement inverse() const;
    FieldElement pow(uint64_t n) const;
    FieldElement conj() const;      // a -> a^q, the Hermitian conjugation
    bool in_subfield() const;       // fixed by conj, i.e. a in F_q

    bool operator==(FieldElement o) const;
    bool operator!=(FieldElement o) const { return !(*this == o); }

  private:
    const Field* field_ = nullptr;
    uint32_t v_ = 0;
};

// F_{p^{2e}} with designated subfield F_q, q = p^e, for odd primes p.
//
// The modulus is the lexicographically smallest (coefficient tuple compared
// from the constant term upward) monic primitive polynomial of degree 2e
// over F_p, so the canonical integer encoding of every element is
// reproducible across builds and implementations. That encoding is the
// bit-exact representation used by all file formats and CLI output.
//
// When the field size fits 2^16, multiplication, inversion and addition go
// through precomputed antilog / log / Zech tables; larger fields (up to the
// 2^20 guard) fall back to direct polynomial arithmetic.
//
// Immutable after construction; all operations are pure. Not copyable: an
// instance is an identity that elements, curves and codes point back to.
class Field {
  public:
    Field(int p, int e);

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

    int characteristic() const { return p_; }
    int subfield_degree() const { return e_; }
    int extension_degree() const { return deg_; }       // 2e, over F_p
    uint32_t size() const { return size_; }             // q^2
    uint32_t subfield_order() const { return q_; }      // q
    const std::vector<int>& modulus() const { return modulus_; }  // c0..c_{2e-1}, +t^{2e}

    FieldElement element(uint32_t enc) const;
    FieldElement zero() const { return FieldElement(this, 0); }
    FieldElement one() const { return FieldElement(this, 1); }
    FieldElement generator() const;                     // modulus root t; order size-1
    FieldElement from_coeffs(const std::vector<int>& coeffs) const;
    std::vector<int> coeffs_of(uint32_t enc) const;

    // all elements in ascending canonical-integer order, starting at 0
    std::vector<FieldElement> enumerate() const;
    // the q elements fixed by the q-power Frobenius
    std::vector<FieldElement> subfield_elements() const;

    bool same_as(const Field& o) const { return p_ == o.p_ && e_ == o.e_; }

    // encoding-level arithmetic; hot path for matrices and codeword loops
    uint32_t add_enc(uint32_t a, uint32_t b) const;
    uint32_t sub_enc(uint32_t a, uint32_t b) const;
    uint32_t neg_enc(uint32_t a) const;
    uint32_t mul_enc(uint32_t a, uint32_t b) const;
    uint32_t inv_enc(uint32_t a) const;                 // throws on zero
    uint32_t pow_enc(uint32_t a, uint64_t n) const;     // 0^0 = 1
    uint32_t conj_enc(uint32_t a) const;

  private:
    int p_ = 0;
    int e_ = 0;
    int deg_ = 0;
    uint32_t q_ = 0;
    uint32_t size_ = 0;
    std::vector<int> modulus_;

    bool has_tables_ = false;
    std::vector<uint32_t> exp_;    // exp_[k] = enc(t^k), k in [0, size-2]
    std::vector<uint32_t> log_;    // inverse of exp_ on nonzero encodings
    std::vector<uint32_t> zech_;   // zech_[d] = log(1 + t^d), kZechNone when zero

    static constexpr uint32_t kZechNone = 0xffffffffu;

    std::vector<int> find_modulus() const;
    uint32_t add_basic(uint32_t a, uint32_t b) const;
    uint32_t mul_basic(uint32_t a, uint32_t b) const;
    void build_tables();
};

}  // namespace goppa

#endif
