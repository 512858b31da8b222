#ifndef GOPPA_AGCODE_HPP
#define GOPPA_AGCODE_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "goppa/bigint.hpp"
#include "goppa/curve.hpp"
#include "goppa/gfmatrix.hpp"

namespace goppa {

// Every operation that walks the full codebook (weight enumerator,
// exhaustive distance, nearest-codeword decoding) refuses to run past this
// many codewords.
constexpr int64_t kEnumerationGuard = 10000000;

struct CodeMeta {
    const Curve* curve;
    int m;  // the one-point divisor multiplier G = m P_inf
};

// Linear [n, k] code over F_{q^2}, held as a full-rank generator matrix in
// reduced row echelon form. Codes built from a curve keep their divisor
// parameter and evaluation support around for designed-distance bounds and
// the dimension audit.
class LinearCode {
  public:
    LinearCode(const Field* field, Matrix generator, std::optional<CodeMeta> meta,
               std::vector<AffinePoint> support);

    const Field& field() const { return *field_; }
    int length() const { return n_; }
    int dimension() const { return k_; }
    const Matrix& generator() const { return gen_; }
    const std::optional<CodeMeta>& meta() const { return meta_; }
    const std::vector<AffinePoint>& support() const { return support_; }

    // size()^k with saturation just past the enumeration guard
    int64_t codebook_size() const;

  private:
    const Field* field_;
    int n_, k_;
    Matrix gen_;
    std::optional<CodeMeta> meta_;
    std::vector<AffinePoint> support_;
};

// Evaluation code C_L(D, m P_inf); support defaults to all affine points.
// m < 0 yields the zero code.
LinearCode build_code(const Curve& curve, int m);
LinearCode build_code(const Curve& curve, int m, const std::vector<AffinePoint>& support);

// Euclidean dual: null space of the generator.
LinearCode dual(const LinearCode& code);
// Hermitian dual C^{perp H} = (C^(q))^{perp}: null space of the entrywise
// conjugated generator.
LinearCode hermitian_dual(const LinearCode& code);

// G conj(G)^T == 0, i.e. C is contained in its Hermitian dual.
bool is_hermitian_self_orthogonal(const LinearCode& code);
// number of nonzero entries of G conj(G)^T (refusal diagnostics)
int hermitian_gram_nonzero_count(const LinearCode& code);

struct DimensionPrediction {
    int value;               // authoritative dimension (semigroup count / rank oracle)
    int paper_case;          // which of the five published clauses applies, 1..5
    long long paper_value;   // what that clause's literal formula yields
    bool agrees_with_paper;  // paper_value == value
};

// Dimension of C_L(D, m P_inf) on full support, classified against the
// published five-case formula. The formula's basis count keeps its stated
// j <= (q-1)/2 bound so disagreements are visible.
DimensionPrediction predicted_dimension(const Curve& curve, int m);

struct ScanRow {
    int m;
    int k;
    int designed_d;          // n - m
    bool self_orthogonal;    // empirical Gram test
    bool paper_predicts;     // 2m <= n + 2g - 2
};

std::vector<ScanRow> scan_self_orthogonality(const Curve& curve, int m_max);
std::string scan_to_csv(const std::vector<ScanRow>& rows);

// Exact weight distribution A_0..A_n. Counts are big integers because dual
// distributions overflow 64 bits at these lengths.
class WeightEnumerator {
  public:
    explicit WeightEnumerator(std::vector<BigInt> counts);

    int length() const { return static_cast<int>(counts_.size()) - 1; }
    const BigInt& at(int w) const { return counts_.at(static_cast<size_t>(w)); }
    const std::vector<BigInt>& counts() const { return counts_; }

    // smallest positive weight with a codeword; 0 for the zero code
    int min_positive_weight() const;
    BigInt total() const;

  private:
    std::vector<BigInt> counts_;
};

WeightEnumerator weight_enumerator(const LinearCode& code);

// Exact dual distribution via B_w = Q^-k sum_v A_v K_w(v) with Krawtchouk
// coefficients for alphabet size Q. Throws if any B_w comes out negative or
// fractional, which would signal an upstream bug.
WeightEnumerator macwilliams_dual_enumerator(const WeightEnumerator& we, int n, int k, uint32_t alphabet);

enum class DistanceMode { exhaustive, enumerator, bound };

struct Distance {
    int d;
    bool exact;
};

// exhaustive/enumerator: true minimum weight (guarded); bound: designed
// distance n - m, exact = false. The zero code reports d = 0.
Distance min_distance(const LinearCode& code, DistanceMode mode);

// Generator matrix file format: first line "Q n k", then k lines of n
// canonical integer encodings.
void write_generator_matrix(std::ostream& os, const LinearCode& code);
LinearCode load_generator_matrix(std::istream& is, const Field& field);

// Visit every codeword as (word, message) encoding vectors, messages in
// lexicographic canonical-integer order (index 0 most significant). The
// caller is responsible for guard checks.
template <typename Fn>
void for_each_codeword(const LinearCode& code, Fn&& fn) {
    const Field& f = code.field();
    const uint32_t q2 = f.size();
    const size_t k = static_cast<size_t>(code.dimension());
    const size_t n = static_cast<size_t>(code.length());
    const Matrix& gen = code.generator();

    std::vector<uint32_t> message(k, 0);
    std::vector<uint32_t> word(n, 0);
    if (k == 0) {
        fn(static_cast<const std::vector<uint32_t>&>(word), static_cast<const std::vector<uint32_t>&>(message));
        return;
    }
    while (true) {
        fn(static_cast<const std::vector<uint32_t>&>(word), static_cast<const std::vector<uint32_t>&>(message));
        size_t j = k;
        bool advanced = false;
        while (j-- > 0) {
            uint32_t old = message[j];
            uint32_t next = old + 1 == q2 ? 0 : old + 1;
            message[j] = next;
            uint32_t delta = f.sub_enc(next, old);
            if (delta != 0) {
                for (size_t c = 0; c < n; ++c) {
                    word[c] = f.add_enc(word[c], f.mul_enc(delta, gen.at(j, c)));
                }
            }
            if (next != 0) {
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
}

}  // namespace goppa

#endif
