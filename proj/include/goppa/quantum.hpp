#ifndef GOPPA_QUANTUM_HPP
#define GOPPA_QUANTUM_HPP

#include <cstdint>

#include "goppa/agcode.hpp"
#include "goppa/gfmatrix.hpp"

namespace goppa {

// Parameters [[n, n-2k, d]]_q of the stabilizer code obtained from a
// Hermitian self-orthogonal [n, k] code over F_{q^2}. d_lower is the exact
// Hermitian-dual distance when the enumeration guard allows computing it,
// otherwise the designed bound for the dual, and exact_distance says which.
struct QuantumParams {
    int n;
    int logical;         // n - 2k
    int d_lower;
    bool exact_distance;
    uint32_t base_field; // q
    int source_m;        // divisor parameter of the source code, -1 if unknown
};

enum class DualDistanceMode { exact_when_feasible, designed_bound };

// 2k generators over F_q in symplectic (a|b) form, one pair per classical
// generator row v: the coordinates of v and gamma*v in the basis (1, gamma)
// of F_{q^2}/F_q, gamma the field's primitive root. Entries are subfield
// elements of the ambient F_{q^2}, so F_q ranks and products can be taken
// with the ambient arithmetic.
class StabilizerMatrix {
  public:
    StabilizerMatrix(Matrix rows, int qudits);

    const Matrix& matrix() const { return mat_; }
    size_t generator_count() const { return mat_.rows(); }
    int qudits() const { return qudits_; }
    size_t rank() const { return mat_.rank(); }

  private:
    Matrix mat_;  // 2k x 2n
    int qudits_;
};

// Both throw std::invalid_argument when the source code is not Hermitian
// self-orthogonal, reporting the nonzero Gram entry count.
QuantumParams derive_params(const LinearCode& code,
                            DualDistanceMode mode = DualDistanceMode::exact_when_feasible);
StabilizerMatrix build_stabilizer(const LinearCode& code);

// a.b' - a'.b == 0 for every pair of rows (a|b), (a'|b')
bool verify_commutation(const StabilizerMatrix& stab);

}  // namespace goppa

#endif
