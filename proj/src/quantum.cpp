#include "goppa/quantum.hpp"

#include <stdexcept>
#include <string>

namespace goppa {

StabilizerMatrix::StabilizerMatrix(Matrix rows, int qudits) : mat_(std::move(rows)), qudits_(qudits) {
    if (mat_.cols() != 2 * static_cast<size_t>(qudits)) {
        throw std::invalid_argument("stabilizer matrix must have 2n columns");
    }
}

namespace {

void require_self_orthogonal(const LinearCode& code) {
    if (!is_hermitian_self_orthogonal(code)) {
        throw std::invalid_argument("code is not Hermitian self-orthogonal (" +
                                    std::to_string(hermitian_gram_nonzero_count(code)) +
                                    " nonzero Gram entries)");
    }
}

}  // namespace

QuantumParams derive_params(const LinearCode& code, DualDistanceMode mode) {
    require_self_orthogonal(code);
    const int n = code.length();
    const int k = code.dimension();

    QuantumParams out{};
    out.n = n;
    out.logical = n - 2 * k;
    out.base_field = code.field().subfield_order();
    out.source_m = code.meta() ? code.meta()->m : -1;

    const bool feasible = code.codebook_size() <= kEnumerationGuard;
    if (mode == DualDistanceMode::exact_when_feasible && feasible) {
        WeightEnumerator primal = weight_enumerator(code);
        WeightEnumerator dual_we = macwilliams_dual_enumerator(primal, n, k, code.field().size());
        out.d_lower = dual_we.min_positive_weight();
        out.exact_distance = true;
    } else {
        if (!code.meta()) {
            throw std::invalid_argument("designed dual-distance bound needs a curve-built code");
        }
        const int g = code.meta()->curve->genus();
        const int designed = code.meta()->m - 2 * g + 2;
        out.d_lower = designed > 1 ? designed : 1;
        out.exact_distance = false;
    }
    return out;
}

StabilizerMatrix build_stabilizer(const LinearCode& code) {
    require_self_orthogonal(code);
    const Field& f = code.field();
    const int n = code.length();
    const int k = code.dimension();

    const FieldElement gamma = f.generator();
    const FieldElement denom_inv = (gamma - gamma.conj()).inverse();

    Matrix stab(&f, 2 * static_cast<size_t>(k), 2 * static_cast<size_t>(n));
    for (int r = 0; r < k; ++r) {
        for (int half = 0; half < 2; ++half) {
            // row r expands to the (a|b) splits of v and gamma*v
            for (int c = 0; c < n; ++c) {
                FieldElement v = f.element(code.generator().at(static_cast<size_t>(r), static_cast<size_t>(c)));
                if (half == 1) v = gamma * v;
                FieldElement b = (v - v.conj()) * denom_inv;
                FieldElement a = v - b * gamma;
                if (!a.in_subfield() || !b.in_subfield()) {
                    throw std::logic_error("subfield split left the base field");
                }
                stab.set(static_cast<size_t>(2 * r + half), static_cast<size_t>(c), a.encoding());
                stab.set(static_cast<size_t>(2 * r + half), static_cast<size_t>(n + c), b.encoding());
            }
        }
    }
    StabilizerMatrix out(std::move(stab), n);
    if (!verify_commutation(out)) {
        throw std::logic_error("stabilizer generators fail symplectic commutation");
    }
    return out;
}

bool verify_commutation(const StabilizerMatrix& stab) {
    const Matrix& m = stab.matrix();
    if (m.rows() == 0) return true;
    const Field& f = m.field();
    const size_t n = static_cast<size_t>(stab.qudits());
    for (size_t r1 = 0; r1 < m.rows(); ++r1) {
        for (size_t r2 = r1; r2 < m.rows(); ++r2) {
            uint32_t acc = 0;
            for (size_t c = 0; c < n; ++c) {
                uint32_t ab = f.mul_enc(m.at(r1, c), m.at(r2, n + c));
                uint32_t ba = f.mul_enc(m.at(r2, c), m.at(r1, n + c));
                acc = f.add_enc(acc, f.sub_enc(ab, ba));
            }
            if (acc != 0) return false;
        }
    }
    return true;
}

}  // namespace goppa
