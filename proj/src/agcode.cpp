#include "goppa/agcode.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace goppa {

LinearCode::LinearCode(const Field* field, Matrix generator, std::optional<CodeMeta> meta,
                       std::vector<AffinePoint> support)
    : field_(field),
      n_(static_cast<int>(generator.cols())),
      k_(static_cast<int>(generator.rows())),
      gen_(std::move(generator)),
      meta_(std::move(meta)),
      support_(std::move(support)) {}

int64_t LinearCode::codebook_size() const {
    int64_t total = 1;
    for (int i = 0; i < k_; ++i) {
        total *= static_cast<int64_t>(field_->size());
        if (total > kEnumerationGuard) return kEnumerationGuard + 1;
    }
    return total;
}

LinearCode build_code(const Curve& curve, int m) { return build_code(curve, m, curve.points()); }

LinearCode build_code(const Curve& curve, int m, const std::vector<AffinePoint>& support) {
    const Field* f = &curve.field();
    const size_t n = support.size();
    if (n == 0) throw std::invalid_argument("empty evaluation support");

    std::vector<std::pair<uint32_t, uint32_t>> encs;
    encs.reserve(n);
    for (const AffinePoint& pt : support) {
        if (!curve.is_on_curve(pt.x, pt.y)) throw std::invalid_argument("support point not on the curve");
        encs.push_back({pt.x.encoding(), pt.y.encoding()});
    }
    std::vector<std::pair<uint32_t, uint32_t>> sorted = encs;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("duplicate support point");
    }

    if (m < 0) {
        return LinearCode(f, Matrix(f, 0, n), CodeMeta{&curve, m}, support);
    }

    const std::vector<Monomial> basis = curve.basis(m);
    int max_i = 0, max_j = 0;
    for (const Monomial& mono : basis) {
        max_i = std::max(max_i, mono.x_exp);
        max_j = std::max(max_j, mono.y_exp);
    }
    // per-point power tables keep evaluation linear in the basis size
    std::vector<std::vector<uint32_t>> xpow(n), ypow(n);
    for (size_t c = 0; c < n; ++c) {
        xpow[c].resize(static_cast<size_t>(max_i) + 1);
        ypow[c].resize(static_cast<size_t>(max_j) + 1);
        xpow[c][0] = 1;
        ypow[c][0] = 1;
        for (int i = 1; i <= max_i; ++i) xpow[c][i] = f->mul_enc(xpow[c][i - 1], encs[c].first);
        for (int j = 1; j <= max_j; ++j) ypow[c][j] = f->mul_enc(ypow[c][j - 1], encs[c].second);
    }

    Matrix eval(f, basis.size(), n);
    for (size_t r = 0; r < basis.size(); ++r) {
        for (size_t c = 0; c < n; ++c) {
            eval.set(r, c, f->mul_enc(xpow[c][basis[r].x_exp], ypow[c][basis[r].y_exp]));
        }
    }
    return LinearCode(f, eval.row_basis(), CodeMeta{&curve, m}, support);
}

LinearCode dual(const LinearCode& code) {
    return LinearCode(&code.field(), code.generator().null_space(), std::nullopt, code.support());
}

LinearCode hermitian_dual(const LinearCode& code) {
    return LinearCode(&code.field(), code.generator().conj_entries().null_space(), std::nullopt,
                      code.support());
}

namespace {

Matrix hermitian_gram(const LinearCode& code) {
    const Matrix& g = code.generator();
    return g.times(g.conj_entries().transpose());
}

}  // namespace

bool is_hermitian_self_orthogonal(const LinearCode& code) {
    if (code.dimension() == 0) return true;
    return hermitian_gram(code).is_zero();
}

int hermitian_gram_nonzero_count(const LinearCode& code) {
    if (code.dimension() == 0) return 0;
    Matrix gram = hermitian_gram(code);
    int count = 0;
    for (size_t r = 0; r < gram.rows(); ++r) {
        for (size_t c = 0; c < gram.cols(); ++c) {
            if (gram.at(r, c) != 0) ++count;
        }
    }
    return count;
}

namespace {

// the published basis count keeps its stated j <= (q-1)/2 restriction
long long restricted_basis_count(int q, int s, int m) {
    long long count = 0;
    for (int j = 0; j <= (q - 1) / 2 && j * s <= m; ++j) {
        for (int i = 0; i * q + j * s <= m; ++i) ++count;
    }
    return count;
}

}  // namespace

DimensionPrediction predicted_dimension(const Curve& curve, int m) {
    const int q = static_cast<int>(curve.q());
    const int s = curve.s();
    const int g = curve.genus();
    const int n = static_cast<int>(curve.points().size());

    DimensionPrediction out{};
    if (m < 0) {
        out = {0, 1, 0, true};
    } else if (m <= q) {
        out.value = curve.ell(m);
        out.paper_case = 2;
        out.paper_value = restricted_basis_count(q, s, m);
    } else if (m < n) {
        out.value = curve.ell(m);
        out.paper_case = 3;
        out.paper_value = m + 1 - g;
    } else if (m <= n + 2 * g - 2) {
        out.value = build_code(curve, m).dimension();  // rank oracle
        out.paper_case = 4;
        out.paper_value = n - restricted_basis_count(q, s, n + 2 * g - 2 - m);
    } else {
        out.value = n;
        out.paper_case = 5;
        out.paper_value = n;
    }
    out.agrees_with_paper = out.paper_value == out.value;
    return out;
}

std::vector<ScanRow> scan_self_orthogonality(const Curve& curve, int m_max) {
    const int n = static_cast<int>(curve.points().size());
    const int g = curve.genus();
    if (m_max > n + 2 * g) throw std::invalid_argument("scan bound exceeds n + 2g");
    std::vector<ScanRow> rows;
    for (int m = 0; m <= m_max; ++m) {
        LinearCode code = build_code(curve, m);
        rows.push_back(ScanRow{m, code.dimension(), n - m, is_hermitian_self_orthogonal(code),
                               2 * m <= n + 2 * g - 2});
    }
    return rows;
}

std::string scan_to_csv(const std::vector<ScanRow>& rows) {
    std::ostringstream os;
    os << "m,k,designed_d,self_orthogonal,paper_predicts\n";
    for (const ScanRow& r : rows) {
        os << r.m << ',' << r.k << ',' << r.designed_d << ',' << (r.self_orthogonal ? "true" : "false")
           << ',' << (r.paper_predicts ? "true" : "false") << '\n';
    }
    return os.str();
}

WeightEnumerator::WeightEnumerator(std::vector<BigInt> counts) : counts_(std::move(counts)) {
    if (counts_.empty()) throw std::invalid_argument("weight enumerator needs counts A_0..A_n");
}

int WeightEnumerator::min_positive_weight() const {
    for (size_t w = 1; w < counts_.size(); ++w) {
        if (!counts_[w].is_zero()) return static_cast<int>(w);
    }
    return 0;
}

BigInt WeightEnumerator::total() const {
    BigInt sum;
    for (const BigInt& c : counts_) sum += c;
    return sum;
}

namespace {

void require_enumerable(const LinearCode& code, const char* what) {
    if (code.codebook_size() > kEnumerationGuard) {
        throw std::invalid_argument(std::string(what) + " needs size^k <= " +
                                    std::to_string(kEnumerationGuard) + " codewords");
    }
}

}  // namespace

WeightEnumerator weight_enumerator(const LinearCode& code) {
    require_enumerable(code, "weight enumerator");
    std::vector<int64_t> counts(static_cast<size_t>(code.length()) + 1, 0);
    for_each_codeword(code, [&](const std::vector<uint32_t>& word, const std::vector<uint32_t>&) {
        size_t w = 0;
        for (uint32_t v : word) w += v != 0;
        ++counts[w];
    });
    std::vector<BigInt> big(counts.size());
    for (size_t i = 0; i < counts.size(); ++i) big[i] = BigInt(counts[i]);
    return WeightEnumerator(std::move(big));
}

WeightEnumerator macwilliams_dual_enumerator(const WeightEnumerator& we, int n, int k, uint32_t alphabet) {
    if (we.length() != n) throw std::invalid_argument("enumerator length does not match n");
    if (k < 0 || k > n) throw std::invalid_argument("invalid dimension");
    if (alphabet < 2) throw std::invalid_argument("alphabet size must be at least 2");
    if (we.total() != BigInt::pow(alphabet, static_cast<uint32_t>(k))) {
        throw std::invalid_argument("enumerator total does not equal Q^k");
    }

    // Pascal triangle and (Q-1)^j as exact integers
    std::vector<std::vector<BigInt>> binom(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        binom[i].resize(static_cast<size_t>(i) + 1);
        binom[i][0] = BigInt(1);
        binom[i][static_cast<size_t>(i)] = BigInt(1);
        for (int j = 1; j < i; ++j) binom[i][j] = binom[i - 1][j - 1] + binom[i - 1][j];
    }
    std::vector<BigInt> qm1pow(static_cast<size_t>(n) + 1);
    qm1pow[0] = BigInt(1);
    for (int j = 1; j <= n; ++j) qm1pow[j] = qm1pow[j - 1] * BigInt(static_cast<int64_t>(alphabet - 1));

    auto choose = [&](int top, int bottom) -> BigInt {
        if (bottom < 0 || bottom > top) return BigInt(0);
        return binom[top][bottom];
    };

    std::vector<BigInt> out(static_cast<size_t>(n) + 1);
    for (int w = 0; w <= n; ++w) {
        BigInt acc;
        for (int v = 0; v <= n; ++v) {
            const BigInt& av = we.at(v);
            if (av.is_zero()) continue;
            BigInt kraw;
            for (int j = 0; j <= w; ++j) {
                BigInt term = choose(v, j) * choose(n - v, w - j) * qm1pow[w - j];
                if (j % 2) {
                    kraw -= term;
                } else {
                    kraw += term;
                }
            }
            acc += av * kraw;
        }
        if (acc.is_negative()) {
            throw std::runtime_error("MacWilliams transform produced a negative count at weight " +
                                     std::to_string(w));
        }
        for (int i = 0; i < k; ++i) {
            uint32_t rem = 0;
            acc = acc.div_small(alphabet, rem);
            if (rem != 0) {
                throw std::runtime_error("MacWilliams transform produced a fractional count at weight " +
                                         std::to_string(w));
            }
        }
        out[static_cast<size_t>(w)] = std::move(acc);
    }
    return WeightEnumerator(std::move(out));
}

Distance min_distance(const LinearCode& code, DistanceMode mode) {
    switch (mode) {
        case DistanceMode::bound: {
            if (!code.meta()) throw std::invalid_argument("designed distance needs a curve-built code");
            return Distance{code.length() - code.meta()->m, false};
        }
        case DistanceMode::enumerator: {
            WeightEnumerator we = weight_enumerator(code);
            return Distance{we.min_positive_weight(), true};
        }
        case DistanceMode::exhaustive: {
            require_enumerable(code, "exhaustive distance");
            int best = 0;
            for_each_codeword(code, [&](const std::vector<uint32_t>& word, const std::vector<uint32_t>& msg) {
                bool zero_msg = true;
                for (uint32_t v : msg) {
                    if (v != 0) {
                        zero_msg = false;
                        break;
                    }
                }
                if (zero_msg) return;
                int w = 0;
                for (uint32_t v : word) w += v != 0;
                if (best == 0 || w < best) best = w;
            });
            return Distance{best, true};
        }
    }
    throw std::logic_error("unknown distance mode");
}

void write_generator_matrix(std::ostream& os, const LinearCode& code) {
    os << code.field().size() << ' ' << code.length() << ' ' << code.dimension() << '\n';
    const Matrix& g = code.generator();
    for (size_t r = 0; r < g.rows(); ++r) {
        for (size_t c = 0; c < g.cols(); ++c) {
            if (c) os << ' ';
            os << g.at(r, c);
        }
        os << '\n';
    }
}

LinearCode load_generator_matrix(std::istream& is, const Field& field) {
    uint64_t alphabet = 0;
    int n = 0, k = 0;
    if (!(is >> alphabet >> n >> k)) throw std::invalid_argument("malformed generator matrix header");
    if (alphabet != field.size()) throw std::invalid_argument("alphabet size does not match the field");
    if (n < 1 || k < 0 || k > n) throw std::invalid_argument("invalid generator matrix dimensions");
    Matrix g(&field, static_cast<size_t>(k), static_cast<size_t>(n));
    for (int r = 0; r < k; ++r) {
        for (int c = 0; c < n; ++c) {
            uint64_t v = 0;
            if (!(is >> v)) throw std::invalid_argument("truncated generator matrix");
            if (v >= field.size()) throw std::invalid_argument("encoding out of range in generator matrix");
            g.set(static_cast<size_t>(r), static_cast<size_t>(c), static_cast<uint32_t>(v));
        }
    }
    if (g.rank() != static_cast<size_t>(k)) throw std::invalid_argument("generator matrix is not full rank");
    return LinearCode(&field, std::move(g), std::nullopt, {});
}

}  // namespace goppa
