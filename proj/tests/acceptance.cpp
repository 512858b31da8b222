// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Emits the dimension-audit and self-orthogonality tables
// into the working directory as CSV artifacts.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "goppa/agcode.hpp"
#include "goppa/channel.hpp"
#include "goppa/curve.hpp"
#include "goppa/galois.hpp"
#include "goppa/quantum.hpp"
#include "goppa/semigroup.hpp"

using namespace goppa;

namespace {

struct Check {
    std::vector<std::string> failures;

    void expect(bool cond, const std::string& msg) {
        if (!cond) failures.push_back(msg);
    }
};

std::string read_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) return {};
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

// independent minimum-weight search over the dual: smallest w such that some
// vector of weight w annihilates every generator row
int dual_min_weight_search(const LinearCode& code, int max_weight) {
    const Field& f = code.field();
    const int n = code.length();
    const uint32_t q2 = f.size();
    const Matrix& gen = code.generator();

    std::vector<size_t> support;
    std::vector<uint32_t> values;
    for (int w = 1; w <= max_weight; ++w) {
        support.assign(static_cast<size_t>(w), 0);
        for (int i = 0; i < w; ++i) support[static_cast<size_t>(i)] = static_cast<size_t>(i);
        while (true) {
            values.assign(static_cast<size_t>(w), 1);
            while (true) {
                bool annihilates = true;
                for (size_t r = 0; annihilates && r < gen.rows(); ++r) {
                    uint32_t acc = 0;
                    for (int i = 0; i < w; ++i) {
                        acc = f.add_enc(acc, f.mul_enc(gen.at(r, support[static_cast<size_t>(i)]),
                                                       values[static_cast<size_t>(i)]));
                    }
                    annihilates = acc == 0;
                }
                if (annihilates) return w;
                int pos = w - 1;
                while (pos >= 0 && values[static_cast<size_t>(pos)] == q2 - 1) {
                    values[static_cast<size_t>(pos)] = 1;
                    --pos;
                }
                if (pos < 0) break;
                ++values[static_cast<size_t>(pos)];
            }
            int pos = w - 1;
            while (pos >= 0 && support[static_cast<size_t>(pos)] == static_cast<size_t>(n - w + pos)) --pos;
            if (pos < 0) break;
            ++support[static_cast<size_t>(pos)];
            for (int i = pos + 1; i < w; ++i) {
                support[static_cast<size_t>(i)] = support[static_cast<size_t>(i - 1)] + 1;
            }
        }
    }
    return 0;
}

// ---------------------------------------------------------------- criteria

void point_counts(Check& c) {
    struct Case {
        int p, s;
        int64_t total;
    };
    for (const Case& cs : {Case{3, 2, 16}, Case{5, 3, 66}, Case{5, 6, 126}, Case{7, 4, 176}}) {
        auto start = std::chrono::steady_clock::now();
        Field field(cs.p, 1);
        Curve curve(field, cs.s);
        int64_t total = static_cast<int64_t>(curve.points().size()) + 1;
        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        c.expect(total == cs.total, "q=" + std::to_string(cs.p) + " s=" + std::to_string(cs.s) +
                                        ": total " + std::to_string(total) + " != " + std::to_string(cs.total));
        c.expect(total == curve.expected_total_points(),
                 "q=" + std::to_string(cs.p) + " s=" + std::to_string(cs.s) + ": not maximal");
        c.expect(elapsed < 1.0, "enumeration exceeded 1 s");
    }
}

void genus_triple_check(Check& c) {
    for (int q : {3, 5, 7}) {
        for (int s : {(q + 1) / 2, q + 1}) {
            int g = (q - 1) * (s - 1) / 2;
            int gap_count = static_cast<int>(semigroup_gaps(q, s).size());
            int plateaus = 0;
            for (int m = 0; m <= 2 * g - 1; ++m) {
                if (riemann_roch_dim(q, s, m) == riemann_roch_dim(q, s, m - 1)) ++plateaus;
            }
            std::string tag = "q=" + std::to_string(q) + " s=" + std::to_string(s);
            c.expect(gap_count == g, tag + ": gap count " + std::to_string(gap_count));
            c.expect(plateaus == g, tag + ": ell plateau count " + std::to_string(plateaus));
        }
    }
}

void dimension_oracle(Check& c) {
    for (int p : {3, 5}) {
        Field field(p, 1);
        Curve curve(field, (p + 1) / 2);
        const int n = static_cast<int>(curve.points().size());
        const int g = curve.genus();

        std::ofstream audit("dimension_audit_q" + std::to_string(p) + ".csv");
        audit << "m,rank,ell,paper_case,paper_value,agrees_with_paper\n";
        for (int m = -1; m <= n + 2 * g; ++m) {
            int rank = build_code(curve, m).dimension();
            DimensionPrediction pred = predicted_dimension(curve, m);
            audit << m << ',' << rank << ',' << curve.ell(m) << ',' << pred.paper_case << ','
                  << pred.paper_value << ',' << (pred.agrees_with_paper ? "true" : "false") << '\n';

            std::string tag = "q=" + std::to_string(p) + " m=" + std::to_string(m);
            c.expect(rank == pred.value, tag + ": rank " + std::to_string(rank) +
                                             " != predictor " + std::to_string(pred.value));
            if (m < n) {
                c.expect(rank == curve.ell(m),
                         tag + ": rank " + std::to_string(rank) + " != ell " + std::to_string(curve.ell(m)));
            }
            if (p == 5 && m == 6) {
                c.expect(pred.paper_value == 3 && pred.value == 4 && !pred.agrees_with_paper,
                         "q=5 m=6 must expose the case-3 mismatch (predicted 3, actual 4)");
            }
        }
    }
}

void distance_bounds(Check& c) {
    Field field(3, 1);
    Curve curve(field, 2);
    for (int m : {0, 2, 3, 4, 5, 6}) {
        LinearCode code = build_code(curve, m);
        Distance dist = min_distance(code, DistanceMode::exhaustive);
        std::string tag = "q=3 m=" + std::to_string(m);
        c.expect(dist.exact, tag + ": distance not exact");
        c.expect(dist.d >= code.length() - m, tag + ": d " + std::to_string(dist.d) + " below designed " +
                                                  std::to_string(code.length() - m));
        c.expect(dist.d <= code.length() - code.dimension() + 1,
                 tag + ": d " + std::to_string(dist.d) + " violates the Singleton bound");
    }
}

void duality(Check& c) {
    for (int p : {3, 5}) {
        Field field(p, 1);
        Curve curve(field, (p + 1) / 2);
        const int q = p;
        const int g = curve.genus();
        for (int m = 0; m <= q + 2 * g; ++m) {
            LinearCode code = build_code(curve, m);
            LinearCode d = dual(code);
            LinearCode hd = hermitian_dual(code);
            std::string tag = "q=" + std::to_string(p) + " m=" + std::to_string(m);
            c.expect(code.generator().times(d.generator().transpose()).is_zero(), tag + ": G H^T != 0");
            c.expect(d.dimension() == code.length() - code.dimension(), tag + ": dual dimension");
            const Field& f = field;
            bool pairs_zero = true;
            for (size_t r = 0; pairs_zero && r < hd.generator().rows(); ++r) {
                for (size_t rc = 0; pairs_zero && rc < code.generator().rows(); ++rc) {
                    uint32_t acc = 0;
                    for (size_t col = 0; col < static_cast<size_t>(code.length()); ++col) {
                        acc = f.add_enc(acc, f.mul_enc(hd.generator().at(r, col),
                                                       f.conj_enc(code.generator().at(rc, col))));
                    }
                    pairs_zero = acc == 0;
                }
            }
            c.expect(pairs_zero, tag + ": Hermitian pairing not zero");
        }
    }

    // MacWilliams dual distance against the independent search oracle
    Field field(3, 1);
    Curve curve(field, 2);
    for (int m : {0, 2}) {
        LinearCode code = build_code(curve, m);
        WeightEnumerator primal = weight_enumerator(code);
        WeightEnumerator dual_we =
            macwilliams_dual_enumerator(primal, code.length(), code.dimension(), field.size());
        int via_transform = dual_we.min_positive_weight();
        int via_search = dual_min_weight_search(code, 4);
        std::string tag = "q=3 m=" + std::to_string(m);
        c.expect(via_search != 0, tag + ": search oracle found nothing up to weight 4");
        c.expect(via_transform == via_search, tag + ": MacWilliams d_perp " + std::to_string(via_transform) +
                                                  " != search " + std::to_string(via_search));
    }
}

void self_orthogonality_audit(Check& c) {
    Field field(3, 1);
    Curve curve(field, 2);
    const int n = static_cast<int>(curve.points().size());
    const int g = curve.genus();
    std::vector<ScanRow> rows = scan_self_orthogonality(curve, 16);
    c.expect(rows.size() == 17, "scan must cover m = 0..16");
    for (const ScanRow& row : rows) {
        std::string tag = "m=" + std::to_string(row.m);
        c.expect(row.paper_predicts == (2 * row.m <= n + 2 * g - 2), tag + ": prediction column wrong");
        if (row.self_orthogonal) {
            c.expect(2 * row.k <= n, tag + ": self-orthogonal but k > n/2");
            LinearCode code = build_code(curve, row.m);
            c.expect(hermitian_gram_nonzero_count(code) == 0, tag + ": Gram matrix not zero on recheck");
        }
    }
    std::string csv = scan_to_csv(rows);
    std::ofstream("scan_q3.csv") << csv;
    std::string golden = read_file(std::string(GOPPA_GOLDEN_DIR) + "/scan_q3.csv");
    c.expect(!golden.empty(), "missing golden scan_q3.csv");
    c.expect(csv == golden, "scan table deviates from the recorded golden artifact");
}

void quantum_derivation(Check& c) {
    Field field3(3, 1);
    Curve curve3(field3, 2);
    const int n3 = static_cast<int>(curve3.points().size());
    int derived = 0;
    for (const ScanRow& row : scan_self_orthogonality(curve3, 16)) {
        LinearCode code = build_code(curve3, row.m);
        std::string tag = "q=3 m=" + std::to_string(row.m);
        if (!row.self_orthogonal) {
            try {
                derive_params(code);
                c.expect(false, tag + ": derivation must refuse a non-self-orthogonal code");
            } catch (const std::invalid_argument&) {
            }
            continue;
        }
        QuantumParams params = derive_params(code);
        StabilizerMatrix stab = build_stabilizer(code);
        c.expect(params.logical == n3 - 2 * code.dimension(), tag + ": logical count");
        c.expect(stab.generator_count() == 2 * static_cast<size_t>(code.dimension()), tag + ": row count");
        c.expect(stab.rank() == 2 * static_cast<size_t>(code.dimension()), tag + ": stabilizer rank");
        c.expect(verify_commutation(stab), tag + ": symplectic commutation");
        ++derived;
    }
    c.expect(derived > 0, "q=3 scan produced no self-orthogonal code at all");

    Field field5(5, 1);
    Curve curve5(field5, 3);
    const int n5 = static_cast<int>(curve5.points().size());
    const int g5 = curve5.genus();
    for (int m : {9, 18}) {
        LinearCode code = build_code(curve5, m);
        std::string tag = "q=5 m=" + std::to_string(m);
        if (is_hermitian_self_orthogonal(code)) {
            QuantumParams params = derive_params(code);
            StabilizerMatrix stab = build_stabilizer(code);
            c.expect(params.logical == n5 - 2 * code.dimension(), tag + ": logical count");
            c.expect(stab.rank() == 2 * static_cast<size_t>(code.dimension()), tag + ": stabilizer rank");
            c.expect(verify_commutation(stab), tag + ": symplectic commutation");
        } else {
            try {
                derive_params(code);
                c.expect(false, tag + ": derivation must refuse a non-self-orthogonal code");
            } catch (const std::invalid_argument&) {
            }
        }
    }

    // the worked examples' arithmetic, evaluated as predicates
    c.expect(2 * 4 <= n3 + 2 * curve3.genus() - 2, "2m <= n + 2g - 2 must hold for q=3, m=4");
    c.expect(2 * 18 <= n5 + 2 * g5 - 2, "2m <= n + 2g - 2 must hold for q=5, m=18");
}

void channel_experiments(Check& c) {
    Field field(3, 1);
    Curve curve(field, 2);

    // weight-7 patterns on the m = 0 code (d = 15, unique decoding radius 7)
    LinearCode repetition = build_code(curve, 0);
    std::vector<FieldElement> sent = encode(repetition, {field.element(2)});
    std::mt19937_64 rng(20240817);
    int nearest_failures = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<FieldElement> noisy = sent;
        std::vector<size_t> positions(15);
        for (size_t i = 0; i < 15; ++i) positions[i] = i;
        std::shuffle(positions.begin(), positions.end(), rng);
        for (int i = 0; i < 7; ++i) {
            size_t pos = positions[static_cast<size_t>(i)];
            uint32_t r = static_cast<uint32_t>(rng() % 8);
            if (r >= noisy[pos].encoding()) ++r;
            noisy[pos] = field.element(r);
        }
        if (decode_nearest(repetition, noisy).codeword != sent) ++nearest_failures;
    }
    c.expect(nearest_failures == 0,
             std::to_string(nearest_failures) + " of 1000 weight-7 patterns failed to decode");

    // 10-erasure patterns on the m = 4 code (d = 11)
    LinearCode c4 = build_code(curve, 4);
    std::vector<FieldElement> sent4 =
        encode(c4, {field.element(5), field.element(0), field.element(7), field.element(2)});
    int erasure_failures = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<size_t> positions(15);
        for (size_t i = 0; i < 15; ++i) positions[i] = i;
        std::shuffle(positions.begin(), positions.end(), rng);
        std::vector<size_t> erased(positions.begin(), positions.begin() + 10);
        std::vector<FieldElement> received = sent4;
        for (size_t pos : erased) received[pos] = field.zero();
        auto decoded = decode_erasures(c4, received, erased);
        if (!decoded || *decoded != sent4) ++erasure_failures;
    }
    c.expect(erasure_failures == 0,
             std::to_string(erasure_failures) + " of 1000 ten-erasure patterns failed to decode");

    // p = 0 is error free for both channel kinds
    for (ChannelKind kind : {ChannelKind::symmetric, ChannelKind::erasure}) {
        TransmissionReport clean = wer_experiment(repetition, ChannelSpec{kind, 0.0, 11}, 200);
        c.expect(clean.word_errors == 0, "p=0 produced word errors");
        c.expect(clean.symbol_errors_injected == 0, "p=0 injected symbol errors");
    }

    // identical seeds give identical reports
    ChannelSpec spec{ChannelKind::symmetric, 0.05, 42};
    TransmissionReport r1 = wer_experiment(repetition, spec, 1000);
    TransmissionReport r2 = wer_experiment(repetition, spec, 1000);
    c.expect(r1.word_errors == r2.word_errors && r1.symbol_errors_injected == r2.symbol_errors_injected &&
                 r1.trials == r2.trials && r1.decoder == r2.decoder,
             "fixed-seed reports differ between runs");
}

}  // namespace

int main() {
    struct Entry {
        int id;
        const char* name;
        double limit_seconds;  // 0 = no stated budget
        void (*fn)(Check&);
    };
    const std::vector<Entry> entries = {
        {1, "point-counts", 0, point_counts},  // per-curve budget enforced inside
        {2, "genus-triple-check", 1.0, genus_triple_check},
        {3, "dimension-oracle", 30.0, dimension_oracle},
        {4, "distance-bounds", 120.0, distance_bounds},
        {5, "duality", 60.0, duality},
        {6, "self-orthogonality-audit", 0, self_orthogonality_audit},
        {7, "quantum-derivation", 60.0, quantum_derivation},
        {8, "channel", 120.0, channel_experiments},
    };

    int failed = 0;
    for (const Entry& entry : entries) {
        Check check;
        auto start = std::chrono::steady_clock::now();
        try {
            entry.fn(check);
        } catch (const std::exception& e) {
            check.failures.push_back(std::string("unexpected exception: ") + e.what());
        }
        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (entry.limit_seconds > 0 && elapsed > entry.limit_seconds) {
            check.failures.push_back("runtime " + std::to_string(elapsed) + " s exceeds " +
                                     std::to_string(entry.limit_seconds) + " s");
        }
        std::ostringstream line;
        line << (check.failures.empty() ? "PASS" : "FAIL") << "  " << entry.id << "  " << entry.name << "  ("
             << std::fixed << std::setprecision(2) << elapsed << " s)";
        if (!check.failures.empty()) line << "  -- " << check.failures.front();
        std::cout << line.str() << '\n';
        for (size_t i = 1; i < check.failures.size(); ++i) {
            std::cerr << "       " << entry.name << ": " << check.failures[i] << '\n';
        }
        if (!check.failures.empty()) ++failed;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
    return failed == 0 ? 0 : 1;
}
