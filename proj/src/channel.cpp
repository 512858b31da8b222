#include "goppa/channel.hpp"

#include <random>
#include <stdexcept>

namespace goppa {

namespace {

// uniform draw from [0, n) by rejection; unbiased and fully determined by
// the mt19937_64 stream (std::uniform_int_distribution is not portable)
uint32_t uniform_below(std::mt19937_64& rng, uint32_t n) {
    const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t u;
    do {
        u = rng();
    } while (u >= limit);
    return static_cast<uint32_t>(u % n);
}

// event with probability p, from the top 53 bits
bool bernoulli(std::mt19937_64& rng, double p) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

std::vector<uint32_t> to_encodings(const LinearCode& code, const std::vector<FieldElement>& v,
                                   const char* what) {
    std::vector<uint32_t> out;
    out.reserve(v.size());
    for (const FieldElement& e : v) {
        if (!e.field().same_as(code.field())) {
            throw std::invalid_argument(std::string(what) + " element from a different field");
        }
        out.push_back(e.encoding());
    }
    return out;
}

std::vector<FieldElement> to_elements(const Field& f, const std::vector<uint32_t>& v) {
    std::vector<FieldElement> out;
    out.reserve(v.size());
    for (uint32_t enc : v) out.push_back(f.element(enc));
    return out;
}

Transmission transmit_with_rng(const ChannelSpec& spec, const std::vector<FieldElement>& word,
                               std::mt19937_64& rng) {
    const uint32_t q2 = word.empty() ? 0 : word.front().field().size();
    Transmission out;
    out.received = word;
    out.corrupted.assign(word.size(), 0);
    for (size_t i = 0; i < word.size(); ++i) {
        if (!bernoulli(rng, spec.p)) continue;
        out.corrupted[i] = 1;
        if (spec.kind == ChannelKind::symmetric) {
            // uniform over the q^2 - 1 other symbols
            uint32_t r = uniform_below(rng, q2 - 1);
            if (r >= word[i].encoding()) ++r;
            out.received[i] = word[i].field().element(r);
        } else {
            out.received[i] = word[i].field().zero();
        }
    }
    return out;
}

}  // namespace

std::vector<FieldElement> encode(const LinearCode& code, const std::vector<FieldElement>& message) {
    if (message.size() != static_cast<size_t>(code.dimension())) {
        throw std::invalid_argument("message length does not equal the code dimension");
    }
    const Field& f = code.field();
    std::vector<uint32_t> msg = to_encodings(code, message, "message");
    std::vector<uint32_t> word(static_cast<size_t>(code.length()), 0);
    for (size_t r = 0; r < msg.size(); ++r) {
        if (msg[r] == 0) continue;
        for (size_t c = 0; c < word.size(); ++c) {
            word[c] = f.add_enc(word[c], f.mul_enc(msg[r], code.generator().at(r, c)));
        }
    }
    return to_elements(f, word);
}

Transmission transmit(const ChannelSpec& spec, const std::vector<FieldElement>& word) {
    if (spec.p < 0.0 || spec.p > 1.0) throw std::invalid_argument("probability must lie in [0, 1]");
    std::mt19937_64 rng(spec.seed);
    return transmit_with_rng(spec, word, rng);
}

DecodeResult decode_nearest(const LinearCode& code, const std::vector<FieldElement>& received) {
    if (received.size() != static_cast<size_t>(code.length())) {
        throw std::invalid_argument("received word length does not equal the code length");
    }
    if (code.codebook_size() > kEnumerationGuard) {
        throw std::invalid_argument("nearest-codeword decoding needs size^k <= " +
                                    std::to_string(kEnumerationGuard) + " codewords");
    }
    const Field& f = code.field();
    std::vector<uint32_t> target = to_encodings(code, received, "received");

    std::vector<uint32_t> best_word, best_msg;
    int best = -1;
    for_each_codeword(code, [&](const std::vector<uint32_t>& word, const std::vector<uint32_t>& msg) {
        int dist = 0;
        for (size_t i = 0; i < word.size(); ++i) dist += word[i] != target[i];
        // strict improvement keeps the lexicographically first minimizer
        if (best < 0 || dist < best) {
            best = dist;
            best_word = word;
            best_msg = msg;
        }
    });
    return DecodeResult{to_elements(f, best_msg), to_elements(f, best_word)};
}

std::optional<std::vector<FieldElement>> decode_erasures(const LinearCode& code,
                                                         const std::vector<FieldElement>& received,
                                                         const std::vector<size_t>& erased) {
    if (received.size() != static_cast<size_t>(code.length())) {
        throw std::invalid_argument("received word length does not equal the code length");
    }
    const Field& f = code.field();
    std::vector<bool> is_erased(received.size(), false);
    for (size_t pos : erased) {
        if (pos >= received.size()) throw std::invalid_argument("erasure position out of range");
        is_erased[pos] = true;
    }

    std::vector<size_t> surviving;
    for (size_t c = 0; c < received.size(); ++c) {
        if (!is_erased[c]) surviving.push_back(c);
    }
    const size_t k = static_cast<size_t>(code.dimension());
    // z G restricted to surviving columns = received there; unknowns z
    Matrix a(&f, surviving.size(), k);
    std::vector<uint32_t> rhs(surviving.size());
    for (size_t row = 0; row < surviving.size(); ++row) {
        for (size_t col = 0; col < k; ++col) a.set(row, col, code.generator().at(col, surviving[row]));
        rhs[row] = received[surviving[row]].encoding();
    }
    std::optional<std::vector<uint32_t>> z = solve_unique(a, rhs);
    if (!z) return std::nullopt;
    return encode(code, to_elements(f, *z));
}

TransmissionReport wer_experiment(const LinearCode& code, const ChannelSpec& spec, int64_t trials) {
    if (trials < 1) throw std::invalid_argument("need at least one trial");
    if (spec.p < 0.0 || spec.p > 1.0) throw std::invalid_argument("probability must lie in [0, 1]");
    const Field& f = code.field();
    const uint32_t q2 = f.size();
    const size_t k = static_cast<size_t>(code.dimension());

    TransmissionReport report{};
    report.trials = trials;
    report.decoder = spec.kind == ChannelKind::symmetric ? "nearest" : "erasure";

    for (int64_t t = 0; t < trials; ++t) {
        std::mt19937_64 rng(spec.seed + static_cast<uint64_t>(t));
        std::vector<FieldElement> message;
        message.reserve(k);
        for (size_t i = 0; i < k; ++i) message.push_back(f.element(uniform_below(rng, q2)));
        std::vector<FieldElement> sent = encode(code, message);
        Transmission tx = transmit_with_rng(spec, sent, rng);
        for (uint8_t c : tx.corrupted) report.symbol_errors_injected += c;

        bool ok;
        if (spec.kind == ChannelKind::symmetric) {
            ok = decode_nearest(code, tx.received).codeword == sent;
        } else {
            std::vector<size_t> erased;
            for (size_t i = 0; i < tx.corrupted.size(); ++i) {
                if (tx.corrupted[i]) erased.push_back(i);
            }
            std::optional<std::vector<FieldElement>> decoded = decode_erasures(code, tx.received, erased);
            ok = decoded.has_value() && *decoded == sent;
        }
        if (!ok) ++report.word_errors;
    }
    return report;
}

}  // namespace goppa
