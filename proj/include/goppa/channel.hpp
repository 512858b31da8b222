#ifndef GOPPA_CHANNEL_HPP
#define GOPPA_CHANNEL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "goppa/agcode.hpp"

namespace goppa {

// All randomness comes from mt19937_64 streams consumed through our own
// samplers, so identical (spec, input) pairs reproduce identical outputs on
// every platform. Trial t of an experiment uses the stream seeded with
// spec.seed + t.
inline constexpr const char* kRngName = "mt19937_64";

enum class ChannelKind { symmetric, erasure };

struct ChannelSpec {
    ChannelKind kind;
    double p;       // per-symbol event probability
    uint64_t seed;
};

struct Transmission {
    std::vector<FieldElement> received;  // erased positions carry the zero element
    std::vector<uint8_t> corrupted;      // 1 where a substitution or erasure happened
};

struct TransmissionReport {
    int64_t trials;
    int64_t word_errors;
    int64_t symbol_errors_injected;
    std::string decoder;  // "nearest" or "erasure"
};

std::vector<FieldElement> encode(const LinearCode& code, const std::vector<FieldElement>& message);

Transmission transmit(const ChannelSpec& spec, const std::vector<FieldElement>& word);

struct DecodeResult {
    std::vector<FieldElement> message;
    std::vector<FieldElement> codeword;
};

// Codeword at minimum Hamming distance from the received word; ties go to
// the lexicographically smallest message. Guarded full-codebook search.
DecodeResult decode_nearest(const LinearCode& code, const std::vector<FieldElement>& received);

// Unique completion of the received word given the erased positions;
// nullopt when the restricted system is underdetermined or inconsistent.
std::optional<std::vector<FieldElement>> decode_erasures(const LinearCode& code,
                                                         const std::vector<FieldElement>& received,
                                                         const std::vector<size_t>& erased);

TransmissionReport wer_experiment(const LinearCode& code, const ChannelSpec& spec, int64_t trials);

}  // namespace goppa

#endif
