#include "goppa/curve.hpp"

#include <map>
#include <ostream>
#include <stdexcept>
#include <string>

namespace goppa {

Curve::Curve(const Field& field, int s) : field_(field), s_(s) {
    const int q = static_cast<int>(field.subfield_order());
    if (s < 2) throw std::invalid_argument("curve exponent s must be at least 2");
    if ((q + 1) % s != 0) {
        throw std::invalid_argument("curve exponent s = " + std::to_string(s) +
                                    " does not divide q+1 = " + std::to_string(q + 1));
    }
    genus_ = (q - 1) * (s - 1) / 2;
}

bool Curve::is_on_curve(FieldElement x, FieldElement y) const {
    if (!x.field().same_as(field_) || !y.field().same_as(field_)) {
        throw std::invalid_argument("point coordinates from a different field");
    }
    return y.pow(q()) + y == x.pow(static_cast<uint64_t>(s_));
}

const std::vector<AffinePoint>& Curve::points() const {
    std::call_once(points_once_, [this] {
        const Field& f = field_;
        const uint32_t size = f.size();
        // bucket y by its trace y^q + y, then walk x in encoding order
        std::map<uint32_t, std::vector<uint32_t>> by_trace;
        for (uint32_t y = 0; y < size; ++y) {
            by_trace[f.add_enc(f.pow_enc(y, q()), y)].push_back(y);
        }
        for (uint32_t x = 0; x < size; ++x) {
            auto it = by_trace.find(f.pow_enc(x, static_cast<uint64_t>(s_)));
            if (it == by_trace.end()) continue;
            for (uint32_t y : it->second) {
                points_.push_back(AffinePoint{f.element(x), f.element(y)});
            }
        }
    });
    return points_;
}

int64_t Curve::expected_total_points() const {
    const int64_t q = static_cast<int64_t>(this->q());
    return q * q + 1 + 2 * static_cast<int64_t>(genus_) * q;
}

bool Curve::is_maximal() const {
    return static_cast<int64_t>(points().size()) + 1 == expected_total_points();
}

void Curve::write_points_csv(std::ostream& os) const {
    os << "x,y\n";
    for (const AffinePoint& pt : points()) {
        os << pt.x.encoding() << ',' << pt.y.encoding() << '\n';
    }
}

}  // namespace goppa
