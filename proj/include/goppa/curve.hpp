#ifndef GOPPA_CURVE_HPP
#define GOPPA_CURVE_HPP

#include <cstdint>
#include <iosfwd>
#include <mutex>
#include <vector>

#include "goppa/galois.hpp"
#include "goppa/semigroup.hpp"

namespace goppa {

struct AffinePoint {
    FieldElement x;
    FieldElement y;
    bool operator==(const AffinePoint& o) const { return x == o.x && y == o.y; }
};

// The curve y^q + y = x^s over F_{q^2} with s | q+1, genus (q-1)(s-1)/2.
// s = (q+1)/2 gives the maximal curve of genus (q-1)^2/4; s = q+1 gives the
// Hermitian curve. The point at infinity is never materialized: divisors
// supported on it are carried around as the integer multiplier m.
class Curve {
  public:
    Curve(const Field& field, int s);

    Curve(const Curve&) = delete;
    Curve& operator=(const Curve&) = delete;

    const Field& field() const { return field_; }
    uint32_t q() const { return field_.subfield_order(); }
    int s() const { return s_; }
    int genus() const { return genus_; }

    bool is_on_curve(FieldElement x, FieldElement y) const;

    // all affine rational points, ascending (enc(x), enc(y)); cached once
    const std::vector<AffinePoint>& points() const;

    int64_t expected_total_points() const;  // q^2 + 1 + 2 g q
    bool is_maximal() const;                // #affine + 1 == expected_total_points()

    int ell(int m) const { return riemann_roch_dim(static_cast<int>(q()), s_, m); }
    std::vector<Monomial> basis(int m) const { return monomial_basis(static_cast<int>(q()), s_, m); }

    void write_points_csv(std::ostream& os) const;

  private:
    const Field& field_;
    int s_;
    int genus_;
    mutable std::once_flag points_once_;
    mutable std::vector<AffinePoint> points_;
};

}  // namespace goppa

#endif
