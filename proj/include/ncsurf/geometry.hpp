#pragma once

// Q-divisors on the Hirzebruch surface F_1 = Bl_x P^2 and the ramification
// data of maximal orders on it.

#include <cstdint>
#include <iosfwd>
#include <string>

#include "ncsurf/exactmat.hpp"

namespace ncsurf {

/// h H + e E with H the pullback of a line and E the exceptional curve;
/// H^2 = 1, H.E = 0, E^2 = -1.
struct DivisorF1 {
    Rational coeff_H = 0;
    Rational coeff_E = 0;

    static DivisorF1 H() { return {1, 0}; }
    static DivisorF1 E() { return {0, 1}; }

    friend DivisorF1 operator+(const DivisorF1& a, const DivisorF1& b)
    {
        return {a.coeff_H + b.coeff_H, a.coeff_E + b.coeff_E};
    }
    friend DivisorF1 operator-(const DivisorF1& a, const DivisorF1& b)
    {
        return {a.coeff_H - b.coeff_H, a.coeff_E - b.coeff_E};
    }
    friend DivisorF1 operator-(const DivisorF1& a) { return {-a.coeff_H, -a.coeff_E}; }
    friend DivisorF1 operator*(const Rational& k, const DivisorF1& d) { return {k * d.coeff_H, k * d.coeff_E}; }
    friend bool operator==(const DivisorF1& a, const DivisorF1& b)
    {
        return a.coeff_H == b.coeff_H && a.coeff_E == b.coeff_E;
    }

    bool is_zero() const { return coeff_H == 0 && coeff_E == 0; }
};

std::ostream& operator<<(std::ostream& os, const DivisorF1& d);

Rational intersect(const DivisorF1& a, const DivisorF1& b);

/// Canonical divisor -3H + E of F_1.
DivisorF1 canonical_F1();

struct ConeGenerators {
    DivisorF1 fibre;   ///< f = H - E
    DivisorF1 section; ///< C_0 = E
};

/// Extremal rays of the Mori cone of F_1.
ConeGenerators cone_generators();

/// A maximal order on F_1 of the given degree, ramified along
/// `ramification_class` with a single uniform index.
class OrderSpec {
public:
    OrderSpec(std::uint64_t degree, DivisorF1 ramification_class, std::uint64_t ramification_index);

    /// Pullback of a degree-m order on P^2 ramified on a cubic, blown up in a
    /// point off the ramification locus: class 3H, index m. A degree-1
    /// order is unramified (class 0).
    static OrderSpec cubic_pullback(std::uint64_t degree);

    std::uint64_t degree() const { return degree_; }
    const DivisorF1& ramification_class() const { return ramification_class_; }
    std::uint64_t ramification_index() const { return ramification_index_; }

private:
    std::uint64_t degree_;
    DivisorF1 ramification_class_;
    std::uint64_t ramification_index_;
};

/// K_A = K_{F_1} + (1 - 1/e) C.
DivisorF1 order_canonical(const OrderSpec& spec);

struct KleimanReport {
    DivisorF1 canonical;
    Rational minus_K_dot_fibre;
    Rational minus_K_dot_section;
    bool del_pezzo = false;
};

/// -K_A is ample iff it is strictly positive on both extremal rays f, C_0.
KleimanReport is_del_pezzo(const OrderSpec& spec);

enum class FiberType : std::uint8_t { ruled, half_ruled, elliptic, other };

std::string to_string(FiberType t);

struct FiberReport {
    FiberType type = FiberType::other;
    std::uint64_t degree = 0;
    Rational points; ///< ramification class . f
    std::uint64_t index = 0;
};

/// Ramification pattern of the order over the generic fibre of F_1 -> P^1:
/// degree 2, 3 points, index 2 is half ruled; degree 3, 3 points, index 3
/// is elliptic; 2 points of equal index is ruled.
FiberReport generic_fiber_type(const OrderSpec& spec);

} // namespace ncsurf
