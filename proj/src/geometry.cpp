#include "ncsurf/geometry.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace ncsurf {

std::ostream& operator<<(std::ostream& os, const DivisorF1& d)
{
    return os << '(' << d.coeff_H << ")H + (" << d.coeff_E << ")E";
}

Rational intersect(const DivisorF1& a, const DivisorF1& b)
{
    return a.coeff_H * b.coeff_H - a.coeff_E * b.coeff_E;
}

DivisorF1 canonical_F1() { return {-3, 1}; }

ConeGenerators cone_generators() { return {DivisorF1::H() - DivisorF1::E(), DivisorF1::E()}; }

OrderSpec::OrderSpec(std::uint64_t degree, DivisorF1 ramification_class, std::uint64_t ramification_index)
    : degree_(degree), ramification_class_(std::move(ramification_class)), ramification_index_(ramification_index)
{
    if (degree_ < 1) {
        throw std::invalid_argument("OrderSpec: degree must be at least 1");
    }
    if (ramification_index_ < 1) {
        throw std::invalid_argument("OrderSpec: ramification index must be at least 1");
    }
    if (!ramification_class_.is_zero() && ramification_index_ < 2) {
        throw std::invalid_argument("OrderSpec: a nonzero ramification class needs index at least 2");
    }
}

OrderSpec OrderSpec::cubic_pullback(std::uint64_t degree)
{
    if (degree == 1) {
        return {1, DivisorF1{}, 1};
    }
    return {degree, Rational(3) * DivisorF1::H(), degree};
}

DivisorF1 order_canonical(const OrderSpec& spec)
{
    const Rational weight = 1 - Rational(1, spec.ramification_index());
    return canonical_F1() + weight * spec.ramification_class();
}

KleimanReport is_del_pezzo(const OrderSpec& spec)
{
    KleimanReport r;
    r.canonical = order_canonical(spec);
    const auto [f, c0] = cone_generators();
    r.minus_K_dot_fibre = -intersect(r.canonical, f);
    r.minus_K_dot_section = -intersect(r.canonical, c0);
    r.del_pezzo = r.minus_K_dot_fibre > 0 && r.minus_K_dot_section > 0;
    return r;
}

std::string to_string(FiberType t)
{
    switch (t) {
    case FiberType::ruled:
        return "ruled";
    case FiberType::half_ruled:
        return "half-ruled";
    case FiberType::elliptic:
        return "elliptic";
    case FiberType::other:
        break;
    }
    return "other";
}

FiberReport generic_fiber_type(const OrderSpec& spec)
{
    FiberReport r;
    r.degree = spec.degree();
    r.index = spec.ramification_index();
    r.points = intersect(spec.ramification_class(), cone_generators().fibre);
    if (r.degree == 2 && r.points == 3 && r.index == 2) {
        r.type = FiberType::half_ruled;
    } else if (r.degree == 3 && r.points == 3 && r.index == 3) {
        r.type = FiberType::elliptic;
    } else if (r.points == 2 && r.index >= 2) {
        r.type = FiberType::ruled;
    }
    return r;
}

} // namespace ncsurf
