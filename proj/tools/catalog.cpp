#include "catalog.hpp"

#include <utility>

namespace arrcover::cli {

namespace {

// a + b*zeta_3
CycNum z3(long a, long b)
{
    return CycNum::from_coeffs({Rational(a), Rational(b)}, 3);
}

CycNum q1(long a)
{
    return CycNum(Rational(a), 1);
}

Hyperplane plane(CycNum constant, std::vector<CycNum> coeffs)
{
    return Hyperplane{std::move(constant), std::move(coeffs)};
}

// zeta_3^i in the basis (1, zeta): zeta^2 = -1 - zeta.
CycNum zeta_pow(unsigned i)
{
    switch (i % 3) {
    case 0: return z3(1, 0);
    case 1: return z3(0, 1);
    default: return z3(-1, -1);
    }
}

Arrangement selberg()
{
    // x, y, x - y, x - 1, y - 1
    return Arrangement::build(2, 1, {
        plane(q1(0), {q1(1), q1(0)}),
        plane(q1(0), {q1(0), q1(1)}),
        plane(q1(0), {q1(1), q1(-1)}),
        plane(q1(-1), {q1(1), q1(0)}),
        plane(q1(-1), {q1(0), q1(1)}),
    });
}

Arrangement maclane()
{
    // x, y, y - x, z, z - x - w^2 y, z + w y, z - x, z + w^2 x + w y   (w = zeta_3)
    const CycNum o = z3(0, 0);
    return Arrangement::build(3, 3, {
        plane(o, {z3(1, 0), o, o}),
        plane(o, {o, z3(1, 0), o}),
        plane(o, {z3(-1, 0), z3(1, 0), o}),
        plane(o, {o, o, z3(1, 0)}),
        plane(o, {z3(-1, 0), z3(1, 1), z3(1, 0)}),
        plane(o, {o, z3(0, 1), z3(1, 0)}),
        plane(o, {z3(-1, 0), o, z3(1, 0)}),
        plane(o, {z3(-1, -1), z3(0, 1), z3(1, 0)}),
    });
}

Arrangement maclane_decone()
{
    // x = 1 in the forms above; coordinates (y, z).
    const CycNum o = z3(0, 0);
    return Arrangement::build(2, 3, {
        plane(o, {z3(1, 0), o}),
        plane(z3(-1, 0), {z3(1, 0), o}),
        plane(o, {o, z3(1, 0)}),
        plane(z3(-1, 0), {z3(1, 1), z3(1, 0)}),
        plane(o, {z3(0, 1), z3(1, 0)}),
        plane(z3(-1, 0), {o, z3(1, 0)}),
        plane(z3(-1, -1), {z3(0, 1), z3(1, 0)}),
    });
}

Arrangement hessian()
{
    // x1, x2, x3, then x1 + w^i x2 + w^j x3 for i, j = 0, 1, 2 (i outer)
    const CycNum o = z3(0, 0);
    const CycNum one = z3(1, 0);
    std::vector<Hyperplane> planes{
        plane(o, {one, o, o}),
        plane(o, {o, one, o}),
        plane(o, {o, o, one}),
    };
    for (unsigned i = 0; i < 3; ++i)
        for (unsigned j = 0; j < 3; ++j)
            planes.push_back(plane(o, {one, zeta_pow(i), zeta_pow(j)}));
    return Arrangement::build(3, 3, std::move(planes));
}

Arrangement hessian_decone()
{
    // x1 = 1; coordinates (x2, x3).
    const CycNum o = z3(0, 0);
    const CycNum one = z3(1, 0);
    std::vector<Hyperplane> planes{
        plane(o, {one, o}),
        plane(o, {o, one}),
    };
    for (unsigned i = 0; i < 3; ++i)
        for (unsigned j = 0; j < 3; ++j)
            planes.push_back(plane(one, {zeta_pow(i), zeta_pow(j)}));
    return Arrangement::build(2, 3, std::move(planes));
}

Arrangement ceva3()
{
    // (x^3 - y^3)(x^3 - z^3)(y^3 - z^3) = prod_i (x - w^i y)(x - w^i z)(y - w^i z)
    const CycNum o = z3(0, 0);
    const CycNum one = z3(1, 0);
    std::vector<Hyperplane> planes;
    for (unsigned i = 0; i < 3; ++i)
        planes.push_back(plane(o, {one, -zeta_pow(i), o}));
    for (unsigned i = 0; i < 3; ++i)
        planes.push_back(plane(o, {one, o, -zeta_pow(i)}));
    for (unsigned i = 0; i < 3; ++i)
        planes.push_back(plane(o, {o, one, -zeta_pow(i)}));
    return Arrangement::build(3, 3, std::move(planes));
}

std::vector<CatalogEntry> make_catalog()
{
    std::vector<CatalogEntry> c;
    c.push_back({"selberg",
                 "Selberg arrangement Q = xy(x-y)(x-1)(y-1) in C^2; a decone of the rank-3 braid arrangement",
                 selberg(), 6, "Milnor fiber of the rank-3 braid arrangement"});
    c.push_back({"maclane",
                 "MacLane (8_3) configuration Q = xy(y-x)z(z-x-w^2y)(z+wy)(z-x)(z+w^2x+wy), w = zeta_3, central in C^3",
                 maclane(), std::nullopt, ""});
    c.push_back({"maclane-decone",
                 "MacLane configuration deconed at x (x = 1), 7 lines in C^2 over Q(zeta_3)",
                 maclane_decone(), 8, "Milnor fiber of the MacLane arrangement"});
    c.push_back({"hessian",
                 "Hessian configuration Q = x1 x2 x3 prod_{i,j} (x1 + w^i x2 + w^j x3), w = zeta_3, central in C^3",
                 hessian(), std::nullopt, ""});
    c.push_back({"hessian-decone",
                 "Hessian configuration deconed at x1 (x1 = 1), 11 lines in C^2 over Q(zeta_3)",
                 hessian_decone(), 12, "Milnor fiber of the Hessian arrangement"});
    c.push_back({"ceva3",
                 "Ceva(3) arrangement Q = (x^3-y^3)(x^3-z^3)(y^3-z^3), central in C^3",
                 ceva3(), std::nullopt, ""});
    return c;
}

} // namespace

const std::vector<CatalogEntry>& catalog()
{
    static const std::vector<CatalogEntry> entries = make_catalog();
    return entries;
}

const CatalogEntry* find_catalog_entry(std::string_view key)
{
    for (const auto& e : catalog())
        if (e.key == key)
            return &e;
    return nullptr;
}

} // namespace arrcover::cli
