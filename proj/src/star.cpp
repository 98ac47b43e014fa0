#include "cfml/star.hpp"

namespace cfml {

unsigned star_dist(const StarLabel& x, const StarLabel& y)
{
    unsigned sym = 0;
    if (x.a && !y.contains(x.a))
        ++sym;
    if (x.b && !y.contains(x.b))
        ++sym;
    if (y.a && !x.contains(y.a))
        ++sym;
    if (y.b && !x.contains(y.b))
        ++sym;
    return sym;
}

std::uint32_t star_label_intersection(const StarLabel& x, const StarLabel& y)
{
    if (x.a && y.contains(x.a))
        return x.a;
    if (x.b && y.contains(x.b))
        return x.b;
    return 0;
}

Port star_rout(const StarLabel& x, const StarLabel& y)
{
    if (x == y)
        return 0;
    // X ⊆ Y: add the minimal integer of Y \ X; otherwise drop the minimal of X \ Y.
    const bool subset = (!x.a || y.contains(x.a)) && (!x.b || y.contains(x.b));
    if (subset) {
        if (y.a && !x.contains(y.a))
            return y.a;
        return y.b;
    }
    if (x.a && !y.contains(x.a))
        return x.a;
    return x.b;
}

} // namespace cfml
