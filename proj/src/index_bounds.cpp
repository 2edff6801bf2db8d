#include "acs/index_bounds.hpp"

namespace acs {

Rational acs_index_constant(long long d) {
    if (d < 2) throw InvalidArgument("acs_index_constant requires d >= 2");
    return Rational(BigInt(2), BigInt(d) * BigInt(d - 1));
}

Rational robust_index_constant(long long d) {
    if (d < 1) throw InvalidArgument("robust_index_constant requires d >= 1");
    const BigInt bd(d);
    return Rational(BigInt(8), bd * BigInt(d + 3) * (bd * BigInt(d + 3) - BigInt(2)));
}

long long veronese_dim(long long d) {
    if (d < 1) throw InvalidArgument("veronese_dim requires d >= 1");
    return d * (d + 3) / 2;
}

IndexConstants make_index_constants(long long ambient_dim) {
    IndexConstants c;
    c.ambient_dim = ambient_dim;
    if (ambient_dim >= 2) c.acs = acs_index_constant(ambient_dim).to_string();
    c.robust = robust_index_constant(ambient_dim).to_string();
    return c;
}

}  // namespace acs
