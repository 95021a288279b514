#include "specfac/extremal.hpp"

#include <stdexcept>

namespace specfac {

Graph build_extremal(const ExtremalSpec& spec) {
    if (!spec.valid())
        throw std::invalid_argument("build_extremal: negative part size");
    const std::int64_t s = spec.s;
    const std::int64_t c = spec.clique_part();
    const std::int64_t m = spec.isolated_part();
    Graph g(static_cast<std::size_t>(s + c + m));
    // separator [0,s) is complete and joined to everything
    for (std::int64_t u = 0; u < s; ++u)
        for (std::int64_t v = u + 1; v < s + c + m; ++v)
            g.add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
    // clique [s, s+c)
    for (std::int64_t u = s; u < s + c; ++u)
        for (std::int64_t v = u + 1; v < s + c; ++v)
            g.add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
    return g;
}

Rat threshold_A(std::int64_t delta, const FamilyParams& p) {
    if (delta < 1) throw std::invalid_argument("threshold_A: delta >= 1 required");
    const std::int64_t k = p.k, r = p.r;
    const Rat first((k + r) * (k + 2 * r) * (k * delta + k + r), k * k * r);
    const Rat second(2 * k * r * delta * delta + (2 * k * k + k * r + 2 * r * r) * delta +
                         k * k + 3 * k * r - 2 * r * r,
                     2 * r * (k - r));
    return max(first, second);
}

Rat threshold_Q(std::int64_t delta, const FamilyParams& p) {
    if (delta < 1) throw std::invalid_argument("threshold_Q: delta >= 1 required");
    const std::int64_t k = p.k, r = p.r;
    const Rat first((k + r) * (k + 2 * r) * (k * delta + k + r), k * k * r);
    const Rat second((k * k + 2 * k * r) * delta * delta +
                         (2 * k * k + 3 * k * r + 2 * r * r) * delta + k * k + 3 * k * r,
                     2 * r * (k - r));
    return max(first, second);
}

std::int64_t min_order_A(std::int64_t delta, const FamilyParams& p) {
    return threshold_A(delta, p).ceil();
}

std::int64_t min_order_Q(std::int64_t delta, const FamilyParams& p) {
    return threshold_Q(delta, p).ceil();
}

std::int64_t f_value(std::int64_t s, std::int64_t n, std::int64_t k, std::int64_t r) {
    return (k * k + 2 * k * r) * s * s - (2 * k * r * n - 2 * r * r - k * r) * s +
           r * r * n * n - 2 * r * r * n + r * r;
}

std::int64_t g_value(std::int64_t s, std::int64_t n, std::int64_t k, std::int64_t r) {
    return (k * k + 2 * k * r) * s * s - (2 * k * r * n - k * r - 2 * r * r) * s +
           2 * r * r * n * n - 4 * r * r * n + 2 * r * r;
}

std::int64_t f_alt_expansion(std::int64_t delta, std::int64_t n, std::int64_t k,
                               std::int64_t r) {
    const std::int64_t lead = r * n - k * delta - 2 * r;
    return lead * lead - 2 * r * (k - r) * n + 2 * k * r * delta * delta +
           (2 * k * k + k * r + 2 * r * r) * delta + k * k + 3 * k * r - 2 * r * r;
}

std::int64_t g_alt_expansion(std::int64_t delta, std::int64_t n, std::int64_t k,
                               std::int64_t r) {
    const std::int64_t lead = r * n - k * delta - 2 * r;
    return 2 * r * (n - 1) * lead -
           (2 * r * (k - r) * n - (k * k + 2 * k * r) * delta * delta -
            (2 * k * k + 3 * k * r + 2 * r * r) * delta - k * k - 3 * k * r);
}

} // namespace specfac
