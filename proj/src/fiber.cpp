#include "nestgb/fiber.hpp"

#include <random>

#include "nestgb/errors.hpp"

namespace nestgb {

std::vector<Monomial> fiber_walk(const Presentation& pres, const MarkedBasis& moves,
                                 const Monomial& initial, std::uint64_t steps, std::uint64_t seed) {
    require_same_ring(initial.ring(), pres.source, "fiber_walk");
    require_same_ring(moves.ring, pres.source, "fiber_walk");

    Monomial target = evaluate(pres, initial);
    std::vector<Monomial> states;
    states.reserve(steps + 1);
    states.push_back(initial);

    std::mt19937_64 rng(seed);
    std::size_t nmoves = moves.elements.size();
    Monomial cur = initial;
    for (std::uint64_t s = 0; s < steps; ++s) {
        if (nmoves > 0) {
            // rng() % k keeps the stream portable across standard libraries
            std::uint64_t roll = rng() % (2 * nmoves);
            const MarkedBinomial& mv = moves.elements[roll / 2];
            const Monomial& sub = (roll % 2 == 0) ? mv.lead : mv.tail;
            const Monomial& add = (roll % 2 == 0) ? mv.tail : mv.lead;
            if (divides(sub, cur)) cur = mul(quotient(cur, sub), add);
        }
        internal_check(evaluate(pres, cur) == target, "fiber walk left the fiber");
        states.push_back(cur);
    }
    return states;
}

}  // namespace nestgb
