#pragma once

// Closed first-order formulas over the one-function signature (equality and
// f only, no extra predicates) so every entry is eligible for both oracle
// sweeps and the separation-logic reductions. Mix of finitely satisfiable
// and finitely unsatisfiable sentences; several need nested f-applications.

#include <array>
#include <string>

namespace corpus {

inline const std::array<std::string, 30> kFoSentences = {
    "forall y . f(y) = y",
    "exists x . f(x) = x",
    "forall y . forall z . (f(y) = f(z)) -> y = z",
    "exists x . forall y . !(x = f(y))",
    "(exists x . forall y . !(x = f(y))) & (forall y . forall z . (f(y) = f(z)) -> y = z)",
    "forall x . f(f(x)) = x",
    "exists x . !(f(f(x)) = x)",
    "forall x . f(f(f(x))) = x",
    "exists x . exists y . !(x = y)",
    "forall x . forall y . x = y",
    "(exists x . exists y . !(x = y)) & (forall x . forall y . x = y)",
    "exists x . (f(f(x)) = x) & !(f(x) = x)",
    "forall x . exists y . f(y) = x",
    "(forall x . exists y . f(y) = x) & (exists x . exists y . !(x = y) & f(x) = f(y))",
    "exists x . (f(x) = x) & (forall y . (f(y) = y) -> y = x)",
    "forall x . !(f(x) = x)",
    "(forall x . !(f(x) = x)) & (forall x . f(f(x)) = x)",
    "(forall x . !(f(x) = x)) & (forall x . f(f(f(x))) = x)",
    "((forall x . !(f(x) = x)) & (forall x . f(f(x)) = x)) & (exists x . exists y . exists z . (!(x = y) & !(y = z)) & !(x = z))",
    "exists x . f(f(f(f(x)))) = x",
    "forall x . (f(f(f(f(x)))) = x) & !(f(f(x)) = x)",
    "exists x . exists y . (f(f(x)) = f(y)) & !(x = y)",
    "forall x . forall y . f(x) = f(y)",
    "(forall x . forall y . f(x) = f(y)) & (forall x . !(f(x) = x))",
    "forall x . exists y . f(f(y)) = x",
    "exists x . forall y . f(y) = x",
    "exists x . !(f(x) = x) & (f(f(x)) = f(x))",
    "forall x . (f(x) = x) | (f(f(x)) = x)",
    "exists x . exists y . exists z . ((!(x = y) & !(y = z)) & !(x = z)) & ((f(x) = y & f(y) = z) & f(z) = x)",
    "(exists x . exists y . exists z . ((!(x = y) & !(y = z)) & !(x = z)) & ((f(x) = y & f(y) = z) & f(z) = x)) & (forall x . forall y . x = y)",
};

}  // namespace corpus
