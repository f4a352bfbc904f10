import random

from medilog.formula.syntax import And, Atom, Bot, Iff, Implies, Med, Not, Or, Top


def random_formula(rng: random.Random, depth: int):
    atoms = ["p", "q", "r", "s", "alpha_1"]
    if depth <= 0 or rng.random() < 0.2:
        return rng.choice(
            [Atom(rng.choice(atoms)), Top(), Bot()]
        )
    kind = rng.randrange(6)
    if kind == 0:
        return Not(random_formula(rng, depth - 1))
    if kind == 1:
        return Med(random_formula(rng, depth - 1))
    left = random_formula(rng, depth - 1)
    right = random_formula(rng, depth - 1)
    return [And, Or, Implies, Iff][kind - 2](left, right)
