"""Random stabilizer groups for the property tests."""
from core.pauli import PauliOperator, commutes
from core.stabilizer import StabilizerGenerators, in_group


def random_group(rng, n, r, attempts=2000):
    """Independent commuting signed Paulis, drawn until ``r`` are accepted.

    Falls back to a smaller rank when the draws keep failing.
    """
    gens = []
    current = StabilizerGenerators(n)
    for _ in range(attempts):
        if len(gens) == r:
            break
        candidate = PauliOperator(
            n,
            int(rng.integers(0, 2 ** n)),
            int(rng.integers(0, 2 ** n)),
            2 * int(rng.integers(0, 2)),
        )
        if not candidate.symplectic or in_group(current, candidate.symplectic):
            continue
        if not all(commutes(candidate, g) for g in gens):
            continue
        gens.append(candidate)
        current = StabilizerGenerators(n, tuple(gens))
    return current
