"""
Corpus Module

Deterministic pseudo-random generation of smooth unimodular problem specs for
property sweeps. Specs are stratified by k, and embeddings are built directly
in unimodular form instead of being rejection-sampled from arbitrary matrices.
"""

import logging
import random
from typing import List, Optional

from sympy import primerange

from ..arrangement.enumeration import enumerate_classes, is_smooth
from ..arrangement.parameter import make_parameter
from ..arrangement.periodic import PeriodicArrangement
from ..lattice.embedding import is_unimodular, validate_embedding
from ..utils.exceptions import ExhaustedRejectionBudget, HypertoricError
from .spec_models import CorpusBounds, ProblemSpec, SpecOptions

logger = logging.getLogger(__name__)

ATTEMPTS_PER_SPEC = 50
ANCHOR_TRIES = 30
PROJECTIVE_PLANE = [[1], [1], [1]]


def _stratum_sizes(bounds: CorpusBounds, k: int) -> range:
    """Admissible n for a given k, preferring n > k so there is more than one chamber."""
    low = max(bounds.n_min, k, 1)
    if 0 < k < bounds.n_max:
        low = max(low, k + 1)
    return range(low, bounds.n_max + 1)


def _column_transform(rng: random.Random, rho: List[List[int]], k: int) -> List[List[int]]:
    """Apply a few random elementary GL_k(Z) column operations."""
    out = [list(row) for row in rho]
    for _ in range(rng.randint(0, 2)):
        op = rng.choice(('swap', 'negate', 'add'))
        i = rng.randrange(k)
        j = rng.randrange(k)
        if op == 'swap':
            for row in out:
                row[i], row[j] = row[j], row[i]
        elif op == 'negate':
            for row in out:
                row[i] = -row[i]
        elif i != j:
            sign = rng.choice((-1, 1))
            for row in out:
                row[i] += sign * row[j]
    return out


def _draw_rho(rng: random.Random, n: int, k: int, entry_max: int) -> List[List[int]]:
    """
    Draw rho = P (I_k ; B) U with B a nonzero-rowed {-1, 0, 1} block.

    P permutes coordinates and flips their signs, U is a product of elementary
    column operations. The identity block makes rho^T surjective onto Z^k;
    unimodularity still depends on B and is checked by the caller.
    """
    if k == 0:
        return [[] for _ in range(n)]
    rows = [[1 if i == j else 0 for j in range(k)] for i in range(k)]
    for _ in range(n - k):
        row = [0] * k
        while not any(row):
            row = [rng.choice((-1, 0, 1)) for _ in range(k)]
        rows.append(row)
    rng.shuffle(rows)
    rows = [[-v for v in row] if rng.random() < 0.5 else row for row in rows]

    transformed = _column_transform(rng, rows, k)
    if max(abs(v) for row in transformed for v in row) <= entry_max:
        return transformed
    return rows


def corpus_generate(seed: int, count: int,
                    bounds: Optional[CorpusBounds] = None) -> List[ProblemSpec]:
    """
    Generate smooth unimodular specs, cycling through k = k_min..k_max.

    The first n = 3, k = 1 draw of a corpus is anchored at rho = (1, 1, 1)^T
    until a smooth lambda for it is found (or the anchor tries run out).

    Args:
        seed: Seed of the generator; equal seeds give identical corpora
        count: Number of specs
        bounds: Ranges for n, k, p and the entries of rho

    Returns:
        List of ProblemSpec

    Raises:
        ExhaustedRejectionBudget: If fewer than count specs are found in count * 50 attempts
    """
    bounds = bounds or CorpusBounds()
    rng = random.Random(seed)
    primes = [int(q) for q in primerange(2, bounds.p_max + 1)]
    ranks = list(range(bounds.k_min, min(bounds.k_max, bounds.n_max) + 1))
    budget = count * ATTEMPTS_PER_SPEC
    anchor_tries = ANCHOR_TRIES
    specs: List[ProblemSpec] = []

    for attempt in range(budget):
        if len(specs) == count:
            break
        k = ranks[len(specs) % len(ranks)]
        n = rng.choice(_stratum_sizes(bounds, k))
        anchored = (n, k) == (3, 1) and anchor_tries > 0
        if anchored:
            anchor_tries -= 1
            rho = [list(row) for row in PROJECTIVE_PLANE]
        else:
            rho = _draw_rho(rng, n, k, bounds.entry_max)
        p = rng.choice(primes)
        lam = [rng.randrange(p) for _ in range(k)]

        try:
            embedding = validate_embedding(rho, n=n, k=k)
        except HypertoricError:
            continue
        if not is_unimodular(embedding):
            logger.debug(f"Attempt {attempt}: rho={rho} is not unimodular")
            continue

        arrangement = PeriodicArrangement(embedding, make_parameter(lam, p), seed=seed)
        enumeration = enumerate_classes(arrangement, verify=False)
        if not is_smooth(enumeration).smooth:
            logger.debug(f"Attempt {attempt}: lambda={lam} is not smooth")
            continue

        if anchored:
            anchor_tries = 0
        specs.append(ProblemSpec(rho=rho, lam=lam, p=p, k=k,
                                 options=SpecOptions(seed=seed),
                                 name=f"corpus-{seed}-{len(specs)}"))

    if len(specs) < count:
        raise ExhaustedRejectionBudget(
            f"found {len(specs)} of {count} specs in {budget} attempts",
            {'found': len(specs), 'count': count, 'budget': budget},
        )
    logger.info(f"Generated {count} corpus specs from seed {seed}")
    return specs
