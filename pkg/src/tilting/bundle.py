"""
Tilting Bundle Module

This module labels the line-bundle summands of the tilting bundle by chamber
classes and checks, on monomial sections, that c_{x,y} -> m^p(y - x) and
s_i -> z_i w_i respect the relations of H-bar.
"""

import logging
import random
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from ..algebra.dimensions import hom_dims_H
from ..algebra.presentation import ALGEBRA_H, QuadraticPresentation, Relation
from ..arrangement.enumeration import ChamberEnumeration
from ..arrangement.parameter import eta
from ..lattice.rational import rational_rank
from ..utils.exceptions import RelationMismatch

logger = logging.getLogger(__name__)

IntVector = Tuple[int, ...]


@dataclass(frozen=True)
class LineBundleLabel:
    """Summand l(x-bar) of the tilting bundle."""

    label: str
    class_key: IntVector


@dataclass(frozen=True)
class MonomialSection:
    """
    Monomial prod z_i^z[i] * w_i^w[i] in the coordinate ring.

    Attributes:
        z: Exponents of z_1..z_n
        w: Exponents of w_1..w_n
    """

    z: IntVector
    w: IntVector

    @classmethod
    def of(cls, vector: Sequence[int]) -> "MonomialSection":
        """m^p(v): z_i^v_i for v_i > 0 and w_i^-v_i for v_i < 0."""
        return cls(z=tuple(max(v, 0) for v in vector), w=tuple(max(-v, 0) for v in vector))

    @classmethod
    def zw_power(cls, exponents: Sequence[int]) -> "MonomialSection":
        """prod_i (z_i w_i)^e_i."""
        return cls(z=tuple(exponents), w=tuple(exponents))

    @property
    def degree(self) -> int:
        return sum(self.z) + sum(self.w)

    @property
    def is_pure(self) -> bool:
        """No coordinate carries both a z and a w exponent."""
        return all(a == 0 or b == 0 for a, b in zip(self.z, self.w))

    def __mul__(self, other: "MonomialSection") -> "MonomialSection":
        return MonomialSection(
            z=tuple(a + b for a, b in zip(self.z, other.z)),
            w=tuple(a + b for a, b in zip(self.w, other.w)),
        )

    def render(self) -> str:
        factors = []
        for i, (a, b) in enumerate(zip(self.z, self.w)):
            if a:
                factors.append(f"z{i + 1}" + (f"^{a}" if a > 1 else ""))
            if b:
                factors.append(f"w{i + 1}" + (f"^{b}" if b > 1 else ""))
        return "*".join(factors) or "1"


def section(x: Sequence[int], y: Sequence[int]) -> MonomialSection:
    """
    The section m^p(y - x) representing c_{x,y}.

    Args:
        x: Source chamber
        y: Target chamber

    Returns:
        MonomialSection of degree |y - x|_1
    """
    return MonomialSection.of([b - a for a, b in zip(x, y)])


@dataclass
class TiltingSummary:
    summands: List[LineBundleLabel]
    generator: Optional[bool]
    warnings: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict:
        return {
            'summands': [{'label': s.label, 'class_key': list(s.class_key)} for s in self.summands],
            'generator': self.generator,
            'warnings': list(self.warnings),
        }


def tilting_summands(enumeration: ChamberEnumeration,
                     smooth: Optional[bool] = None) -> TiltingSummary:
    """
    One line bundle per chamber class.

    Args:
        enumeration: Output of enumerate_classes
        smooth: Smoothness of the parameter; the sum generates exactly when smooth

    Returns:
        TiltingSummary
    """
    summands = [LineBundleLabel(label=c.label, class_key=c.key) for c in enumeration.classes]
    warnings = []
    if smooth is False:
        logger.warning("Parameter is not smooth; the line bundles do not generate")
        warnings.append('not_a_generator')
    return TiltingSummary(summands=summands, generator=smooth, warnings=warnings)


@dataclass
class VerificationReport:
    """Outcome of a batch of monomial identities."""

    checked: int = 0
    failures: List[Dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> Dict:
        return {'passed': self.passed, 'checked': self.checked, 'failures': list(self.failures)}


def _arrow_vectors(presentation: QuadraticPresentation) -> Dict[str, IntVector]:
    return {a.name: a.displacement(presentation.n) for a in presentation.arrows}


def _word_monomial(word: Tuple[str, ...], vectors: Dict[str, IntVector], n: int) -> MonomialSection:
    if word[0][0] == 's':
        i = int(word[0][1:].split('@')[0]) - 1
        return MonomialSection.zw_power([1 if j == i else 0 for j in range(n)])
    product = MonomialSection.of([0] * n)
    for name in word:
        product = product * MonomialSection.of(vectors[name])
    return product


def _relation_holds(relation: Relation, vectors: Dict[str, IntVector], n: int) -> bool:
    monomials = {_word_monomial(word, vectors, n) for _, word in relation.terms}
    return len(monomials) == 1 and sum(c for c, _ in relation.terms) == 0


def verify_end_iso(presentation: QuadraticPresentation,
                   raise_on_failure: bool = True) -> VerificationReport:
    """
    Substitute monomial sections into every relation of H-bar.

    Also checks m^p(b) m^p(b') = prod (z_i w_i)^eta_i m^p(b + b') for every
    length-two path, with eta computed from the chamber walk 0 -> b -> b + b'.

    Args:
        presentation: Presentation of H
        raise_on_failure: Raise instead of only reporting

    Returns:
        VerificationReport

    Raises:
        RelationMismatch: With the offending relation
        ValueError: If given the presentation of H!
    """
    if presentation.algebra != ALGEBRA_H:
        raise ValueError("verify_end_iso needs the presentation of H")
    n = presentation.n
    vectors = _arrow_vectors(presentation)
    report = VerificationReport()

    for relation in presentation.relations:
        report.checked += 1
        if not _relation_holds(relation, vectors, n):
            report.failures.append(relation.to_dict(presentation.labels))

    origin = tuple([0] * n)
    for group in presentation.groups:
        for first, second in group.paths:
            middle = vectors[presentation.arrows[first].name]
            end = tuple(u + v for u, v in zip(middle, vectors[presentation.arrows[second].name]))
            left = section(origin, middle) * section(middle, end)
            right = MonomialSection.zw_power(eta(origin, middle, end)) * section(origin, end)
            report.checked += 1
            if left != right:
                report.failures.append({'path': list(presentation.path_name((first, second)))})

    if report.passed:
        logger.info(f"Monomial sections satisfy {report.checked} relation instances")
    elif raise_on_failure:
        raise RelationMismatch(f"{len(report.failures)} relation instances fail",
                               {'failures': report.failures[:5]})
    return report


def _random_chamber(enumeration: ChamberEnumeration, rng: random.Random, spread: int) -> IntVector:
    """A random nonempty chamber: a class representative shifted by t-perp."""
    representative = rng.choice(enumeration.classes).representative
    tperp = enumeration.arrangement.lattices.tperp_basis
    chamber = list(representative)
    for row in tperp:
        c = rng.randint(-spread, spread)
        chamber = [a + c * b for a, b in zip(chamber, row)]
    return tuple(chamber)


def verify_general_relation(enumeration: ChamberEnumeration, samples: int = 100,
                            seed: int = 0) -> VerificationReport:
    """c_{x,y} c_{y,u} = prod s_i^eta_i c_{x,u} on monomials, for random chamber triples."""
    rng = random.Random(f"{seed}:general-relation")
    report = VerificationReport()
    for _ in range(samples):
        x, y, u = (_random_chamber(enumeration, rng, 2) for _ in range(3))
        left = section(x, y) * section(y, u)
        right = MonomialSection.zw_power(eta(x, y, u)) * section(x, u)
        report.checked += 1
        if left != right:
            report.failures.append({'x': list(x), 'y': list(y), 'u': list(u)})
    return report


def verify_reverse_shadow(enumeration: ChamberEnumeration, samples: int = 100,
                          seed: int = 0) -> VerificationReport:
    """section(x, y) section(y, x) = prod (z_i w_i)^|x_i - y_i| for random chamber pairs."""
    rng = random.Random(f"{seed}:reverse-shadow")
    report = VerificationReport()
    for _ in range(samples):
        x, y = _random_chamber(enumeration, rng, 2), _random_chamber(enumeration, rng, 2)
        left = section(x, y) * section(y, x)
        right = MonomialSection.zw_power([abs(a - b) for a, b in zip(x, y)])
        report.checked += 1
        if left != right:
            report.failures.append({'x': list(x), 'y': list(y)})
    return report


def _slice_exponents(weight: Sequence[int], degree: int) -> List[Tuple[IntVector, IntVector]]:
    """Exponent pairs (a, b) of z^a w^b with a - b = weight and |a| + |b| = degree."""
    twice = degree + sum(weight)
    if twice < 0 or twice % 2:
        return []
    found = []

    def extend(prefix: List[int], remaining: int) -> None:
        i = len(prefix)
        if i == len(weight):
            if remaining == 0:
                a = tuple(prefix)
                found.append((a, tuple(ai - wi for ai, wi in zip(a, weight))))
            return
        for ai in range(max(weight[i], 0), remaining + 1):
            extend(prefix + [ai], remaining - ai)

    extend([], twice // 2)
    return found


def weight_slice_dimension(rho: Sequence[Sequence[int]], weight: Sequence[int],
                           degree: int) -> int:
    """
    Dimension of the degree part of Q[z, w] / (sum_i rho_ij z_i w_i) in one D-weight.

    Counts the monomials of the slice and subtracts the rank of the moment-map
    ideal there, spanned by each generator times the slice monomials two
    degrees lower.
    """
    monomials = _slice_exponents(weight, degree)
    if not monomials:
        return 0
    k = len(rho[0]) if rho else 0
    if k == 0 or degree < 2:
        return len(monomials)
    column = {m: t for t, m in enumerate(monomials)}
    relations = []
    for a, b in _slice_exponents(weight, degree - 2):
        for j in range(k):
            row = [0] * len(monomials)
            for i, coefficient in enumerate(r[j] for r in rho):
                if coefficient:
                    bumped = (a[:i] + (a[i] + 1,) + a[i + 1:], b[:i] + (b[i] + 1,) + b[i + 1:])
                    row[column[bumped]] += coefficient
            relations.append(row)
    return len(monomials) - rational_rank(relations, len(monomials))


def degree_table(enumeration: ChamberEnumeration, truncation: int) -> List[Dict]:
    """
    Per class pair: generating sections by degree and monomial counts next to hom_dims_H.

    Generators are the sections m^p(u - x) for lifts u of the target class.
    Monomial counts come from the coordinate ring modulo the moment map, one
    D-weight slice u - x per lift, and are compared with the closed form.
    """
    arrangement = enumeration.arrangement
    rho = arrangement.embedding.rho
    rows = []
    for source in enumeration.classes:
        for target in enumeration.classes:
            generators = [0] * (truncation + 1)
            monomials = [0] * (truncation + 1)
            for lift in arrangement.relative_lifts(source.representative, target.representative,
                                                   truncation):
                weight = tuple(u - x for u, x in zip(lift, source.representative))
                generators[section(source.representative, lift).degree] += 1
                for q in range(truncation + 1):
                    monomials[q] += weight_slice_dimension(rho, weight, q)
            expected = hom_dims_H(enumeration, source.index, target.index, truncation)
            rows.append({
                'source': source.label,
                'target': target.label,
                'generators': generators,
                'monomials': monomials,
                'hom_dims_H': expected,
                'matches': monomials == expected,
            })
    mismatched = [(r['source'], r['target']) for r in rows if not r['matches']]
    if mismatched:
        logger.warning(f"Section counts differ from hom_dims_H on {mismatched}")
    return rows


def section_degrees_match(presentation: QuadraticPresentation) -> bool:
    """Every arrow maps to a section of degree one, matching its H-bar degree."""
    origin = tuple([0] * presentation.n)
    return all(
        section(origin, a.displacement(presentation.n)).degree == 1 for a in presentation.arrows
    )
