"""
Quadratic Presentation Module

This module builds the quiver presentations of H and its quadratic dual H! on
the chamber classes. Relations are kept twice: symbolically, with the central
base symbols s_i (for H) or t_i (for H!), and eliminated into path space,
grouped by source class and lifted displacement.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from ..arrangement.enumeration import ChamberEnumeration
from ..lattice.rational import nullspace, rref

logger = logging.getLogger(__name__)

IntVector = Tuple[int, ...]
RatVector = Tuple[Fraction, ...]
GroupKey = Tuple[int, IntVector]

ALGEBRA_H = 'H'
ALGEBRA_H_DUAL = 'H!'


@dataclass(frozen=True)
class Arrow:
    """Degree-one generator from class `source` across hyperplane `coordinate`."""

    index: int
    source: int
    target: int
    coordinate: int
    sign: int
    name: str

    def displacement(self, n: int) -> IntVector:
        return tuple(self.sign if i == self.coordinate else 0 for i in range(n))


@dataclass(frozen=True)
class Relation:
    """
    A symbolic relation: sum of coefficient * word = 0.

    Words are arrow names in travel order; a base symbol times an idempotent
    is the single-letter word like "s2@A".
    """

    kind: str
    source: int
    target: int
    terms: Tuple[Tuple[Fraction, Tuple[str, ...]], ...]

    @property
    def degree(self) -> int:
        degrees = {2 if word[0][0] in "st" else len(word) for _, word in self.terms}
        return degrees.pop() if len(degrees) == 1 else -1

    def to_dict(self, labels: List[str]) -> Dict:
        return {
            'kind': self.kind,
            'source': labels[self.source],
            'target': labels[self.target],
            'terms': [{'coefficient': str(c), 'path': list(w)} for c, w in self.terms],
        }


@dataclass
class PathGroup:
    """
    Length-two paths sharing a source class and a lifted displacement.

    Attributes:
        source: Source class index
        target: Target class index
        displacement: Lift of the endpoint minus the source representative
        paths: Pairs of arrow indices in travel order
        relations: Path-space relation rows, in echelon form
    """

    source: int
    target: int
    displacement: IntVector
    paths: List[Tuple[int, int]]
    relations: List[RatVector] = field(default_factory=list)

    @property
    def key(self) -> GroupKey:
        return (self.source, self.displacement)

    @property
    def is_loop(self) -> bool:
        return not any(self.displacement)


@dataclass
class QuadraticPresentation:
    """
    Presentation of H or H! on the chamber classes.

    Attributes:
        algebra: 'H' or 'H!'
        labels: Class labels (vertices)
        arrows: Degree-one generators
        base_symbols: s1..sn or t1..tn
        base_relations: Coefficient rows of the linear relations among base symbols
        relations: Symbolic quadratic relations
        groups: Length-two path groups carrying the path-space relations
        n: Number of coordinates
        warnings: Stamps such as 'non_smooth_parameter'
    """

    algebra: str
    labels: List[str]
    arrows: List[Arrow]
    base_symbols: List[str]
    base_relations: List[IntVector]
    relations: List[Relation]
    groups: List[PathGroup]
    n: int
    warnings: List[str] = field(default_factory=list)

    def arrows_from(self, source: int) -> List[Arrow]:
        return [a for a in self.arrows if a.source == source]

    def path_relations(self, group: PathGroup) -> List[RatVector]:
        return group.relations

    def path_name(self, path: Tuple[int, ...]) -> Tuple[str, ...]:
        return tuple(self.arrows[a].name for a in path)

    def to_dict(self) -> Dict:
        return {
            'algebra': self.algebra,
            'vertices': list(self.labels),
            'arrows': [
                {
                    'name': a.name,
                    'source': self.labels[a.source],
                    'target': self.labels[a.target],
                    'coordinate': a.coordinate + 1,
                    'sign': a.sign,
                }
                for a in self.arrows
            ],
            'base_symbols': list(self.base_symbols),
            'base_relations': [list(r) for r in self.base_relations],
            'relations': [r.to_dict(self.labels) for r in self.relations],
            'warnings': list(self.warnings),
        }


def _arrow_name(letter: str, coordinate: int, sign: int, label: str) -> str:
    return f"{letter}{coordinate + 1}{'+' if sign > 0 else '-'}@{label}"


def build_arrows(enumeration: ChamberEnumeration, letter: str) -> List[Arrow]:
    labels = [c.label for c in enumeration.classes]
    return [
        Arrow(index=index, source=e.source, target=e.target, coordinate=e.coordinate,
              sign=e.sign, name=_arrow_name(letter, e.coordinate, e.sign, labels[e.source]))
        for index, e in enumerate(enumeration.graph.edges)
    ]


def path_groups(enumeration: ChamberEnumeration, arrows: List[Arrow]) -> List[PathGroup]:
    """Group length-two paths by source class and lifted displacement."""
    n = enumeration.arrangement.n
    grouped: Dict[GroupKey, PathGroup] = {}
    for first in arrows:
        for second in arrows:
            if second.source != first.target:
                continue
            displacement = tuple(
                a + b for a, b in zip(first.displacement(n), second.displacement(n))
            )
            key = (first.source, displacement)
            if key not in grouped:
                grouped[key] = PathGroup(source=first.source, target=second.target,
                                         displacement=displacement, paths=[])
            grouped[key].paths.append((first.index, second.index))

    groups = [grouped[key] for key in sorted(grouped)]
    for group in groups:
        group.paths.sort()
    return groups


def _base_coordinate(symbol: str) -> int:
    return int(symbol.split('@')[0][1:]) - 1


def _eliminate(entries: List[Tuple[List[Fraction], List[Fraction]]], size: int,
               n: int) -> List[RatVector]:
    """Echelon basis of the combinations of (path, base) rows whose base part cancels."""
    if not entries:
        return []
    base_columns = [[base[i] for _, base in entries] for i in range(n)]
    combinations = nullspace(base_columns, len(entries))
    rows = [
        tuple(sum((y[r] * entries[r][0][c] for r in range(len(entries))), Fraction(0))
              for c in range(size))
        for y in combinations
    ]
    return rref(rows, size)[0]


def derive_path_relations(presentation: QuadraticPresentation) -> None:
    """
    Fill every path group's relation rows from the symbolic relations.

    Each relation splits into a path part and a base-symbol part. At a class
    with loops the base relations join with an empty path part, and the rows
    kept are the combinations in which every base symbol cancels. Relations
    made only of base symbols at a class without loops touch no group.

    Args:
        presentation: Presentation whose groups are overwritten in place

    Raises:
        ValueError: If a relation mixes paths of different groups
    """
    n = presentation.n
    position: Dict[Tuple[str, ...], Tuple[GroupKey, int]] = {}
    for group in presentation.groups:
        for column, path in enumerate(group.paths):
            position[presentation.path_name(path)] = (group.key, column)
    loop_keys = {g.source: g.key for g in presentation.groups if g.is_loop}
    sizes = {g.key: len(g.paths) for g in presentation.groups}

    entries: Dict[GroupKey, List[Tuple[List[Fraction], List[Fraction]]]] = defaultdict(list)
    for relation in presentation.relations:
        key: Optional[GroupKey] = None
        path_part: Dict[int, Fraction] = defaultdict(Fraction)
        base_part = [Fraction(0)] * n
        for coefficient, word in relation.terms:
            if len(word) == 1:
                here = loop_keys.get(relation.source)
                base_part[_base_coordinate(word[0])] += coefficient
            else:
                here, column = position[word]
                path_part[column] += coefficient
            if key is not None and here is not None and here != key:
                raise ValueError(f"{relation.kind} relation at {relation.source} mixes path groups")
            key = key if key is not None else here
        if key is None:
            continue
        row = [path_part.get(c, Fraction(0)) for c in range(sizes[key])]
        entries[key].append((row, base_part))

    for key in loop_keys.values():
        for base_row in presentation.base_relations:
            entries[key].append(([Fraction(0)] * sizes[key], [Fraction(v) for v in base_row]))

    for group in presentation.groups:
        group.relations = _eliminate(entries.get(group.key, []), len(group.paths), n)


def _base_relations(enumeration: ChamberEnumeration, algebra: str) -> List[IntVector]:
    embedding = enumeration.arrangement.embedding
    if algebra == ALGEBRA_H:
        return [tuple(embedding.rho[i][j] for i in range(embedding.n)) for j in range(embedding.k)]
    return list(enumeration.arrangement.lattices.tperp_basis)


def _symbolic_relations(enumeration: ChamberEnumeration, arrows: List[Arrow],
                        groups: List[PathGroup], algebra: str) -> List[Relation]:
    labels = [c.label for c in enumeration.classes]
    n = enumeration.arrangement.n
    base = 's' if algebra == ALGEBRA_H else 't'
    sign_two = Fraction(-1) if algebra == ALGEBRA_H else Fraction(1)
    relations: List[Relation] = []

    def word(path: Tuple[int, int]) -> Tuple[str, ...]:
        return tuple(arrows[a].name for a in path)

    for group in groups:
        if group.is_loop:
            label = labels[group.source]
            if algebra == ALGEBRA_H:
                for path in group.paths:
                    i = arrows[path[0]].coordinate
                    relations.append(Relation(
                        kind='wall-cross', source=group.source, target=group.source,
                        terms=((Fraction(1), word(path)), (Fraction(-1), (f"s{i + 1}@{label}",))),
                    ))
            else:
                for i in range(n):
                    loops = [p for p in group.paths if arrows[p[0]].coordinate == i]
                    terms = tuple((Fraction(1), word(p)) for p in loops)
                    relations.append(Relation(
                        kind='wall-crossbang', source=group.source, target=group.source,
                        terms=terms + ((Fraction(-1), (f"t{i + 1}@{label}",)),),
                    ))
            continue

        if len(group.paths) == 2:
            first = arrows[group.paths[0][0]]
            second = arrows[group.paths[0][1]]
            kind = 'codim1' if first.sign == second.sign else 'codim2'
            if algebra == ALGEBRA_H_DUAL:
                kind += 'bang'
            relations.append(Relation(
                kind=kind, source=group.source, target=group.target,
                terms=((Fraction(1), word(group.paths[0])), (sign_two, word(group.paths[1]))),
            ))
        elif algebra == ALGEBRA_H_DUAL:
            relations.append(Relation(
                kind='doublestep', source=group.source, target=group.target,
                terms=((Fraction(1), word(group.paths[0])),),
            ))

    # classes without loops: every t_i e_x vanishes
    if algebra == ALGEBRA_H_DUAL:
        with_loops = {g.source for g in groups if g.is_loop}
        for c in range(len(labels)):
            if c in with_loops:
                continue
            for i in range(n):
                relations.append(Relation(
                    kind='wall-crossbang', source=c, target=c,
                    terms=((Fraction(-1), (f"{base}{i + 1}@{labels[c]}",)),),
                ))
    return relations


def _build(enumeration: ChamberEnumeration, algebra: str,
           smooth: Optional[bool]) -> QuadraticPresentation:
    letter = 'c' if algebra == ALGEBRA_H else 'd'
    base = 's' if algebra == ALGEBRA_H else 't'
    arrows = build_arrows(enumeration, letter)
    groups = path_groups(enumeration, arrows)
    relations = _symbolic_relations(enumeration, arrows, groups, algebra)
    n = enumeration.arrangement.n

    warnings = []
    if smooth is False:
        logger.warning(
            f"Building {algebra} at a non-smooth parameter; quadratic relations may not generate"
        )
        warnings.append('non_smooth_parameter')

    presentation = QuadraticPresentation(
        algebra=algebra,
        labels=[c.label for c in enumeration.classes],
        arrows=arrows,
        base_symbols=[f"{base}{i + 1}" for i in range(n)],
        base_relations=_base_relations(enumeration, algebra),
        relations=relations,
        groups=groups,
        n=n,
        warnings=warnings,
    )
    derive_path_relations(presentation)
    logger.info(
        f"Built {algebra}: {len(arrows)} arrows, {len(relations)} relations, "
        f"{len(groups)} path groups"
    )
    return presentation


def build_H(enumeration: ChamberEnumeration,
            smooth: Optional[bool] = None) -> QuadraticPresentation:
    """
    Presentation of H: wall-crossing loops equal s_i, squares commute.

    Args:
        enumeration: Output of enumerate_classes
        smooth: Smoothness of the parameter, when known

    Returns:
        QuadraticPresentation
    """
    return _build(enumeration, ALGEBRA_H, smooth)


def build_H_dual(enumeration: ChamberEnumeration,
                 smooth: Optional[bool] = None) -> QuadraticPresentation:
    """
    Presentation of H!: loops sum to t_i, squares anticommute, unique length-two paths vanish.

    Args:
        enumeration: Output of enumerate_classes
        smooth: Smoothness of the parameter, when known

    Returns:
        QuadraticPresentation
    """
    return _build(enumeration, ALGEBRA_H_DUAL, smooth)
