"""
Truncation Oracle Module

Brute-force graded dimensions of a quadratic quiver algebra: paths of length q
modulo the degree-q part of the two-sided ideal generated by the path-space
relations, computed exactly over Q. The ideal is homogeneous for the lifted
displacement, so every degree splits into independent blocks.
"""

import logging
import os
from collections import defaultdict
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .dimensions import ROUTE_ORACLE, HilbertMatrix
from .presentation import PathGroup, QuadraticPresentation
from ..lattice.rational import rref
from ..utils.exceptions import TruncationTooLarge

logger = logging.getLogger(__name__)

DEFAULT_MAX_CELLS = 200000

Path = Tuple[int, ...]
BlockKey = Tuple[Tuple[int, ...], int]
Row = Dict[Path, Fraction]


def max_cells_from_env() -> int:
    return int(os.environ.get('HTK_MAX_CELLS', DEFAULT_MAX_CELLS))


def _reduce_block(rows: List[Row], paths: List[Path]) -> List[Row]:
    """Echelon basis of the span of rows, as sparse rows."""
    if not rows:
        return []
    column = {path: j for j, path in enumerate(paths)}
    dense = []
    for row in rows:
        values = [Fraction(0)] * len(paths)
        for path, coefficient in row.items():
            values[column[path]] += coefficient
        dense.append(values)
    echelon, _ = rref(dense, len(paths))
    return [{paths[j]: v for j, v in enumerate(r) if v} for r in echelon]


class TruncationOracle:
    """
    Degree-by-degree quotient tower for one presentation.

    Args:
        presentation: Presentation of H or H!
        max_cells: Cap on the number of paths handled in one degree
    """

    def __init__(self, presentation: QuadraticPresentation, max_cells: Optional[int] = None):
        self.presentation = presentation
        self.max_cells = max_cells_from_env() if max_cells is None else max_cells
        self.n = presentation.n
        self._out: Dict[int, List[int]] = defaultdict(list)
        for arrow in presentation.arrows:
            self._out[arrow.source].append(arrow.index)
        self._groups_from: Dict[int, List[PathGroup]] = defaultdict(list)
        for group in presentation.groups:
            if presentation.path_relations(group):
                self._groups_from[group.source].append(group)

    def _step(self, key: BlockKey, arrow_index: int) -> BlockKey:
        arrow = self.presentation.arrows[arrow_index]
        displacement = list(key[0])
        displacement[arrow.coordinate] += arrow.sign
        return tuple(displacement), arrow.target

    def source_dims(self, source: int, truncation: int) -> Dict[int, List[int]]:
        """
        Graded dimensions from one source class, summed over lifts per target class.

        Raises:
            TruncationTooLarge: If some degree has more paths than max_cells
        """
        start: BlockKey = (tuple([0] * self.n), source)
        paths: List[Dict[BlockKey, List[Path]]] = [{start: [()]}]
        ideal: List[Dict[BlockKey, List[Row]]] = [{}]
        dims: Dict[int, List[int]] = defaultdict(lambda: [0] * (truncation + 1))
        dims[source][0] = 1

        for q in range(1, truncation + 1):
            current: Dict[BlockKey, List[Path]] = defaultdict(list)
            for key, block in paths[q - 1].items():
                for arrow in self._out[key[1]]:
                    target_key = self._step(key, arrow)
                    current[target_key].extend(path + (arrow,) for path in block)
            total = sum(len(block) for block in current.values())
            if total > self.max_cells:
                raise TruncationTooLarge(
                    f"degree {q} has {total} paths, above the cap {self.max_cells}",
                    {'degree': q, 'paths': total, 'max_cells': self.max_cells},
                )

            generators: Dict[BlockKey, List[Row]] = defaultdict(list)
            for key, rows in ideal[q - 1].items():
                for arrow in self._out[key[1]]:
                    target_key = self._step(key, arrow)
                    for row in rows:
                        generators[target_key].append(
                            {path + (arrow,): c for path, c in row.items()}
                        )
            if q >= 2:
                for key, block in paths[q - 2].items():
                    for group in self._groups_from[key[1]]:
                        target_key = (
                            tuple(a + b for a, b in zip(key[0], group.displacement)),
                            group.target,
                        )
                        for relation in self.presentation.path_relations(group):
                            for prefix in block:
                                generators[target_key].append({
                                    prefix + pair: c
                                    for pair, c in zip(group.paths, relation) if c
                                })

            reduced: Dict[BlockKey, List[Row]] = {}
            for key, block in current.items():
                block.sort()
                reduced[key] = _reduce_block(generators.get(key, []), block)
                dims[key[1]][q] += len(block) - len(reduced[key])
            paths.append(dict(current))
            ideal.append(reduced)
            logger.debug(f"Source {source} degree {q}: {total} paths in {len(current)} blocks")
        return dims


def truncated_dims_oracle(presentation: QuadraticPresentation, truncation: int,
                          max_cells: Optional[int] = None) -> HilbertMatrix:
    """
    Graded dimensions of a presentation up to a truncation degree by exact linear algebra.

    Args:
        presentation: Presentation of H or H!
        truncation: Highest degree Q
        max_cells: Cap on paths per degree; HTK_MAX_CELLS when omitted

    Returns:
        HilbertMatrix with route 'oracle'

    Raises:
        TruncationTooLarge: If the work exceeds the cap
    """
    oracle = TruncationOracle(presentation, max_cells)
    matrix = HilbertMatrix.zeros(presentation.labels, truncation, ROUTE_ORACLE,
                                 presentation.algebra)
    for source in range(len(presentation.labels)):
        for target, values in oracle.source_dims(source, truncation).items():
            matrix.entries[source][target] = list(values)
    logger.info(f"Oracle for {presentation.algebra} finished up to degree {truncation}")
    return matrix
