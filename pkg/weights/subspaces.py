import logging
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from core.enumeration import base_digits, chunk_ranges


logger = logging.getLogger(__name__)



def gaussian_binomial(k, r, q):
    """
    [k choose r]_q, the number of r-dimensional subspaces of F_q^k, by exact integer products.
    """
    if r < 0 or r > k:
        return 0
    numerator, denominator = 1, 1
    for i in range(r):
        numerator *= q ** (k - i) - 1
        denominator *= q ** (i + 1) - 1
    return numerator // denominator



@dataclass(frozen=True)
class EchelonBlock:
    """
    A slice of the reduced row echelon r x k matrices sharing one pivot pattern.

    The matrices of a pattern are numbered by the base-q digits of their free entries,
    so (pivots, start, stop) pins down a block reproducibly in every worker.
    """
    k: int
    pivots: tuple
    free: tuple
    start: int
    stop: int

    @property
    def r(self):
        return len(self.pivots)

    @property
    def size(self):
        return self.stop - self.start

    def matrices(self, q):
        """
        The block as an integer array of shape (size, r, k).
        """
        bases = np.zeros((self.size, self.r, self.k), dtype=np.int64)
        for row, pivot in enumerate(self.pivots):
            bases[:, row, pivot] = 1
        if self.free:
            digits = base_digits(range(self.start, self.stop), q, len(self.free))
            for position, (row, column) in enumerate(self.free):
                bases[:, row, column] = digits[:, position]
        return bases



def free_positions(k, pivots):
    """
    Entries of a reduced echelon matrix that may take any value: right of the row's pivot,
    outside every pivot column.
    """
    pivot_set = set(pivots)
    return tuple(
        (row, column)
        for row, pivot in enumerate(pivots)
        for column in range(pivot + 1, k)
        if column not in pivot_set
    )


def echelon_blocks(k, r, q, chunk_size):
    """
    Cover every r-dimensional subspace of F_q^k exactly once, as blocks of at most chunk_size bases.

    Pivot patterns come in lexicographic order, and within a pattern the free entries count up
    in base q; r = 0 yields one empty block standing for the zero subspace.
    """
    blocks = []
    for pivots in combinations(range(k), r):
        free = free_positions(k, pivots)
        for start, stop in chunk_ranges(q ** len(free), chunk_size):
            blocks.append(EchelonBlock(k, pivots, free, start, stop))
    logger.debug("%d-subspaces of F_%d^%d: %d blocks", r, q, k, len(blocks))
    return blocks


def echelon_bases(k, r, q):
    """
    Every reduced echelon r x k basis, in enumeration order, as one (count, r, k) array.
    """
    blocks = echelon_blocks(k, r, q, q ** (r * k) or 1)
    if not blocks:
        return np.zeros((0, r, k), dtype=np.int64)
    return np.concatenate([block.matrices(q) for block in blocks])
