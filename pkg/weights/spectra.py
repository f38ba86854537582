import logging
from collections import Counter
from dataclasses import dataclass, field

import numpy as np
from django.core.exceptions import ValidationError

from codes.linear import column_profile
from codes.sweeps import message_sweep
from core.enumeration import default_chunk_size, ensure_feasible, sweep_limit
from core.exceptions import DegenerateCodeError
from core.parallel import merge_histograms, run_tasks
from fields.arithmetic import field_from_key

from .subspaces import echelon_blocks, gaussian_binomial


logger = logging.getLogger(__name__)



@dataclass(frozen=True)
class WeightSpectrum:
    """
    A_w, the number of codewords of weight w, for the weights that occur.
    """
    counts: dict

    @property
    def total(self):
        return sum(self.counts.values())

    @property
    def minimum(self):
        return min((w for w in self.counts if w > 0), default=None)



@dataclass(frozen=True)
class HigherSpectrum:
    """
    A_w^(r), the number of r-dimensional subcodes of support weight w.
    """
    r: int
    counts: dict

    @property
    def total(self):
        return sum(self.counts.values())

    @property
    def minimum(self):
        return min(self.counts) if self.counts else None



@dataclass(frozen=True)
class SubspaceSweep:
    r: int
    histogram: dict
    minimum: int
    witness: list = field(default=None)



def _support_task(task):
    key, block, columns, multiplicities = task
    spec = field_from_key(*key)
    bases = block.matrices(spec.order)
    size, r, k = bases.shape

    if r == 0:
        weights = np.zeros(size, dtype=np.int64)
    else:
        values = spec.array(bases.reshape(size * r, k)) @ spec.array(columns)
        support = (values != 0).view(np.ndarray).reshape(size, r, -1).any(axis=1)
        weights = support.astype(np.int64) @ multiplicities

    keys, counts = np.unique(weights, return_counts=True)
    first = int(np.argmin(weights))
    return {int(w): int(c) for w, c in zip(keys, counts)}, int(weights[first]), bases[first].tolist()


def subspace_sweep_size(code, r):
    """
    Estimated field products of an r-subcode sweep: one r x k basis times the distinct columns per subspace.
    """
    k = code.message_basis.shape[0]
    return gaussian_binomial(k, r, code.q) * max(r, 1) * k * column_profile(code.message_basis).count


def subspace_sweep(code, r, jobs=1, force=False):
    """
    Support weights of every r-dimensional subcode, each taken once through its reduced echelon basis.

    The witness is the first basis (in enumeration order) reaching the minimum support.
    """
    basis = code.message_basis
    k = basis.shape[0]
    if not 0 <= r <= k:
        raise ValidationError({"r": [f"r={r} is outside 0..{k}."]})

    profile = column_profile(basis)
    ensure_feasible(f"{r}-subcode sweep of {code}", subspace_sweep_size(code, r), sweep_limit(force))

    tasks = [
        (code.spec.key, block, profile.columns, profile.multiplicities)
        for block in echelon_blocks(k, r, code.q, default_chunk_size())
    ]
    results = run_tasks(_support_task, tasks, jobs)

    histogram = merge_histograms(result[0] for result in results)
    minimum = min(result[1] for result in results)
    witness = next(result[2] for result in results if result[1] == minimum)
    return SubspaceSweep(r, histogram, minimum, witness)


def weight_distribution(code, jobs=1, force=False):
    """
    Exact A_w from all q^k messages.
    """
    return WeightSpectrum(message_sweep(code, jobs=jobs, force=force).histogram)


def higher_weight_spectra(code, r, jobs=1, force=False):
    sweep = subspace_sweep(code, r, jobs=jobs, force=force)
    return HigherSpectrum(r, sweep.histogram)


def all_higher_spectra(code, jobs=1, force=False):
    """
    A^(r) for r = 0..k; r = 0 is the zero subspace alone, {0: 1}.
    """
    k = code.message_basis.shape[0]
    return [higher_weight_spectra(code, r, jobs=jobs, force=force) for r in range(k + 1)]


def closed_form_m2_distribution(q):
    """
    Weight distribution of the full code for m = 2, from the zero counts of the m = 2 polynomials.
    """
    if q < 3:
        raise DegenerateCodeError("The m = 2 distribution needs q >= 3.")
    n = q * (q - 1)
    if q % 2:
        rows = [
            (0, 1),
            ((q - 1) * (q - 2), q * (q - 1)),
            ((q - 1) ** 2, q * (q - 1) * (q + 1) // 2),
            (n - (q - 3), q * (q - 1) ** 2 // 2),
            (n, q - 1),
        ]
    else:
        rows = [
            (0, 1),
            ((q - 1) * (q - 2), q * (q - 1)),
            (q * (q - 2), (q - 1) ** 2),
            (n - (q - 2), q * (q - 1) ** 2),
            (n, 2 * (q - 1)),
        ]
    counts = Counter()
    for weight, words in rows:
        counts[weight] += words
    return WeightSpectrum(dict(sorted(counts.items())))


def closed_form_m2_higher_spectra(q):
    """
    A^(r) of the full code for m = 2 and r = 0..3.

    Two-dimensional subcodes are the annihilators of one orbit column, so they all have
    support n - 2 (one per orbit) or n.
    """
    n = q * (q - 1)
    first = {w: a // (q - 1) for w, a in closed_form_m2_distribution(q).counts.items() if w > 0}
    return [
        HigherSpectrum(0, {0: 1}),
        HigherSpectrum(1, first),
        HigherSpectrum(2, {n - 2: q * (q - 1) // 2, n: (q * q + 3 * q + 2) // 2}),
        HigherSpectrum(3, {n: 1}),
    ]


def _power_exponent(q, Q):
    s, value = 0, 1
    while value < Q:
        value *= q
        s += 1
    if value != Q or s == 0:
        raise ValidationError({"Q": [f"Q={Q} is not a positive power of q={q}."]})
    return s


def extension_spectrum(spectra, q, Q):
    """
    P_w(Q) = sum_r A_w^(r) prod_{i<r} (Q - q^i), the weight distribution over F_Q of the
    code extended from F_q. `spectra` must hold A^(r) for every r = 0..k.
    """
    _power_exponent(q, Q)
    totals = Counter()
    for spectrum in spectra:
        factor = 1
        for i in range(spectrum.r):
            factor *= Q - q**i
        for w, count in spectrum.counts.items():
            totals[w] += count * factor
    return dict(sorted((w, p) for w, p in totals.items() if p))


def closed_form_m2_extension(q, Q):
    """
    P_w(Q) for the full code with m = 2 and odd q >= 7, written out weight by weight.
    """
    if q % 2 == 0 or q < 7:
        raise DegenerateCodeError("The displayed extension formulas need odd q >= 7.")
    _power_exponent(q, Q)
    n = q * (q - 1)
    return dict(sorted({
        0: 1,
        n - 2 * (q - 1): q * (Q - 1),
        n - (q - 1): (q * q + q) // 2 * (Q - 1),
        n - (q - 3): (q * q - q) // 2 * (Q - 1),
        n - 2: (q * q - q) // 2 * (Q - 1) * (Q - q),
        n: (Q - 1) * (Q * Q + (-q * q + q + 2) // 2 * Q + (q**3 - 3 * q * q - 2 * q + 2) // 2),
    }.items()))
