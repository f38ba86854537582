import logging
from dataclasses import dataclass, field

import numpy as np

from core.enumeration import base_digits, chunk_ranges, default_chunk_size, ensure_feasible, sweep_limit
from core.exceptions import DegenerateCodeError
from core.parallel import merge_histograms, run_tasks
from fields.arithmetic import field_from_key

from .linear import CodeParams, WeightClass, column_profile


logger = logging.getLogger(__name__)



@dataclass(frozen=True, eq=False)
class MessageSweep:
    """
    Weight histogram over all q^k messages, plus the messages of the weights asked for.
    """
    histogram: dict
    messages: dict = field(default_factory=dict)

    @property
    def minimum_distance(self):
        return min(w for w in self.histogram if w > 0)



def _message_task(task):
    key, columns, multiplicities, start, stop, collect = task
    spec = field_from_key(*key)
    digits = base_digits(range(start, stop), spec.order, columns.shape[0])
    values = spec.array(digits) @ spec.array(columns)
    weights = (values != 0).view(np.ndarray).astype(np.int64) @ multiplicities

    keys, counts = np.unique(weights, return_counts=True)
    histogram = {int(w): int(c) for w, c in zip(keys, counts)}
    collected = {w: digits[weights == w] for w in collect}
    return histogram, collected


def message_sweep(code, jobs=1, collect=(), force=False):
    """
    Encode every message of the code's message basis and record the codeword weights.

    Messages are enumerated lexicographically in base q; chunks are fixed by CHUNK_SIZE and
    merged in order, so the result does not depend on `jobs`.
    """
    basis = code.message_basis
    profile = column_profile(basis)
    k = basis.shape[0]
    total = code.q ** k
    ensure_feasible(f"message sweep of {code}", total * k * profile.count, sweep_limit(force))

    collect = tuple(int(w) for w in collect)
    tasks = [
        (code.spec.key, profile.columns, profile.multiplicities, start, stop, collect)
        for start, stop in chunk_ranges(total, default_chunk_size())
    ]
    results = run_tasks(_message_task, tasks, jobs)

    histogram = merge_histograms(result[0] for result in results)
    messages = {
        w: np.concatenate([result[1][w] for result in results]) if results else np.zeros((0, k), dtype=np.int64)
        for w in collect
    }
    logger.debug("Message sweep of %s: %s", code, histogram)
    return MessageSweep(histogram, messages)


def code_params(code, jobs=1, force=False):
    """
    (n, k, d) with d taken from a sweep of every message.
    """
    if code.m >= code.q:
        raise DegenerateCodeError(f"m={code.m} >= q={code.q}: the parameter statements need m < q.")
    sweep = message_sweep(code, jobs=jobs, force=force)
    return CodeParams(code.n, code.k, sweep.minimum_distance)


def _weight_class(code, weight, messages):
    spec = code.spec
    words = spec.array(messages) @ code.message_basis
    rank = int(np.linalg.matrix_rank(words)) if len(messages) else 0
    return WeightClass(weight, messages, words.view(np.ndarray).astype(np.int64), rank)


def weight_class(code, weight, jobs=1, force=False):
    sweep = message_sweep(code, jobs=jobs, collect=(weight,), force=force)
    return _weight_class(code, weight, sweep.messages[weight])


def min_weight_words(code, jobs=1, force=False):
    """
    Every codeword of minimum weight, with the rank of their span.
    """
    d = message_sweep(code, jobs=jobs, force=force).minimum_distance
    return weight_class(code, d, jobs=jobs, force=force)


def subminimal_words(code, jobs=1, force=False):
    """
    Every codeword of the second-smallest nonzero weight.
    """
    weights = sorted(w for w in message_sweep(code, jobs=jobs, force=force).histogram if w > 0)
    if len(weights) < 2:
        raise DegenerateCodeError(f"{code} has a single nonzero weight.")
    return weight_class(code, weights[1], jobs=jobs, force=force)
