import logging
from dataclasses import asdict
from math import factorial

import galois
import numpy as np
from django.conf import settings

from codes.evaluation import SetKind
from codes.linear import closed_form_params, dual_distance_check, make_code, normalize_columns
from codes.sweeps import code_params, min_weight_words, subminimal_words
from core.enumeration import base_digits, chunk_ranges, default_chunk_size, ensure_feasible, sweep_limit
from core.exceptions import DegenerateCodeError, InfeasibleSweepError
from core.parallel import run_tasks
from fields.arithmetic import field_from_key, resolve_field
from sympoly.polynomials import SymPoly, elementary_symmetric_table, type_one
from sympoly.zeroes import closed_form_count_m2, distinguished_tuples, empirical_zero_histogram, table_rows_m2, zero_count_bound
from weights.hierarchy import (
    columns_on_hyperplane, dependent_subsets, dependent_triples, generalized_hamming_weights, ghw_geometric,
    ghw_upper_bound, hyperplane_profile, subspace_incidence,
)
from weights.spectra import (
    all_higher_spectra, closed_form_m2_distribution, closed_form_m2_extension, closed_form_m2_higher_spectra,
    extension_spectrum, weight_distribution,
)
from weights.subspaces import gaussian_binomial

from .checks import Check, VerificationReport


logger = logging.getLogger(__name__)

SUITES = ('zeroes', 'tables', 'codes', 'spectra', 'example')

# Largest q and m of the default zero-bound grid (every subset S of F_q is visited)
ZERO_GRID_Q = 7
ZERO_GRID_M = 3

# Orbit code for q = 5, m = 3
EXAMPLE_GENERATOR = [
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [3, 4, 0, 0, 1, 2, 1, 2, 3, 4],
    [2, 3, 4, 1, 3, 2, 1, 4, 4, 1],
    [0, 0, 0, 0, 0, 0, 1, 3, 2, 4],
]

EXAMPLE_TRIPLES = [[1, 2, 3], [1, 4, 5], [2, 4, 6], [3, 5, 6]]



def _polynomial_index(indices, q):
    index = 0
    for c in indices:
        index = index * q + int(c)
    return index


def _type_one_roots(spec, m):
    """
    For every message index, the root b of c prod(x_i - b), or -1 when the polynomial is not Type I.
    """
    roots = np.full(spec.order ** (m + 1), -1, dtype=np.int64)
    for root in spec.enumerate():
        for scale in spec.enumerate()[1:]:
            roots[_polynomial_index(type_one(spec, m, root, scale).indices, spec.order)] = root.index
    return roots


def _subset_counts_task(task):
    key, m, start, stop, points, inclusion = task
    spec = field_from_key(*key)
    messages = spec.array(base_digits(range(start, stop), spec.order, m + 1))
    zero = (messages @ elementary_symmetric_table(spec, points)) == 0
    return zero.view(np.ndarray).astype(np.int64) @ inclusion


def zero_counts_by_subset(spec, m, masks, jobs=1, force=False):
    """
    |Z_{S,D}(f)| for every f in Sigma_m (rows, in message order) and every S given as a bitmask (columns).
    """
    points = distinguished_tuples(range(spec.order), m, force)
    total = spec.order ** (m + 1)
    ensure_feasible(
        f"zero counts over {len(masks)} subsets of {spec}, m={m}",
        total * len(points) * (m + 1 + len(masks)),
        sweep_limit(force),
    )
    point_masks = np.bitwise_or.reduce(np.left_shift(1, points), axis=1) if len(points) else np.zeros(0, np.int64)
    masks = np.asarray(masks, dtype=np.int64)
    inclusion = ((point_masks[:, None] & ~masks[None, :]) == 0).astype(np.int64)

    tasks = [
        (spec.key, m, start, stop, points, inclusion)
        for start, stop in chunk_ranges(total, default_chunk_size())
    ]
    return np.concatenate(run_tasks(_subset_counts_task, tasks, jobs))


def _mask_elements(mask):
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


def verify_zero_bounds(q, m, full_field_only=False, bound_offset=0, jobs=1, force=False):
    """
    Check both zero-count bounds, the equality case and m! divisibility for every f in Sigma_m
    and every S with |S| >= m (or S = F_q alone).

    `bound_offset` shifts both bounds and exists to make the checks fail on purpose.
    When |S| = m the two bounds coincide at m! and a Type II polynomial vanishing on S
    attains them too, so the equality case is only claimed for |S| > m.
    """
    spec = resolve_field(q)
    q = spec.order
    if not 1 <= m <= q:
        raise DegenerateCodeError(f"The zero bounds need 1 <= m <= q, got m={m}, q={q}.")

    full = (1 << q) - 1
    masks = [full] if full_field_only else [s for s in range(1, full + 1) if bin(s).count('1') >= m]
    sizes = np.array([bin(s).count('1') for s in masks], dtype=np.int64)
    counts = zero_counts_by_subset(spec, m, masks, jobs=jobs, force=force)

    general = np.array([zero_count_bound(int(size), m) for size in sizes]) + bound_offset
    sharp = np.array([zero_count_bound(int(size), m, type_one=False) for size in sizes]) + bound_offset
    roots = _type_one_roots(spec, m)
    nonzero = np.arange(len(counts)) > 0
    shifted = np.array(masks)[None, :] >> np.maximum(roots, 0)[:, None]
    rooted = (roots[:, None] >= 0) & ((shifted & 1) == 1)
    attains = counts == general[None, :]

    params = {'q': q, 'm': m, 'subsets': 'field' if full_field_only else 'all'}

    def witness(violations, bound=None):
        where = np.argwhere(violations)
        if not len(where):
            return None
        row, column = (int(i) for i in where[0])
        found = {
            'coeffs': base_digits([row], q, m + 1)[0].tolist(),
            'subset': _mask_elements(masks[column]),
            'count': int(counts[row, column]),
        }
        if bound is not None:
            found['bound'] = int(bound[column])
        return found

    report = VerificationReport()
    checks = [
        ('zero-bound', "|Z_S(f)| <= m P(|S|-1, m-1) for nonzero f",
         nonzero[:, None] & (counts > general[None, :]), general),
        ('zero-bound-equality', "the bound is attained exactly by c prod(x_i - b) with b in S, for |S| > m",
         nonzero[:, None] & ((rooted & ~attains) | (attains & ~rooted & (sizes[None, :] > m))), general),
        ('zero-bound-sharp', "|Z_S(f)| <= m P(|S|-1, m-1) - (|S|-m) P(|S|-2, m-2) for the other nonzero f",
         nonzero[:, None] & ~rooted & (counts > sharp[None, :]), sharp),
        ('zero-divisibility', "m! divides |Z_S(f)|",
         counts % factorial(m) != 0, None),
    ]
    for claim, statement, violations, bound in checks:
        report.add(Check.no_violations(claim, statement, params, int(violations.sum()), witness(violations, bound)))
    return report


def verify_m2_tables(q, jobs=1, force=False):
    """
    The m = 2 polynomial-count tables and the closed-form count of every single polynomial.
    """
    spec = resolve_field(q)
    q = spec.order
    params = {'q': q}
    report = VerificationReport()

    histogram = empirical_zero_histogram(spec, 2, jobs=jobs, force=force)
    report.add(Check.equal('m2-table', "number of polynomials with each zero count", params, table_rows_m2(q), histogram))

    counts = zero_counts_by_subset(spec, 2, [(1 << q) - 1], jobs=jobs, force=force)[:, 0]
    mismatches = []
    for index, digits in enumerate(base_digits(range(q**3), q, 3)):
        predicted = closed_form_count_m2(SymPoly.from_indices(spec, digits))
        if predicted != counts[index]:
            mismatches.append({'coeffs': digits.tolist(), 'predicted': predicted, 'computed': int(counts[index])})
    report.add(Check.no_violations(
        'm2-closed-form', "closed-form zero count of every a_0 + a_1 sigma^1 + a_2 sigma^2",
        params, len(mismatches), mismatches[0] if mismatches else None,
    ))
    return report


def verify_code_structure(q, m, jobs=1, force=False):
    """
    Parameters, minimum weight words, dual distance and weight hierarchy of both codes.

    Weight hierarchies whose subcode sweep is above the cap are reported as skipped.
    """
    spec = resolve_field(q)
    q = spec.order
    if not 1 <= m < q:
        raise DegenerateCodeError(f"The code statements need 1 <= m < q, got m={m}, q={q}.")

    report = VerificationReport()
    hierarchies = {}
    for kind in SetKind:
        code = make_code(spec, m, kind, force=force)
        params = {'q': q, 'm': m, 'set': kind.value}

        predicted = closed_form_params(q, m, kind)
        computed = code_params(code, jobs=jobs, force=force)
        report.add(Check.equal('code-params', "[n, k, d] closed form", params, asdict(predicted), asdict(computed)))

        words = min_weight_words(code, jobs=jobs, force=force)
        report.add(Check.equal('min-weight-count', "q(q-1) words of minimum weight", params, q * (q - 1), words.count))
        report.add(Check.equal('min-weight-span', "minimum weight words span the code", params, code.k, words.rank))

        expected_bound = 3 if kind is SetKind.ORBIT or m == 1 else 2
        report.add(Check.equal(
            'dual-distance', "columns nonzero, parallel only when repeated", params,
            expected_bound, dual_distance_check(code).lower_bound,
        ))

        try:
            hierarchy = generalized_hamming_weights(code, jobs=jobs, force=force)
        except InfeasibleSweepError as exc:
            report.skip('ghw', params, str(exc))
            continue
        hierarchies[kind] = hierarchy

        bounds = [ghw_upper_bound(q, m, r, kind) for r in range(1, len(hierarchy) + 1)]
        over = [r for r in range(1, len(hierarchy) + 1) if hierarchy[r] > bounds[r - 1]]
        report.add(Check.no_violations(
            'ghw-bound', "d_r <= upper bound for every r", params, len(over),
            {'r': over[0], 'd': hierarchy[over[0]], 'bound': bounds[over[0] - 1]} if over else None,
        ))
        report.add(Check.equal(
            'ghw-top', "d_r equals the upper bound for r = m and r = m + 1", params,
            bounds[m - 1:m + 1], [hierarchy[m], hierarchy[m + 1]],
        ))
        if kind is SetKind.ORBIT and m == q - 1:
            report.add(Check.equal(
                'ghw-full-space', "d_r = r when m = q - 1", params,
                list(range(1, len(hierarchy) + 1)), list(hierarchy.values),
            ))

    if len(hierarchies) == 2:
        report.add(Check.equal(
            'ghw-scaling', "d_r of the full code is m! times d_r of the orbit code", {'q': q, 'm': m},
            [factorial(m) * d for d in hierarchies[SetKind.ORBIT].values], list(hierarchies[SetKind.FULL].values),
        ))
    return report


def verify_m2_spectra(q, jobs=1, force=False):
    """
    Weight distribution, higher weight spectra and extension weights of the full code for m = 2.
    """
    spec = resolve_field(q)
    q = spec.order
    params = {'q': q}
    code = make_code(spec, 2, force=force)
    report = VerificationReport()

    distribution = weight_distribution(code, jobs=jobs, force=force).counts
    report.add(Check.equal(
        'm2-distribution', "A_w from the zero-count tables", params,
        closed_form_m2_distribution(q).counts, distribution,
    ))

    spectra = all_higher_spectra(code, jobs=jobs, force=force)
    for predicted, computed in zip(closed_form_m2_higher_spectra(q), spectra):
        r_params = {**params, 'r': computed.r}
        report.add(Check.equal('m2-higher-spectrum', "A_w^(r) from the subcode counts", r_params, predicted.counts, computed.counts))
        report.add(Check.equal(
            'subspace-total', "sum_w A_w^(r) is the Gaussian binomial [k r]_q", r_params,
            gaussian_binomial(code.k, computed.r, q), computed.total,
        ))

    report.add(Check.equal(
        'first-spectrum', "(q-1) A_w^(1) = A_w for w > 0", params,
        {w: a for w, a in distribution.items() if w}, {w: (q - 1) * a for w, a in spectra[1].counts.items()},
    ))
    report.add(Check.equal(
        'extension-trivial', "P_w(q) = A_w", params, distribution, extension_spectrum(spectra, q, q),
    ))

    if q % 2 and q >= 7:
        for s in (1, 2):
            Q = q**s
            extended = extension_spectrum(spectra, q, Q)
            s_params = {**params, 's': s}
            predicted = {w: p for w, p in closed_form_m2_extension(q, Q).items() if p}
            report.add(Check.equal('m2-extension', "P_w(Q) written out for odd q >= 7", s_params, predicted, extended))
            report.add(Check.equal('extension-total', "sum_w P_w(Q) = Q^3", s_params, Q**3, sum(extended.values())))
    return report


def _normalized(spec, indices):
    return tuple(int(x) for x in normalize_columns(spec, np.array(indices)[:, None])[:, 0])


def verify_example_q5_m3(jobs=1, force=False):
    """
    The worked q = 5, m = 3 example: generator, weight hierarchies, plane statistics, dependent triples.
    """
    spec = resolve_field(5)
    orbit, full = make_code(spec, 3, SetKind.ORBIT, force=force), make_code(spec, 3, force=force)
    params = {'q': 5, 'm': 3, 'set': 'orbit'}
    report = VerificationReport()

    report.add(Check.equal('example-generator', "4 x 10 generator of the orbit code", params, EXAMPLE_GENERATOR, orbit.rows))

    for code, expected in ((orbit, [4, 7, 9, 10]), (full, [24, 42, 54, 60])):
        hierarchy_params = {**params, 'set': code.kind.value}
        swept = generalized_hamming_weights(code, jobs=jobs, force=force)
        geometric = ghw_geometric(code, jobs=jobs, force=force)
        report.add(Check.equal('example-ghw', "weight hierarchy by subcode sweep", hierarchy_params, expected, list(swept.values)))
        report.add(Check.equal(
            'example-ghw-geometric', "weight hierarchy from subspace incidences", hierarchy_params, expected, list(geometric.values),
        ))

    planes = subspace_incidence(orbit, 3, jobs=jobs, force=force)
    report.add(Check.equal(
        'example-planes', "five 6-point planes and ten 4-point planes", params,
        {6: 5, 4: 10}, {6: planes.get(6, 0), 4: planes.get(4, 0)},
    ))

    type_one_planes = {root.index: _normalized(spec, type_one(spec, 3, root).indices) for root in spec.enumerate()}
    rich = sorted(normal for normal, count in hyperplane_profile(orbit) if count >= 5)
    report.add(Check.equal(
        'example-rich-planes', "planes with 5 or more points are the planes of c prod(x_i - b)", params,
        sorted(type_one_planes.values()), rich,
    ))

    lines = subspace_incidence(orbit, 2, jobs=jobs, force=force)
    report.add(Check.equal('example-collinear', "at most 3 collinear columns", params, 3, max(lines)))

    zero_plane = columns_on_hyperplane(orbit, type_one_planes[0])
    report.add(Check.equal(
        'example-triples', "dependent column triples on the plane of x1 x2 x3", params,
        EXAMPLE_TRIPLES, [list(t) for t in dependent_triples(orbit, zero_plane)],
    ))
    for root, normal in type_one_planes.items():
        positions = columns_on_hyperplane(orbit, normal)
        report.add(Check.equal(
            'example-plane-triples', "6 points, 4 collinear triples, no collinear quadruple", {**params, 'b': root},
            {'points': 6, 'triples': 4, 'quadruples': 0},
            {
                'points': len(positions),
                'triples': len(dependent_triples(orbit, positions)),
                'quadruples': len(dependent_subsets(orbit, positions, 4, 2)),
            },
        ))

    minimum = min_weight_words(orbit, jobs=jobs, force=force)
    subminimal = subminimal_words(orbit, jobs=jobs, force=force)
    report.add(Check.equal('example-min-weight', "20 words of weight 4", params, [4, 20], [minimum.weight, minimum.count]))
    report.add(Check.equal('example-subminimal', "40 words of weight 6", params, [6, 40], [subminimal.weight, subminimal.count]))
    return report


def field_orders(low, high):
    return [q for q in range(low, high + 1) if galois.is_prime_power(q)]


def suite_grid(suite, field=None, m=None):
    """
    The (field, m) cases a suite runs: the given ones, or the default grid within the caps.
    """
    limits = settings.SYMCODE
    if field is not None:
        fields = [field]
    elif suite == 'zeroes':
        fields = field_orders(2, min(ZERO_GRID_Q, limits['MAX_Q']))
    else:
        fields = field_orders(3, limits['MAX_Q'])
    fields = [resolve_field(f) for f in fields]

    if suite == 'example':
        return [(None, None)]
    if suite in ('tables', 'spectra'):
        return [(f, 2) for f in fields if f.order >= 3]

    top = ZERO_GRID_M if suite == 'zeroes' else limits['MAX_M']
    cases = []
    for f in fields:
        # zero bounds need m <= q, code statements m < q
        largest = f.order if suite == 'zeroes' else f.order - 1
        ms = [m] if m is not None else range(1, min(top, largest) + 1)
        cases.extend((f, k) for k in ms if 1 <= k <= largest)
    return cases


def run_suite(suite='all', field=None, m=None, jobs=1, force=False):
    """
    Run one suite (or all of them, in a fixed order) and merge the reports in that order.
    """
    report = VerificationReport()
    for name in (SUITES if suite == 'all' else (suite,)):
        for f, k in suite_grid(name, field, m):
            params = {} if f is None else {'q': f.order, 'm': k}
            try:
                if name == 'zeroes':
                    part = verify_zero_bounds(f, k, jobs=jobs, force=force)
                elif name == 'tables':
                    part = verify_m2_tables(f, jobs=jobs, force=force)
                elif name == 'codes':
                    part = verify_code_structure(f, k, jobs=jobs, force=force)
                elif name == 'spectra':
                    part = verify_m2_spectra(f, jobs=jobs, force=force)
                else:
                    part = verify_example_q5_m3(jobs=jobs, force=force)
            except InfeasibleSweepError as exc:
                report.skip(name, params, str(exc))
                continue
            report.extend(part)
    logger.info("Suite %s: %s", suite, report.summary)
    return report
