# -*- coding: utf8 -*-

"""
Embezzlement

Monopartite embezzling errors of truncated product spectra, the
brute force unitary oracle that checks them, bipartite bounds, target
covers and scans over families of open chains.
"""

import itertools
import math

import numpy as np
from sympy.utilities.iterables import partitions

from fermbezzle import settings
from fermbezzle.builtin.base import (Command, CsvArtifact, JsonArtifact, Result, choice,
    positive_integer, positive_reals, real, schedule, text)
from fermbezzle.builtin.finchain import KERNEL_POLICIES, PARTITIONS, chain_modes
from fermbezzle.builtin.hopping import model_zoo
from fermbezzle.builtin.linalg import eigvalsh
from fermbezzle.builtin.quasifree import ModeSpectrum, TruncatedSpectrum, product_spectrum_topk
from fermbezzle.builtin.randomnumbers import RandomEnv
from fermbezzle.core.evaluation import NumericalError, ValidationError
from fermbezzle.core.util import parallel_map

ORACLE_TOL = 1e-3
ORACLE_SLACK = 1e-6

POLICIES = {
    'max-ent': 'maximally_entangled',
    'cover': 'worst_case_cover',
}

messages = {
    'spectrum_distance': {
        'negative': "Spectrum has a negative entry `1`.",
        'mass': "Spectrum has total mass `1` > 1.",
    },
    'bipartite_bound': {
        'negative': "Monopartite error `1` is negative.",
    },
    'bruteforce_unitary_oracle': {
        'dim': "Total dimension `1` exceeds the oracle cap `2`.",
        'iterations': "At least 1000 iterations are needed, got `1`.",
    },
    'epsilon_cover': {
        'eps': "Cover radius `1` is not positive.",
    },
    'family_scan': {
        'odd': "Chain length `1` is odd; scans cut even chains in half.",
        'policy': "Unknown target policy `1`.",
        'dims': "Target dimensions `1` must be positive.",
    },
}

class TargetState(object):
    """
    A bipartite target |psi> in C^d (x) C^d, given by its squared
    Schmidt coefficients.

    >>> TargetState([0.25, 0.75]).schmidt_squares
    array([0.75, 0.25])
    >>> TargetState.maximally_entangled(4)
    <TargetState d=4: 0.25, 0.25, 0.25, 0.25>
    >>> TargetState([0.5, 0.6])
    Traceback (most recent call last):
    ...
    fermbezzle.core.evaluation.ValidationError: TargetState::sum: Schmidt squares sum to 1.1, not 1.
    """

    messages = {
        'negative': "Schmidt square `1` is negative.",
        'sum': "Schmidt squares sum to `1`, not 1.",
        'empty': "Target has no Schmidt coefficients.",
    }

    def __init__(self, schmidt_squares):
        values = np.asarray(schmidt_squares, dtype=float).ravel()
        if values.size == 0:
            raise ValidationError('TargetState', 'empty')
        if np.any(values < 0):
            raise ValidationError('TargetState', 'negative', float(values.min()))
        total = math.fsum(values)
        if abs(total - 1) > 1e-12:
            raise ValidationError('TargetState', 'sum', total)
        self.schmidt_squares = np.sort(values)[::-1]

    @staticmethod
    def maximally_entangled(d):
        return TargetState(np.full(d, 1.0 / d))

    @staticmethod
    def product(d):
        return TargetState(np.eye(d)[0])

    @property
    def dimension(self):
        return len(self.schmidt_squares)

    def __repr__(self):
        return '<TargetState d=%d: %s>' % (self.dimension,
            ', '.join('%.4g' % value for value in self.schmidt_squares))

def spectrum_distance(a, b):
    """
    l1 distance of two descending spectra, the shorter one padded with
    zeros.

    >>> spectrum_distance([1, 0], [0.5, 0.5])
    1.0
    >>> round(spectrum_distance([0.72, 0.18, 0.08, 0.02], [0.9, 0.1]), 12)
    0.36
    >>> spectrum_distance([0.3, 0.2], [0.3, 0.2])
    0.0
    >>> spectrum_distance([0.5, -0.1], [1])
    Traceback (most recent call last):
    ...
    fermbezzle.core.evaluation.ValidationError: spectrum_distance::negative: Spectrum has a negative entry -0.1.
    """

    a = np.asarray(a, dtype=float).ravel()
    b = np.asarray(b, dtype=float).ravel()
    for values in (a, b):
        if values.size and values.min() < 0:
            raise ValidationError('spectrum_distance', 'negative', float(values.min()))
        total = math.fsum(values)
        if total > 1 + 1e-9:
            raise ValidationError('spectrum_distance', 'mass', total)
    size = max(len(a), len(b))
    a = np.sort(np.pad(a, (0, size - len(a))))[::-1]
    b = np.sort(np.pad(b, (0, size - len(b))))[::-1]
    return float(math.fsum(np.abs(a - b)))

def as_truncated(rho):
    if isinstance(rho, TruncatedSpectrum):
        return rho
    entries = np.sort(np.asarray(rho, dtype=float).ravel())[::-1]
    return TruncatedSpectrum(entries, max(0.0, 1.0 - math.fsum(entries)))

def monopartite_error(rho, psi):
    """
    min_u ||rho (x) psi_A - u (rho (x) |0><0|) u*||_1 over the retained
    entries of rho, with the uncertainty 2 * discarded_mass.

    >>> monopartite_error([0.5, 0.5], TargetState([0.5, 0.5]))
    (1.0, 0.0)
    >>> monopartite_error([0.7, 0.2, 0.1], TargetState.product(3))
    (0.0, 0.0)
    >>> value, uncertainty = monopartite_error(TruncatedSpectrum([0.6, 0.3], 0.1), TargetState([1.0]))
    >>> value, round(uncertainty, 12)
    (0.0, 0.2)
    """

    rho = as_truncated(rho)
    products = np.outer(rho.entries, psi.schmidt_squares).ravel()
    value = spectrum_distance(products, rho.entries)
    return value, 2 * rho.discarded_mass

def bipartite_bound(epsilon_mono):
    """
    >>> bipartite_bound(0), bipartite_bound(0.04), bipartite_bound(1)
    (0.0, 0.2, 1.0)
    """

    if epsilon_mono < 0:
        raise ValidationError('bipartite_bound', 'negative', epsilon_mono)
    return math.sqrt(epsilon_mono)

def trace_norm(matrix):
    return float(np.sum(np.abs(eigvalsh(matrix, 'bruteforce_unitary_oracle'))))

def givens(dim, i, j, angle, phase):
    g = np.eye(dim, dtype=complex)
    c, s = math.cos(angle), math.sin(angle)
    g[i, i] = c
    g[j, j] = c
    g[i, j] = -s * np.exp(-1j * phase)
    g[j, i] = s * np.exp(1j * phase)
    return g

def bruteforce_unitary_oracle(rho_spectrum, psi, seed=0, iterations=settings.ORACLE_ITERATIONS, starts=4):
    """
    Minimizes ||D1 - u D2 u*||_1 over unitaries u, where
    D1 = diag(rho (x) psi) and D2 = diag(rho (x) e_1). Every
    permutation of the basis is tried exhaustively; the best one and
    Haar random unitaries then start a local search by Givens rotations
    in random planes, with a step shrinking to 1e-4, and by
    transpositions of basis vectors. Moves that increase the distance
    are rejected.

    >>> bruteforce_unitary_oracle([1.0], TargetState([1.0]))
    0.0
    >>> value = bruteforce_unitary_oracle([0.5, 0.5], TargetState([0.5, 0.5]), seed=1)
    >>> abs(value - 1) <= ORACLE_TOL
    True

    The best permutation already attains the sorted alignment:
    >>> value = bruteforce_unitary_oracle([0.9, 0.1], TargetState([0.1, 0.9]), iterations=1000)
    >>> abs(value - 0.2) < 1e-12
    True
    >>> bruteforce_unitary_oracle([0.2] * 5, TargetState([0.5, 0.5]))
    Traceback (most recent call last):
    ...
    fermbezzle.core.evaluation.ValidationError: bruteforce_unitary_oracle::dim: Total dimension 10 exceeds the oracle cap 8.
    """

    rho = np.asarray(rho_spectrum, dtype=float).ravel()
    d = psi.dimension
    dim = len(rho) * d
    if dim > settings.ORACLE_MAX_DIM:
        raise ValidationError('bruteforce_unitary_oracle', 'dim', dim, settings.ORACLE_MAX_DIM)
    if iterations < 1000:
        raise ValidationError('bruteforce_unitary_oracle', 'iterations', iterations)
    first = np.kron(rho, psi.schmidt_squares)
    second = np.kron(rho, np.eye(d)[0])
    d1 = np.diag(first).astype(complex)
    d2 = np.diag(second).astype(complex)
    if dim == 1:
        return trace_norm(d1 - d2)

    def cost(u):
        return trace_norm(d1 - u @ d2 @ np.conj(u.T))

    # u = P_perm maps D2 to diag(second[perm])
    perms = np.array(list(itertools.permutations(range(dim))))
    distances = np.abs(first[np.newaxis, :] - second[perms]).sum(axis=1)
    permutation = np.eye(dim, dtype=complex)[perms[np.argmin(distances)]]

    best = cost(permutation)
    with RandomEnv(seed) as rand:
        budgets = [iterations // 2] + [(iterations - iterations // 2) // (starts - 1)] * (starts - 1)
        for start, budget in enumerate(budgets):
            u = permutation if start == 0 else rand.unitary(dim)
            value = cost(u)
            for step in range(budget):
                i, j = rand.generator.choice(dim, size=2, replace=False)
                if rand.randreal() < 0.5:
                    move = np.eye(dim, dtype=complex)[[j if k == i else i if k == j else k for k in range(dim)]]
                else:
                    width = 0.25 * math.pi * 1e-4 ** (step / float(budget))
                    move = givens(dim, i, j, width * rand.generator.normal(), rand.randreal(0, 2 * math.pi))
                candidate = move @ u
                candidate_value = cost(candidate)
                if candidate_value <= value:
                    u, value = candidate, candidate_value
            best = min(best, value)
    return best

def cover_sizes(M, d):
    " number of partitions of m into at most d parts, for m = 0..M "

    ways = [1] + [0] * M
    for part in range(1, d + 1):
        for m in range(part, M + 1):
            ways[m] += ways[m - part]
    return ways

def epsilon_cover(d, eps, max_points=settings.MAX_COVER_POINTS):
    """
    Sorted probability vectors of dimension d with entries in (1/M)Z,
    M = ceil(4 d / eps), coarsened until at most max_points remain.
    Returns the targets and the l1 mesh d / M.

    >>> targets, mesh = epsilon_cover(2, 2.0)
    >>> targets
    [<TargetState d=2: 1, 0>, <TargetState d=2: 0.75, 0.25>, <TargetState d=2: 0.5, 0.5>]
    >>> mesh
    0.5
    >>> epsilon_cover(1, 0.1)
    ([<TargetState d=1: 1>], 0.0)
    >>> targets, mesh = epsilon_cover(4, 0.03)
    >>> len(targets) <= 2000, mesh > 0.03 / 4
    (True, True)
    """

    if not eps > 0:
        raise ValidationError('epsilon_cover', 'eps', eps)
    if d == 1:
        return [TargetState([1.0])], 0.0
    M = int(math.ceil(4 * d / float(eps)))
    sizes = cover_sizes(M, d)
    while M > 1 and sizes[M] > max_points:
        M -= 1
    targets = []
    for partition in partitions(M, m=d):
        parts = sorted((part for part, count in partition.items() for _ in range(count)), reverse=True)
        targets.append(TargetState(np.array(parts + [0] * (d - len(parts)), dtype=float) / M))
    targets.sort(key=lambda target: tuple(-target.schmidt_squares))
    return targets, d / float(M)

def targets_for(policy, d, eps_grid):
    if policy == 'maximally_entangled':
        return [TargetState.maximally_entangled(d)], 0.0
    return epsilon_cover(d, min(eps_grid))

class ScanRow(object):
    columns = ['n', 'd', 'policy', 'epsilon', 'uncertainty', 'bipartite_bound', 'mesh',
        'kernel_dimension', 'nonmonotone']

    def __init__(self, n, d, policy, epsilon, uncertainty, mesh, kernel_dimension):
        self.n = n
        self.d = d
        self.policy = policy
        self.epsilon = epsilon
        self.uncertainty = uncertainty
        self.bipartite_bound = bipartite_bound(min(2.0, epsilon + uncertainty))
        self.mesh = mesh
        self.kernel_dimension = kernel_dimension
        self.nonmonotone = False

    def upper(self):
        return self.epsilon + self.uncertainty + self.mesh

    def to_row(self):
        return [self.n, self.d, self.policy, float(self.epsilon), float(self.uncertainty),
            float(self.bipartite_bound), float(self.mesh), self.kernel_dimension, int(self.nonmonotone)]

class EmbezzleReport(object):
    """
    Scan rows sorted by n, then d, and the thresholds n(eps, d): the
    smallest listed n whose error, uncertainty and cover mesh stay
    below eps (None if none does).
    """

    def __init__(self, rows, eps_grid, policy):
        self.rows = sorted(rows, key=lambda row: (row.n, row.d))
        self.policy = policy
        self.eps_grid = list(eps_grid)
        previous = {}
        for row in self.rows:
            if row.d in previous and row.epsilon > previous[row.d] + settings.MONOTONE_SLACK:
                row.nonmonotone = True
            previous[row.d] = row.epsilon
        self.thresholds = {}
        for eps in self.eps_grid:
            for d in sorted(set(row.d for row in self.rows)):
                reached = [row.n for row in self.rows if row.d == d and row.upper() < eps]
                self.thresholds[(eps, d)] = min(reached) if reached else None

    def errors(self, d):
        return [row.epsilon for row in self.rows if row.d == d]

    def to_json(self):
        return {
            'policy': self.policy,
            'thresholds': [{'eps': eps, 'd': d, 'n': n} for (eps, d), n in sorted(self.thresholds.items())],
            'nonmonotone': [{'n': row.n, 'd': row.d} for row in self.rows if row.nonmonotone],
        }

def family_scan(model, lengths, dims, eps_grid, target_policy='maximally_entangled', topk=settings.TOPK,
        mass_floor=settings.MASS_FLOOR, partition='half', kernel_policy='empty', jobs=1, progress=None):
    """
    Embezzling errors of the half-chain ground states of open chains
    of the listed even lengths against targets of the listed dimensions.

    >>> report = family_scan(model_zoo('XX'), [8, 16], [1, 2], [0.5])
    >>> [(row.n, row.d) for row in report.rows]
    [(8, 1), (8, 2), (16, 1), (16, 2)]
    >>> report.errors(1)
    [0.0, 0.0]
    >>> family_scan(model_zoo('XX'), [7], [2], [0.5])
    Traceback (most recent call last):
    ...
    fermbezzle.core.evaluation.ValidationError: family_scan::odd: Chain length 7 is odd; scans cut even chains in half.
    """

    target_policy = POLICIES.get(target_policy, target_policy)
    if target_policy not in POLICIES.values():
        raise ValidationError('family_scan', 'policy', target_policy)
    for n in lengths:
        if n % 2:
            raise ValidationError('family_scan', 'odd', n)
    if not dims or min(dims) < 1:
        raise ValidationError('family_scan', 'dims', dims)
    targets = dict((d, targets_for(target_policy, d, eps_grid)) for d in dims)

    def cell(n):
        modes, kernel = chain_modes(model, n, partition, kernel_policy)
        truncated = product_spectrum_topk(modes, topk, mass_floor)
        rows = []
        for d in dims:
            states, mesh = targets[d]
            value, uncertainty = max(monopartite_error(truncated, psi) for psi in states)
            rows.append(ScanRow(n, d, target_policy, value, uncertainty, mesh, kernel))
        if progress is not None:
            progress(n, rows)
        return rows

    rows = [row for cell_rows in parallel_map(cell, lengths, jobs) for row in cell_rows]
    return EmbezzleReport(rows, eps_grid, target_policy)

class EmbezzleScan(Command):
    """
    Embezzling errors over a schedule of chain lengths and target dimensions.

    Writes one CSV row per (n, d) and the thresholds n(eps, d) as JSON.
    """

    name = 'embezzle-scan'
    output = 'embezzle.csv'

    options = {
        'model': (None, text, "model file or zoo:NAME[,key=value]"),
        'lengths': ('8:256:x2', schedule, "even chain lengths n"),
        'dims': ('2,3,4', schedule, "target dimensions d"),
        'eps': ('0.3,0.1,0.03', positive_reals, "error thresholds"),
        'policy': ('max-ent', choice(*sorted(POLICIES)), "target set: maximally entangled or eps-cover"),
        'topk': (str(settings.TOPK), positive_integer, "retained entries of the product spectrum"),
        'mass-floor': (repr(settings.MASS_FLOOR), real, "stop once this mass is left"),
        'cut': ('half', choice(*PARTITIONS), "subsystem A: left half or even sites"),
        'kernel-policy': ('empty', choice(*KERNEL_POLICIES), "kernel assignment"),
    }

    messages = {
        'done': "n = `1`: `2`",
    }

    def validate(self, config, evaluation):
        odd = [n for n in config.lengths if n % 2]
        if odd:
            evaluation.error('General', 'field', 'lengths', odd[0])
        if not 0 <= config.mass_floor < 1:
            evaluation.error('General', 'field', 'mass-floor', config.mass_floor)

    def apply(self, config, evaluation):
        model = config.load_model()

        def progress(n, rows):
            evaluation.print_out('n=%d: %s' % (n, ', '.join('d=%d eps=%.4g' % (row.d, row.epsilon) for row in rows)))

        report = family_scan(model, config.lengths, config.dims, config.eps, config.policy, config.topk,
            config.mass_floor, config.cut, config.kernel_policy, config.jobs, progress)
        reached = ['n(%g,%d)=%s' % (eps, d, '-' if n is None else n)
            for (eps, d), n in sorted(report.thresholds.items())]
        summary = '%s: %d rows (%s); %s' % (model.name, len(report.rows), config.policy, ', '.join(reached))
        return Result(summary, [
            CsvArtifact(config.output, ScanRow.columns, [row.to_row() for row in report.rows]),
            JsonArtifact(self.derived_filename(config, '.thresholds.json'), report.to_json()),
        ])

def random_instance(rand, max_dim=settings.ORACLE_MAX_DIM):
    d = rand.randint(1, min(4, max_dim))
    length = rand.randint(1, max_dim // d)
    return rand.probability_vector(length), TargetState(rand.probability_vector(d))

def oracle_check(seed, instances, iterations=settings.ORACLE_ITERATIONS, max_dim=settings.ORACLE_MAX_DIM, jobs=1):
    """
    Compares the sorted alignment with the oracle on seeded random
    instances. Returns rows (instance, rank of rho, d, closed form,
    oracle, oracle - closed form).
    """

    with RandomEnv(seed) as rand:
        cases = [random_instance(rand, max_dim) + (rand.randint(0, 2 ** 31 - 1),) for _ in range(instances)]

    def compare(case):
        rho, psi, oracle_seed = case
        closed = spectrum_distance(np.outer(rho, psi.schmidt_squares).ravel(), rho)
        oracle = bruteforce_unitary_oracle(rho, psi, oracle_seed, iterations)
        return closed, oracle

    results = parallel_map(compare, cases, jobs)
    return [(index, len(rho), psi.dimension, closed, oracle, oracle - closed)
        for index, ((rho, psi, _), (closed, oracle)) in enumerate(zip(cases, results))]

def oracle_agrees(difference):
    return -ORACLE_SLACK <= difference <= ORACLE_TOL

class VerifyOracle(Command):
    """
    Checks the sorted-spectrum formula against the brute force unitary oracle.
    """

    name = 'verify-oracle'
    output = 'oracle.csv'

    options = {
        'instances': ('200', positive_integer, "number of random instances"),
        'iterations': (str(settings.ORACLE_ITERATIONS), positive_integer, "oracle iterations per instance"),
        'max-dim': (str(settings.ORACLE_MAX_DIM), positive_integer, "cap on the total dimension"),
    }

    messages = {
        'mismatch': "`1` of `2` instances disagree with the sorted-spectrum formula.",
    }

    def validate(self, config, evaluation):
        if config.iterations < 1000:
            evaluation.error('General', 'field', 'iterations', config.iterations)
        if config.max_dim > settings.ORACLE_MAX_DIM:
            evaluation.error('General', 'field', 'max-dim', config.max_dim)

    def apply(self, config, evaluation):
        rows = oracle_check(config.seed, config.instances, config.iterations, config.max_dim, config.jobs)
        failed = [row for row in rows if not oracle_agrees(row[5])]
        if failed:
            raise NumericalError(self.get_name(), 'mismatch', len(failed), len(rows))
        worst = max(abs(row[5]) for row in rows)
        summary = 'oracle agrees on %d instances (largest deviation %.3g)' % (len(rows), worst)
        return Result(summary, [CsvArtifact(config.output,
            ['instance', 'rho_dim', 'd', 'closed_form', 'oracle', 'difference'],
            [(i, r, d, float(c), float(o), float(diff)) for i, r, d, c, o, diff in rows])])

__test__ = {
    'distance_metric': """
    Symmetry and the triangle inequality on random sub-normalized
    spectra of different lengths.

    >>> with RandomEnv(17) as rand:
    ...     for trial in range(100):
    ...         a, b, c = [rand.probability_vector(rand.randint(1, 12)) * rand.randreal(0.5, 1)
    ...             for _ in range(3)]
    ...         assert spectrum_distance(a, b) == spectrum_distance(b, a)
    ...         assert spectrum_distance(a, c) <= spectrum_distance(a, b) + spectrum_distance(b, c) + 1e-12
    ...         assert spectrum_distance(a, a) == 0
    """,

    'flat_nogo': """
    Flat resources do not embezzle a Bell pair: the error is exactly 1.

    >>> bell = TargetState.maximally_entangled(2)
    >>> [monopartite_error(product_spectrum_topk(ModeSpectrum([0.5] * n), 2 ** n, 0.0), bell)[0]
    ...     for n in (1, 2, 5, 10, 15, 20)]
    [1.0, 1.0, 1.0, 1.0, 1.0, 1.0]
    """,

    'harmonic': """
    Entries proportional to 1/j embezzle a Bell pair with error
    2 (H_N - H_{N/2}) / H_N, which falls like 2 ln 2 / ln N.

    >>> bell = TargetState.maximally_entangled(2)
    >>> errors = []
    >>> for N in (2 ** 8, 2 ** 12, 2 ** 16):
    ...     weights = 1.0 / np.arange(1, N + 1)
    ...     value, uncertainty = monopartite_error(weights / math.fsum(weights), bell)
    ...     total, half = math.fsum(weights), math.fsum(weights[:N // 2])
    ...     assert abs(value * total - 2 * (total - half)) <= 1e-9
    ...     errors.append(value)
    >>> errors[0] > errors[1] > errors[2], errors[2] < 0.125
    (True, True)
    """,

    'appended_half_mode': """
    Appending a mode with occupation 1/2 never increases the error
    against a two-dimensional target.

    >>> with RandomEnv(23) as rand:
    ...     for trial in range(20):
    ...         values = list(rand.randreal(size=rand.randint(1, 9)))
    ...         psi = TargetState(rand.probability_vector(2))
    ...         before = monopartite_error(product_spectrum_topk(ModeSpectrum(values), 2 ** 10, 0.0), psi)[0]
    ...         after = monopartite_error(product_spectrum_topk(ModeSpectrum(values + [0.5]), 2 ** 10, 0.0), psi)[0]
    ...         assert after <= before + 1e-12
    ...         assert 0 <= bipartite_bound(after) <= math.sqrt(2)
    """,

    'oracle': """
    The oracle never beats the sorted alignment and finds it on all
    200 instances of seed 7.

    >>> rows = oracle_check(7, 200, iterations=1000)
    >>> len(rows), all(oracle_agrees(row[5]) for row in rows)
    (200, True)
    >>> max(abs(row[5]) for row in rows) < 1e-9
    True
    """,

    'cover': """
    Every sorted probability vector lies within the mesh of the net.

    >>> targets, mesh = epsilon_cover(3, 0.5)
    >>> with RandomEnv(29) as rand:
    ...     for trial in range(50):
    ...         p = rand.probability_vector(3)
    ...         assert min(spectrum_distance(p, t.schmidt_squares) for t in targets) <= mesh
    """,

    'xx_family': """
    The XX chain gives errors that decrease along the schedule up to
    the monotonicity slack, with tiny truncation uncertainty; the
    gapped chain has a pure half-chain state and does not embezzle.

    >>> report = family_scan(model_zoo('XX'), [8, 16, 32, 64, 128, 256], [2], [0.3])
    >>> errors = report.errors(2)
    >>> all(b <= a + 0.02 for a, b in zip(errors, errors[1:]))
    True
    >>> errors[-1] < errors[0]
    True
    >>> max(row.uncertainty for row in report.rows) <= 2e-6
    True
    >>> gapped = family_scan(model_zoo('gapped_shifted_XX', mu=3), [8, 32, 128], [2], [0.3])
    >>> min(gapped.errors(2)) >= 0.5
    True
    >>> [row.kernel_dimension for row in gapped.rows]
    [0, 0, 0]
    """,

    'sublattice': """
    The even sites of the XX chain carry a flat spectrum: error 1.

    >>> report = family_scan(model_zoo('XX'), [16, 32], [2], [0.3], topk=2 ** 16, mass_floor=0.0,
    ...     partition='sublattice')
    >>> [round(value, 9) for value in report.errors(2)]
    [1.0, 1.0]
    """,
}
