# -*- coding: utf8 -*-

"""
Spectral projectors

The positive spectral projector p(k) of a hopping symbol, its jumps on
the circle and the resulting criticality test: a model is critical
when p(k) has at least one discontinuity.
"""

import numpy as np

from fermbezzle import settings
from fermbezzle.builtin.base import Command, Result, JsonArtifact, choice, positive_integer, positive_real, text
from fermbezzle.builtin.hopping import HoppingModel, build_symbol, model_zoo
from fermbezzle.builtin.linalg import eigh, spectral_projector
from fermbezzle.core.convert import matrix_to_json
from fermbezzle.core.evaluation import NumericalError, ValidationError
from fermbezzle.core.numbers import TWO_PI, frobenius, wrap_angle

# points this close to a jump take the left limit
LEFT_CONTINUITY_WIDTH = 1e-9
# a grid interval counts as a jump only if it still does on a grid this much finer
SUBDIVISIONS = 16

messages = {
    'positive_projector_at': {
        'zerotol': "Zero tolerance `1` outside (0, 1e-3].",
    },
    'ground_state_symbol': {
        'policy': "Kernel policy `1` is not one of `2`.",
    },
    'detect_discontinuities': {
        'grid': "Grid size `1` is below 256.",
        'threshold': "Jump threshold `1` outside (0, 1).",
        'toomany': "Found `1` discontinuities (limit `2`); the projector symbol does not look piecewise continuous.",
    },
}

def spectral_projectors(symbol, k, zero_tol=settings.ZERO_TOL):
    """
    Positive, kernel and negative spectral projectors of h(k). Works on
    single angles and on arrays of angles (stacks of projectors).
    """

    if not 0 < zero_tol <= 1e-3:
        raise ValidationError('positive_projector_at', 'zerotol', zero_tol)
    k = np.asarray(k, dtype=float)
    where = 'positive_projector_at k=%s' % (float(k) if k.ndim == 0 else
        '[%g..%g]' % (k.min(), k.max()) if k.size else '[]')
    w, v = eigh(symbol(k), where)
    positive = spectral_projector(v, w > zero_tol)
    kernel = spectral_projector(v, np.abs(w) <= zero_tol)
    negative = spectral_projector(v, w < -zero_tol)
    return positive, kernel, negative

def positive_projector_at(symbol, k, zero_tol=settings.ZERO_TOL):
    """
    >>> xx = build_symbol(model_zoo('XX'))
    >>> positive_projector_at(xx, 0.0).real
    array([[1.]])
    >>> positive_projector_at(xx, np.pi).real
    array([[0.]])

    SSH at k = pi/2 projects onto (exp(i pi/4), 1) / sqrt(2):
    >>> ssh = build_symbol(model_zoo('SSH'))
    >>> phi = np.array([np.exp(1j * np.pi / 4), 1]) / np.sqrt(2)
    >>> bool(np.allclose(positive_projector_at(ssh, np.pi / 2), np.outer(phi, phi.conj())))
    True
    >>> positive_projector_at(xx, 0.0, zero_tol=0.1)
    Traceback (most recent call last):
    ...
    fermbezzle.core.evaluation.ValidationError: positive_projector_at::zerotol: Zero tolerance 0.1 outside (0, 1e-3].
    """

    return spectral_projectors(symbol, k, zero_tol)[0]

class Discontinuity(object):
    """
    A jump of a projector symbol at `location`, with the one-sided
    limits P = p(k0) (left) and Q = p(k0+) (right).
    """

    def __init__(self, location, left_limit, right_limit):
        self.location = float(location)
        self.left_limit = left_limit
        self.right_limit = right_limit

    @property
    def jump_size(self):
        return float(frobenius(self.left_limit - self.right_limit))

    def __repr__(self):
        return '<Discontinuity at %.9f, size %.6g>' % (self.location, self.jump_size)

    def to_json(self):
        return {
            'k0': self.location,
            'jump_size': self.jump_size,
            'left': matrix_to_json(self.left_limit),
            'right': matrix_to_json(self.right_limit),
        }

class ProjectorSymbol(object):
    """
    A projector valued function on the circle together with its jumps.
    Calling it returns the left-continuous representative; `evaluator`
    is the raw pointwise function.

    >>> p = ProjectorSymbol.constant(np.diag([1.0, 0.0]))
    >>> p(np.array([0.1, 2.0])).shape
    (2, 2, 2)
    >>> p.discontinuities
    []
    """

    def __init__(self, bands, evaluator, discontinuities=(), name=''):
        self.bands = bands
        self.evaluator = evaluator
        self.discontinuities = list(discontinuities)
        self.name = name
        # Fourier coefficient tables by grid size
        self.cache = {}

    @staticmethod
    def constant(matrix, name='constant'):
        matrix = np.array(matrix, dtype=complex)

        def evaluator(k):
            k = np.asarray(k, dtype=float)
            return np.broadcast_to(matrix, k.shape + matrix.shape).copy()

        return ProjectorSymbol(matrix.shape[0], evaluator, name=name)

    def __call__(self, k):
        k = np.asarray(k, dtype=float)
        values = np.asarray(self.evaluator(k))
        for jump in self.discontinuities:
            distance = np.abs(wrap_angle(k - jump.location + np.pi) - np.pi)
            near = distance < LEFT_CONTINUITY_WIDTH
            if np.any(near):
                values = np.array(values)
                values[near] = jump.left_limit
        return values

    def __repr__(self):
        return '<ProjectorSymbol %s: %d bands, %d jumps>' % (
            self.name or '?', self.bands, len(self.discontinuities))

def regularize_isolated(values, threshold=settings.JUMP_THRESHOLD):
    """
    Replaces samples on a periodic grid that differ from both neighbours
    while the neighbours agree (removable points such as an isolated
    zero of a band) by the mean of the neighbours.

    >>> regularize_isolated(np.array([1.0, 1.0, 0.0, 1.0]).reshape(4, 1, 1)).ravel()
    array([1., 1., 1., 1.])
    >>> regularize_isolated(np.array([1.0, 1.0, 0.0, 0.0]).reshape(4, 1, 1)).ravel()
    array([1., 1., 0., 0.])
    """

    values = np.array(values)
    before = np.roll(values, 1, axis=0)
    after = np.roll(values, -1, axis=0)
    isolated = (frobenius(values - before) > threshold) & (frobenius(values - after) > threshold) & \
        (frobenius(before - after) <= threshold)
    values[isolated] = 0.5 * (before[isolated] + after[isolated])
    return values

def nearest_projector(matrix):
    " Orthogonal projector onto the eigenvectors with eigenvalue above 1/2 "

    w, v = eigh(0.5 * (matrix + np.conj(matrix.T)), 'nearest_projector')
    return spectral_projector(v, w > 0.5)

def one_sided_limit(evaluator, k0, side, offset=settings.LIMIT_OFFSET):
    """
    Limit of `evaluator` at k0 from the left (side=-1) or right (+1),
    linearly extrapolated from two points at distance offset and
    2 offset and rounded to the nearest projector.
    """

    near = np.asarray(evaluator(k0 + side * offset))
    far = np.asarray(evaluator(k0 + 2 * side * offset))
    return nearest_projector(2 * near - far)

def bisect_jump(evaluator, a, b, width):
    """
    Shrinks [a, b] around a jump of `evaluator` until b - a <= width;
    at each step the half whose end values differ more is kept.
    """

    value_a = np.asarray(evaluator(a))
    value_b = np.asarray(evaluator(b))
    while b - a > width:
        mid = 0.5 * (a + b)
        value_mid = np.asarray(evaluator(mid))
        if frobenius(value_mid - value_a) > frobenius(value_mid - value_b):
            b, value_b = mid, value_mid
        else:
            a, value_a = mid, value_mid
    return 0.5 * (a + b)

def confirm_steps(evaluator, starts, step, jump_threshold, subdivisions=SUBDIVISIONS):
    """
    Keeps the grid steps [a, a + step] whose largest difference on a
    finer grid still exceeds jump_threshold; across a steep but
    continuous stretch the differences shrink with the step.

    >>> ssh = build_symbol(model_zoo('SSH', v=1, w=0.5))
    >>> positive = lambda k: spectral_projectors(ssh, k)[0]
    >>> steep = np.array([np.pi - 0.001, np.pi])
    >>> float(np.max(frobenius(positive(steep + 2 * np.pi / 4096) - positive(steep)))) > 1e-3
    True
    >>> confirm_steps(positive, steep, 2 * np.pi / 4096, 1e-3)
    array([], dtype=float64)
    >>> xx = ground_state_symbol(build_symbol(model_zoo('XX')))
    >>> confirm_steps(xx.evaluator, np.array([1.57, 2.0]), 0.002, 1e-3)
    array([1.57])
    """

    starts = np.asarray(starts, dtype=float)
    if not len(starts):
        return starts
    fine = np.add.outer(starts, step * np.linspace(0, 1, subdivisions + 1))
    values = np.asarray(evaluator(fine.ravel()))
    values = values.reshape(fine.shape + values.shape[1:])
    differences = frobenius(values[:, 1:] - values[:, :-1])
    return starts[differences.max(axis=1) > jump_threshold]

def circular_distance(a, b):
    d = abs(a - b) % TWO_PI
    return min(d, TWO_PI - d)

def detect_discontinuities(evaluator, grid_size=settings.GRID_SIZE,
        jump_threshold=settings.JUMP_THRESHOLD, max_jumps=settings.MAX_JUMPS,
        limit_offset=settings.LIMIT_OFFSET, refine_width=settings.REFINE_WIDTH):
    """
    Scans ||P(k_i+1) - P(k_i)||_F on a uniform grid, keeps the steps
    that still jump on a finer grid, refines each by bisection and
    confirms it by its one-sided limits.
    Candidates within two grid steps of each other are one jump; when
    the outer limits of such a cluster agree it is dropped as a
    removable point.

    >>> xx = ground_state_symbol(build_symbol(model_zoo('XX')))
    >>> jumps = detect_discontinuities(xx.evaluator)
    >>> [round(jump.location / np.pi, 9) for jump in jumps]
    [0.5, 1.5]
    >>> [(float(jump.left_limit.real[0, 0]), float(jump.right_limit.real[0, 0])) for jump in jumps]
    [(1.0, 0.0), (0.0, 1.0)]
    >>> detect_discontinuities(ProjectorSymbol.constant([[1.0]]).evaluator)
    []
    >>> detect_discontinuities(xx.evaluator, grid_size=128)
    Traceback (most recent call last):
    ...
    fermbezzle.core.evaluation.ValidationError: detect_discontinuities::grid: Grid size 128 is below 256.
    """

    if grid_size < 256:
        raise ValidationError('detect_discontinuities', 'grid', grid_size)
    if not 0 < jump_threshold < 1:
        raise ValidationError('detect_discontinuities', 'threshold', jump_threshold)
    step = TWO_PI / grid_size
    nodes = step * np.arange(grid_size)
    values = np.asarray(evaluator(nodes))
    differences = frobenius(np.roll(values, -1, axis=0) - values)
    starts = confirm_steps(evaluator, nodes[differences > jump_threshold], step, jump_threshold)
    if len(starts) > 2 * max_jumps:
        raise NumericalError('detect_discontinuities', 'toomany', len(starts), max_jumps)

    located = []
    for a in starts:
        location = bisect_jump(evaluator, a, a + step, refine_width)
        located.append(float(wrap_angle(location)))
    located.sort()

    clusters = []
    for location in located:
        if clusters and location - clusters[-1][-1] < 2 * step:
            clusters[-1].append(location)
        else:
            clusters.append([location])
    if len(clusters) > 1 and circular_distance(clusters[0][0], clusters[-1][-1]) < 2 * step:
        last = clusters.pop()
        clusters[0] = [x - TWO_PI for x in last] + clusters[0]

    result = []
    for cluster in clusters:
        first, last = cluster[0], cluster[-1]
        left = one_sided_limit(evaluator, first, -1, limit_offset)
        right = one_sided_limit(evaluator, last, +1, limit_offset)
        if frobenius(left - right) <= jump_threshold:
            continue
        location = float(wrap_angle(0.5 * (first + last)))
        result.append(Discontinuity(location, left, right))
    if len(result) > max_jumps:
        raise NumericalError('detect_discontinuities', 'toomany', len(result), max_jumps)
    result.sort(key=lambda jump: jump.location)
    return result

KERNEL_POLICIES = ('empty', 'full')

def ground_state_symbol(symbol, kernel_policy='empty', zero_tol=settings.ZERO_TOL,
        grid_size=settings.GRID_SIZE, jump_threshold=settings.JUMP_THRESHOLD,
        max_jumps=settings.MAX_JUMPS):
    """
    The ground state projector symbol: p = p+ (policy empty) or
    p+ + p0 (policy full), with its discontinuities.

    >>> p = ground_state_symbol(build_symbol(model_zoo('gapless_diag')))
    >>> p.discontinuities
    []
    >>> bool(np.allclose(p(np.linspace(0, 6, 7)), np.diag([1.0, 0.0])))
    True
    >>> ground_state_symbol(build_symbol(model_zoo('XX')), 'half')
    Traceback (most recent call last):
    ...
    fermbezzle.core.evaluation.ValidationError: ground_state_symbol::policy: Kernel policy half is not one of empty, full.
    """

    if kernel_policy not in KERNEL_POLICIES:
        raise ValidationError('ground_state_symbol', 'policy', kernel_policy, ', '.join(KERNEL_POLICIES))

    def evaluator(k):
        positive, kernel, negative = spectral_projectors(symbol, k, zero_tol)
        if kernel_policy == 'full':
            return positive + kernel
        return positive

    jumps = detect_discontinuities(evaluator, grid_size, jump_threshold, max_jumps)
    return ProjectorSymbol(symbol.bands, evaluator, jumps, name=symbol.model.name)

class CriticalityReport(object):
    def __init__(self, critical, evidence, psym):
        self.critical = critical
        self.evidence = evidence
        self.psym = psym

    def __repr__(self):
        return '<CriticalityReport critical=%s, %d jumps>' % (self.critical, len(self.evidence))

def is_critical(model, zero_tol=settings.ZERO_TOL, grid_size=settings.GRID_SIZE,
        jump_threshold=settings.JUMP_THRESHOLD, max_jumps=settings.MAX_JUMPS):
    """
    >>> is_critical(model_zoo('XX')).critical
    True
    >>> is_critical(model_zoo('gapless_diag')).critical
    False
    >>> is_critical(model_zoo('gapped_shifted_XX', mu=3)).critical
    False
    """

    psym = ground_state_symbol(build_symbol(model), 'empty', zero_tol, grid_size,
        jump_threshold, max_jumps)
    return CriticalityReport(bool(psym.discontinuities), psym.discontinuities, psym)

class Criticality(Command):
    """
    Locate the jumps of the positive spectral projector symbol.

    The report lists every discontinuity k0 with its one-sided limit
    projectors and the symbol h(k) as an exact expression.
    """

    name = 'criticality'
    output = 'criticality.json'

    options = {
        'model': (None, text, "model file or zoo:NAME[,key=value]"),
        'grid': (str(settings.GRID_SIZE), positive_integer, "scan grid size"),
        'jump-threshold': (str(settings.JUMP_THRESHOLD), positive_real, "minimal Frobenius jump"),
        'zero-tol': (str(settings.ZERO_TOL), positive_real, "kernel band half width"),
        'kernel-policy': ('empty', choice(*KERNEL_POLICIES), "kernel assignment"),
    }

    def apply(self, config, evaluation):
        model = config.load_model()
        symbol = build_symbol(model)
        psym = ground_state_symbol(symbol, config.kernel_policy, config.zero_tol, config.grid,
            config.jump_threshold)
        critical = bool(psym.discontinuities)
        data = {
            'model': model.name,
            'symbol': str(symbol.to_sympy().tolist()),
            'critical': critical,
            'discontinuities': [jump.to_json() for jump in psym.discontinuities],
        }
        summary = '%s: %s' % (model.name, 'critical' if critical else 'not critical')
        if critical:
            summary += ', jumps at k0 = %s' % ', '.join(
                '%.6f' % jump.location for jump in psym.discontinuities)
        return Result(summary, [JsonArtifact(config.output, data)])

def shifted(model, c):
    " model with h(0) + c "

    return model + HoppingModel(model.bands, {0: c * np.eye(model.bands)}, name='%g' % c)

__test__ = {
    'projector_properties': """
    Sampled projectors are idempotent and Hermitian, and the positive,
    kernel and negative ranks add up to the number of bands.

    >>> k = np.linspace(0, 2 * np.pi, 257)
    >>> for name in ('XX', 'SSH', 'gapless_diag', 'twisted_XX'):
    ...     positive, kernel, negative = spectral_projectors(build_symbol(model_zoo(name)), k)
    ...     assert np.max(frobenius(positive @ positive - positive)) <= 1e-9
    ...     assert np.max(frobenius(positive - np.conj(np.swapaxes(positive, 1, 2)))) <= 1e-12
    ...     ranks = np.trace(positive + kernel + negative, axis1=1, axis2=2).real
    ...     assert np.allclose(ranks, positive.shape[-1])
    """,

    'ssh_jump': """
    The SSH projector jumps once, at pi, from the projector onto
    (i, 1) / sqrt(2) to the one onto (-i, 1) / sqrt(2).

    >>> jumps = ground_state_symbol(build_symbol(model_zoo('SSH'))).discontinuities
    >>> len(jumps), abs(jumps[0].location - np.pi) < 1e-6
    (1, True)
    >>> left = np.array([1j, 1]) / np.sqrt(2)
    >>> right = np.array([-1j, 1]) / np.sqrt(2)
    >>> float(frobenius(jumps[0].left_limit - np.outer(left, left.conj()))) <= 1e-6
    True
    >>> float(frobenius(jumps[0].right_limit - np.outer(right, right.conj()))) <= 1e-6
    True

    Away from |v| = |w| the chain is gapped and the projector continuous:
    >>> is_critical(model_zoo('SSH', v=1, w=0.5)).critical
    False
    """,

    'jump_budget': """
    Only confirmed discontinuities count against max_jumps.

    >>> twisted = build_symbol(model_zoo('twisted_XX', phi=0.3))
    >>> ground_state_symbol(twisted, max_jumps=1)
    Traceback (most recent call last):
    ...
    fermbezzle.core.evaluation.NumericalError: detect_discontinuities::toomany: Found 2 discontinuities (limit 1); the projector symbol does not look piecewise continuous.
    >>> len(ground_state_symbol(twisted, max_jumps=2).discontinuities)
    2
    >>> ground_state_symbol(build_symbol(model_zoo('SSH', v=1, w=0.5)), max_jumps=1).discontinuities
    []
    """,

    'left_continuity': """
    >>> xx = ground_state_symbol(build_symbol(model_zoo('XX')))
    >>> k0 = xx.discontinuities[0].location
    >>> float(xx(k0).real[0, 0]), float(xx(np.array([k0])).real[0, 0, 0])
    (1.0, 1.0)
    """,

    'shift_invariance': """
    Shifting h(k) by a constant smaller than the gap leaves the jumps in
    place.

    >>> for name, params, c in (('SSH', {'v': 1, 'w': 0.5}, 0.2),
    ...         ('gapped_shifted_XX', {'mu': 3}, -0.5)):
    ...     model = model_zoo(name, **params)
    ...     assert is_critical(shifted(model, c)).critical == is_critical(model).critical
    >>> twisted = model_zoo('twisted_XX', phi=0.3)
    >>> locations = [jump.location for jump in is_critical(twisted).evidence]
    >>> [abs(x - y) < 1e-9 for x, y in zip(locations, [0.5 * np.pi + 0.3, 1.5 * np.pi + 0.3])]
    [True, True]
    """,
}
