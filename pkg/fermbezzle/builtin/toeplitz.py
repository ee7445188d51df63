# -*- coding: utf8 -*-

"""
Block Toeplitz sections

Finite sections of the half-chain correlation operator q*pq: the block
Toeplitz matrices built from the Fourier coefficients of a projector
symbol, their spectra, and the Hilbert-Schmidt mass of the
off-diagonal corner deciding whether the half-chain parity is
implementable.
"""

import math

import numpy as np
from scipy.stats import linregress

from fermbezzle import settings
from fermbezzle.builtin.base import Command, CsvArtifact, Result, choice, positive_integer, positive_real, schedule, text
from fermbezzle.builtin.hopping import build_symbol, check_grid, model_zoo
from fermbezzle.builtin.linalg import eigvalsh
from fermbezzle.builtin.quasifree import ModeSpectrum
from fermbezzle.builtin.spectral import KERNEL_POLICIES, Discontinuity, ProjectorSymbol, ground_state_symbol, regularize_isolated
from fermbezzle.core.evaluation import NumericalError, ValidationError
from fermbezzle.core.numbers import TWO_PI, frobenius
from fermbezzle.core.util import parallel_map

# grid nodes this close to a jump take the mean of the two limits
JUMP_NODE_WIDTH = 1e-7

messages = {
    'finite_section': {
        'size': "Section size `1` outside [1, `2`].",
    },
    'correlation_spectrum': {
        'range': "Section eigenvalues [`1`, `2`] leave [0, 1] by more than `3`; the symbol is not a projector.",
        'clip': "Clip tolerance `1` outside [0, 1e-6].",
    },
    'hs_offdiagonal_partial_sums': {
        'm': "Number of offsets `1` is below 16.",
    },
    'hs_divergence_verdict': {
        'checkpoints': "Only `1` dyadic checkpoints m >= 16 available, need 4.",
    },
}

def sawtooth(k, k0):
    " 1/2 - t/2pi, t = (k - k0) mod 2pi; jumps by +1 at k0 "

    t = np.mod(np.asarray(k) - k0, TWO_PI)
    return 0.5 - t / TWO_PI

def snap_to_node(location, grid_size, width=JUMP_NODE_WIDTH):
    """
    The quadrature node nearest to a located jump when it lies within
    width of it, else the location itself.

    >>> snap_to_node(np.pi / 2 + 1e-10, 2 ** 16) == np.pi / 2
    True
    >>> snap_to_node(0.3, 2 ** 16)
    0.3
    """

    index = int(round(float(location) * grid_size / TWO_PI))
    node = TWO_PI * index / grid_size
    return node if abs(location - node) < width else location

def symbol_coefficients(psym, max_offset, grid_size=settings.QUADRATURE_GRID):
    """
    Fourier coefficients (1/2pi) int exp(ikm) p(k) dk for |m| <= max_offset,
    element m at index m + max_offset.

    Every jump J = Q - P at k0 is first removed by subtracting the
    sawtooth J (1/2 - (k - k0)/2pi), whose coefficients
    J i exp(imk0) / (2 pi m) are added back exactly; the continuous
    remainder goes through the trapezoidal rule. Jumps located within
    JUMP_NODE_WIDTH of a node are moved onto it, which makes the
    coefficients of piecewise constant symbols with jumps on nodes exact.

    >>> xx = ground_state_symbol(build_symbol(model_zoo('XX')))
    >>> phi = symbol_coefficients(xx, 3)[:, 0, 0]
    >>> [round(float(z.real) * np.pi, 10) + 0.0 for z in phi]
    [-0.3333333333, 0.0, 1.0, 1.5707963268, 1.0, 0.0, -0.3333333333]
    """

    check_grid(max_offset, grid_size)
    table = psym.cache.get(grid_size)
    if table is None:
        nodes = TWO_PI * np.arange(grid_size) / grid_size
        values = regularize_isolated(np.asarray(psym.evaluator(nodes), dtype=complex))
        locations = [snap_to_node(jump.location, grid_size) for jump in psym.discontinuities]
        for jump, location in zip(psym.discontinuities, locations):
            size = jump.right_limit - jump.left_limit
            weights = sawtooth(nodes, location)
            at_jump = np.abs(np.mod(nodes - location + np.pi, TWO_PI) - np.pi) < JUMP_NODE_WIDTH
            weights[at_jump] = 0.0
            values[at_jump] = 0.5 * (jump.left_limit + jump.right_limit)
            values -= weights[:, np.newaxis, np.newaxis] * size
        table = np.fft.ifft(values, axis=0)
        m = np.arange(1, grid_size)
        m = np.where(m < grid_size // 2, m, m - grid_size)
        for jump, location in zip(psym.discontinuities, locations):
            size = jump.right_limit - jump.left_limit
            factors = 1j * np.exp(1j * m * location) / (TWO_PI * m)
            table[1:] += factors[:, np.newaxis, np.newaxis] * size
        psym.cache[grid_size] = table
    m = np.arange(-max_offset, max_offset + 1)
    return table[m % grid_size]

class FiniteSection(object):
    """
    The N x N block matrix with blocks Phi_(x-y), x, y = 0, ..., N-1.
    """

    def __init__(self, matrix, block_count, bands, source=''):
        self.matrix = matrix
        self.block_count = block_count
        self.bands = bands
        self.source = source

    def __repr__(self):
        return '<FiniteSection %s: N=%d, %d bands>' % (self.source or '?', self.block_count, self.bands)

    def corner(self, n):
        size = n * self.bands
        return FiniteSection(self.matrix[:size, :size], n, self.bands, self.source)

def blocks_to_section(coefficients, N):
    """
    Assembles the block Toeplitz matrix from coefficients indexed
    m + (N - 1), m = -(N-1), ..., N-1.
    """

    bands = coefficients.shape[-1]
    index = np.arange(N)
    offsets = index[:, np.newaxis] - index[np.newaxis, :] + (N - 1)
    blocks = coefficients[offsets]
    matrix = blocks.transpose(0, 2, 1, 3).reshape(N * bands, N * bands)
    return 0.5 * (matrix + np.conj(matrix.T))

def finite_section(psym, N, grid_size=settings.QUADRATURE_GRID):
    """
    >>> xx = ground_state_symbol(build_symbol(model_zoo('XX')))
    >>> finite_section(xx, 1).matrix.real
    array([[0.5]])
    >>> bool(np.allclose(finite_section(xx, 2).matrix, [[0.5, 1 / np.pi], [1 / np.pi, 0.5]], atol=1e-10))
    True
    >>> np.round(finite_section(ProjectorSymbol.constant([[1.0]]), 3).matrix.real, 12) + 0.0
    array([[1., 0., 0.],
           [0., 1., 0.],
           [0., 0., 1.]])
    >>> finite_section(xx, 0)
    Traceback (most recent call last):
    ...
    fermbezzle.core.evaluation.ValidationError: finite_section::size: Section size 0 outside [1, 4096].
    """

    if not 1 <= N <= settings.MAX_SECTION_BLOCKS:
        raise ValidationError('finite_section', 'size', N, settings.MAX_SECTION_BLOCKS)
    coefficients = symbol_coefficients(psym, N - 1, grid_size)
    return FiniteSection(blocks_to_section(coefficients, N), N, psym.bands, psym.name)

def correlation_spectrum(section, clip_tol=settings.CLIP_TOL):
    """
    >>> xx = ground_state_symbol(build_symbol(model_zoo('XX')))
    >>> values = correlation_spectrum(finite_section(xx, 2)).values
    >>> bool(np.allclose(values, [0.5 - 1 / np.pi, 0.5 + 1 / np.pi], atol=1e-10))
    True
    >>> correlation_spectrum(FiniteSection(np.diag([0.5, 1.2]), 2, 1))
    Traceback (most recent call last):
    ...
    fermbezzle.core.evaluation.NumericalError: correlation_spectrum::range: Section eigenvalues [0.5, 1.2] leave [0, 1] by more than 1e-08; the symbol is not a projector.
    """

    if not 0 <= clip_tol <= 1e-6:
        raise ValidationError('correlation_spectrum', 'clip', clip_tol)
    values = eigvalsh(section.matrix, 'correlation_spectrum')
    low, high = float(values[0]), float(values[-1])
    if low < -clip_tol or high > 1 + clip_tol:
        raise NumericalError('correlation_spectrum', 'range', low, high, clip_tol)
    return ModeSpectrum(np.clip(values, 0.0, 1.0),
        source='%s N=%d' % (section.source, section.block_count))

def filling_gap(values, interval=(0.0, 1.0)):
    """
    Largest distance between consecutive points of `values` inside the
    closed interval, counting its ends.

    >>> filling_gap([0.25, 0.5, 0.625], (0.0, 1.0))
    0.375
    >>> filling_gap([], (0.25, 0.75))
    0.5
    """

    a, b = interval
    values = np.asarray(getattr(values, 'values', values), dtype=float)
    inside = values[(values >= a) & (values <= b)]
    points = np.concatenate([[a], np.sort(inside), [b]])
    return float(np.max(np.diff(points)))

def hs_partial_sums_from_coefficients(coefficients):
    """
    S_m = sum_(j<=m) j ||Phi_j||_F^2 for coefficients Phi_1, Phi_2, ...
    (matrices or scalars).

    >>> hs_partial_sums_from_coefficients([[[1.0]], [[0.0]], [[0.0]]])
    array([1., 1., 1.])
    """

    coefficients = np.asarray(coefficients, dtype=complex)
    if coefficients.ndim == 1:
        norms = np.abs(coefficients) ** 2
    else:
        norms = frobenius(coefficients) ** 2
    j = np.arange(1, len(norms) + 1)
    return np.cumsum(j * norms)

def hs_offdiagonal_partial_sums(psym, M, grid_size=settings.QUADRATURE_GRID):
    """
    Hilbert-Schmidt mass sum_(x>=0, y<0) ||Phi(x-y)||^2 truncated at
    offset m, for m = 1, ..., M.

    >>> sums = hs_offdiagonal_partial_sums(ProjectorSymbol.constant(np.diag([1.0, 0.0])), 16)
    >>> float(sums.max()) < 1e-20
    True
    """

    if M < 16:
        raise ValidationError('hs_offdiagonal_partial_sums', 'm', M)
    coefficients = symbol_coefficients(psym, M, grid_size)
    return hs_partial_sums_from_coefficients(coefficients[M + 1:])

class HSVerdict(object):
    def __init__(self, verdict, slope, intercept, r_squared, checkpoints):
        self.verdict = verdict
        self.slope = slope
        self.intercept = intercept
        self.r_squared = r_squared
        self.checkpoints = checkpoints

    def __repr__(self):
        return '<HSVerdict %s: slope %.4g, R^2 %.4g>' % (self.verdict, self.slope, self.r_squared)

    def to_json(self):
        return {
            'verdict': self.verdict,
            'slope': self.slope,
            'intercept': self.intercept,
            'r_squared': self.r_squared,
            'checkpoints': self.checkpoints,
        }

def hs_divergence_verdict(sums):
    """
    Fits S_m = a + c ln m over dyadic m >= 16: log_divergent when
    c > 0.01 with R^2 >= 0.99, convergent when the last doubling adds
    at most 1e-6 max(1, S_M), inconclusive otherwise.

    >>> hs_divergence_verdict(np.zeros(4096)).verdict
    'convergent'
    >>> hs_divergence_verdict(0.05 * np.log(np.arange(1, 4097))).verdict
    'log_divergent'
    >>> hs_divergence_verdict(np.zeros(64))
    Traceback (most recent call last):
    ...
    fermbezzle.core.evaluation.ValidationError: hs_divergence_verdict::checkpoints: Only 3 dyadic checkpoints m >= 16 available, need 4.
    """

    sums = np.asarray(sums, dtype=float)
    M = len(sums)
    checkpoints = []
    m = 16
    while m <= M:
        checkpoints.append(m)
        m *= 2
    if len(checkpoints) < 4:
        raise ValidationError('hs_divergence_verdict', 'checkpoints', len(checkpoints))
    x = np.log(checkpoints)
    y = sums[np.array(checkpoints) - 1]
    if np.ptp(y) == 0:
        slope, intercept, r_squared = 0.0, float(y[0]), 1.0
    else:
        fit = linregress(x, y)
        slope, intercept, r_squared = float(fit.slope), float(fit.intercept), float(fit.rvalue ** 2)
    last = float(y[-1])
    before = float(sums[checkpoints[-1] // 2 - 1])
    if slope > 0.01 and r_squared >= 0.99:
        verdict = 'log_divergent'
    elif last - before <= 1e-6 * max(1.0, last):
        verdict = 'convergent'
    else:
        verdict = 'inconclusive'
    return HSVerdict(verdict, slope, intercept, r_squared, checkpoints)

class TraceClassEvidence(object):
    def __init__(self, sizes, sums, bounded, drift):
        self.sizes = list(sizes)
        self.sums = list(sums)
        self.bounded = bounded
        self.drift = drift

    def __repr__(self):
        return '<TraceClassEvidence bounded=%s, drift %.3g>' % (self.bounded, self.drift)

    def to_json(self):
        return {'sizes': self.sizes, 'sums': self.sums, 'bounded': self.bounded, 'drift': self.drift}

def distance_to_pure(spectrum):
    " sum_j min(lambda_j, 1 - lambda_j) "

    values = spectrum.values
    return math.fsum(np.minimum(values, 1.0 - values))

def trace_class_evidence(psym, sizes=settings.TRACE_CLASS_SIZES, clip_tol=settings.CLIP_TOL,
        grid_size=settings.QUADRATURE_GRID, jobs=1):
    """
    Sums of min(lambda, 1 - lambda) over the sections of the given
    sizes; bounded when each doubling changes the sum by at most 5%
    (or all sums are below 1e-8).

    >>> trace_class_evidence(ProjectorSymbol.constant([[1.0]]), sizes=(8, 16, 32)).bounded
    True
    """

    sums = parallel_map(
        lambda N: distance_to_pure(correlation_spectrum(finite_section(psym, N, grid_size), clip_tol)),
        sizes, jobs)
    if max(sums) <= settings.TRACE_CLASS_FLOOR:
        return TraceClassEvidence(sizes, sums, True, 0.0)
    drift = max(abs(b - a) / max(a, settings.TRACE_CLASS_FLOOR) for a, b in zip(sums, sums[1:]))
    return TraceClassEvidence(sizes, sums, drift <= settings.TRACE_CLASS_DRIFT, drift)

class Spectrum(Command):
    """
    Eigenvalues of finite sections of the half-chain correlation operator.

    Writes one CSV row (N, index, lambda) per eigenvalue.
    """

    name = 'spectrum'
    output = 'spectrum.csv'

    options = {
        'model': (None, text, "model file or zoo:NAME[,key=value]"),
        'sizes': ('16:1024:x2', schedule, "section sizes N"),
        'kernel-policy': ('empty', choice(*KERNEL_POLICIES), "kernel assignment"),
        'grid': (str(settings.GRID_SIZE), positive_integer, "discontinuity scan grid"),
        'quadrature': (str(settings.QUADRATURE_GRID), positive_integer, "Fourier quadrature grid"),
        'clip-tol': (str(settings.CLIP_TOL), positive_real, "eigenvalue clipping tolerance"),
    }

    def validate(self, config, evaluation):
        if max(config.sizes) > settings.MAX_SECTION_BLOCKS:
            evaluation.error('General', 'field', 'sizes', max(config.sizes))

    def apply(self, config, evaluation):
        model = config.load_model()
        psym = ground_state_symbol(build_symbol(model), config.kernel_policy, grid_size=config.grid)
        symbol_coefficients(psym, max(config.sizes) - 1, config.quadrature)

        def spectrum(N):
            values = correlation_spectrum(finite_section(psym, N, config.quadrature), config.clip_tol)
            evaluation.print_out('N=%d done' % N)
            return values

        spectra = parallel_map(spectrum, config.sizes, config.jobs)
        rows = []
        for N, values in zip(config.sizes, spectra):
            rows.extend((N, index, float(value)) for index, value in enumerate(values))
        gap = filling_gap(spectra[-1])
        summary = '%s: %d sections up to N=%d, largest gap in [0, 1] at N=%d: %.4g' % (
            model.name, len(spectra), config.sizes[-1], config.sizes[-1], gap)
        return Result(summary, [CsvArtifact(config.output, ['N', 'index', 'lambda'], rows)])

__test__ = {
    'sections': """
    Corners of larger sections equal smaller sections exactly; traces
    match the mean of the symbol.

    >>> xx = ground_state_symbol(build_symbol(model_zoo('XX')))
    >>> big = finite_section(xx, 64)
    >>> bool(np.array_equal(big.corner(32).matrix, finite_section(xx, 32).matrix))
    True
    >>> bool(abs(np.trace(big.matrix).real - 64 * 0.5) < 1e-9)
    True
    >>> ssh = ground_state_symbol(build_symbol(model_zoo('SSH')))
    >>> section = finite_section(ssh, 16)
    >>> float(np.max(np.abs(section.matrix - np.conj(section.matrix.T))))
    0.0
    >>> bool(abs(np.trace(section.matrix).real - 16) < 1e-9)
    True
    """,

    'xx_filling': """
    The XX section spectrum lies in [0, 1], is symmetric under
    lambda -> 1 - lambda, and fills [0, 1] slowly as N grows.

    >>> xx = ground_state_symbol(build_symbol(model_zoo('XX')))
    >>> values = correlation_spectrum(finite_section(xx, 512)).values
    >>> bool(values.min() >= 0 and values.max() <= 1)
    True
    >>> float(np.max(np.abs(np.sort(values) - np.sort(1 - values)))) <= 1e-9
    True
    >>> small = correlation_spectrum(finite_section(xx, 32))
    >>> filling_gap(values) < filling_gap(small)
    True
    >>> 0.26 < filling_gap(values) < 0.28
    True

    With the jumps on quadrature nodes the coefficients at m = 0 and at
    even m are exact:
    >>> phi = symbol_coefficients(xx, 8)[:, 0, 0]
    >>> float(np.max(np.abs(phi[8::2] - [0.5, 0.0, 0.0, 0.0, 0.0]))) <= 1e-13
    True
    >>> [float(np.max(np.abs(np.sort(v) - np.sort(1 - v)))) <= 1e-9 for v in
    ...     (correlation_spectrum(finite_section(xx, N)).values for N in (64, 256))]
    [True, True]
    """,

    'gapped': """
    >>> p = ground_state_symbol(build_symbol(model_zoo('gapped_shifted_XX', mu=3)))
    >>> values = correlation_spectrum(finite_section(p, 64)).values
    >>> float(np.max(np.abs(values - 1))) <= 1e-8
    True
    >>> sums = hs_offdiagonal_partial_sums(p, 4096)
    >>> hs_divergence_verdict(sums).verdict, float(sums[-1]) < 1e-12
    ('convergent', True)
    """,

    'hs_sums': """
    The XX partial sums grow like (1/pi^2) sum over odd j <= m of 1/j.

    >>> xx = ground_state_symbol(build_symbol(model_zoo('XX')))
    >>> sums = hs_offdiagonal_partial_sums(xx, 4096)
    >>> bool(np.all(np.diff(sums) >= 0))
    True
    >>> exact = np.cumsum([1 / j if j % 2 else 0.0 for j in range(1, 4097)]) / np.pi ** 2
    >>> float(np.max(np.abs(sums - exact))) < 1e-8
    True
    >>> verdict = hs_divergence_verdict(sums)
    >>> verdict.verdict, verdict.slope > 0.01, verdict.r_squared >= 0.99
    ('log_divergent', True, True)

    Conjugating the symbol by a constant unitary leaves the sums alone.
    >>> from fermbezzle.builtin.randomnumbers import RandomEnv
    >>> ssh = ground_state_symbol(build_symbol(model_zoo('SSH')))
    >>> with RandomEnv(2) as rand:
    ...     u = rand.unitary(2)
    >>> rotated = ProjectorSymbol(2, lambda k: u @ ssh.evaluator(k) @ u.conj().T)
    >>> rotated.discontinuities = [Discontinuity(jump.location, u @ jump.left_limit @ u.conj().T,
    ...     u @ jump.right_limit @ u.conj().T) for jump in ssh.discontinuities]
    >>> a = hs_offdiagonal_partial_sums(ssh, 256)
    >>> b = hs_offdiagonal_partial_sums(rotated, 256)
    >>> float(np.max(np.abs(a - b))) < 1e-10
    True

    Coefficients decaying like j^-0.55 do not look logarithmic.
    >>> j = np.arange(1, 4097)
    >>> hs_divergence_verdict(hs_partial_sums_from_coefficients(j ** -0.55)).verdict in (
    ...     'inconclusive', 'log_divergent')
    True
    """,
}
