# -*- coding: utf8 -*-

"""
Finite chains

Open chains of n cells carrying the hopping terms of a model that fit
inside the chain, their quasi-free ground states and the mode spectra
of a subsystem.
"""

import numpy as np
from scipy.stats import linregress

from fermbezzle import settings
from fermbezzle.builtin.base import (Command, CsvArtifact, PlotArtifact, Result, choice, integer,
    positive_integer, schedule, text)
from fermbezzle.builtin.hopping import HoppingModel, model_zoo
from fermbezzle.builtin.linalg import eigh, eigvalsh, spectral_projector
from fermbezzle.builtin.quasifree import ModeSpectrum, entanglement_entropy
from fermbezzle.core.evaluation import NumericalError, ValidationError
from fermbezzle.core.util import parallel_map

PARTITIONS = ('half', 'sublattice')
KERNEL_POLICIES = ('empty', 'full', 'half')

messages = {
    'finite_ground_projection': {
        'policy': "Kernel policy `1` is not one of `2`.",
    },
    'halfchain_modes': {
        'range': "Subsystem occupations [`1`, `2`] leave [0, 1]; the matrix is not a projection.",
        'shape': "Projection of shape `1` does not belong to a chain of dimension `2`.",
    },
}

class FiniteChain(object):
    """
    >>> chain = open_chain_hamiltonian(model_zoo('XX'), 4)
    >>> chain
    <FiniteChain XX: 4 sites, 1 bands, cut 2 (half)>
    >>> chain.region
    [0, 1]
    >>> open_chain_hamiltonian(model_zoo('XX'), 4, partition='sublattice').region
    [0, 2]
    """

    messages = {
        'sites': "Chain of `1` sites is too short (at least 2).",
        'support': "Hopping radius `1` does not fit into `2` sites.",
        'cut': "Cut `1` outside [1, `2`].",
        'partition': "Partition `1` is not one of `2`.",
    }

    def __init__(self, model, sites, cut, single_particle_h, partition='half'):
        self.model = model
        self.sites = sites
        self.bands = model.bands
        self.cut = cut
        self.single_particle_h = single_particle_h
        self.partition = partition

    @property
    def dimension(self):
        return self.sites * self.bands

    @property
    def region(self):
        " sites of subsystem A "

        if self.partition == 'sublattice':
            return list(range(0, self.sites, 2))
        return list(range(self.cut))

    def __repr__(self):
        return '<FiniteChain %s: %d sites, %d bands, cut %d (%s)>' % (
            self.model.name or '?', self.sites, self.bands, self.cut, self.partition)

def open_chain_hamiltonian(model, n, cut=None, partition='half'):
    """
    Block (x, y) = h(x - y) for 0 <= x, y < n; no wraparound.

    >>> open_chain_hamiltonian(model_zoo('XX'), 2).single_particle_h.real
    array([[0., 1.],
           [1., 0.]])
    >>> open_chain_hamiltonian(model_zoo('SSH'), 2).single_particle_h.real
    array([[0., 1., 0., 1.],
           [1., 0., 0., 0.],
           [0., 0., 0., 1.],
           [1., 0., 1., 0.]])
    >>> open_chain_hamiltonian(model_zoo('XX'), 1)
    Traceback (most recent call last):
    ...
    fermbezzle.core.evaluation.ValidationError: FiniteChain::sites: Chain of 1 sites is too short (at least 2).
    """

    if n < 2:
        raise ValidationError('FiniteChain', 'sites', n)
    if model.radius >= n:
        raise ValidationError('FiniteChain', 'support', model.radius, n)
    if cut is None:
        cut = n // 2
    if not 1 <= cut <= n - 1:
        raise ValidationError('FiniteChain', 'cut', cut, n - 1)
    if partition not in PARTITIONS:
        raise ValidationError('FiniteChain', 'partition', partition, ', '.join(PARTITIONS))
    b = model.bands
    h = np.zeros((n * b, n * b), dtype=complex)
    for x in model.support:
        # block (y + x, y) = h(x)
        h += np.kron(np.eye(n, k=-x), model.coefficient(x))
    return FiniteChain(model, n, cut, h, partition)

def kernel_dimension(chain, zero_tol=settings.ZERO_TOL):
    """
    >>> kernel_dimension(open_chain_hamiltonian(model_zoo('XX'), 5))
    1
    >>> kernel_dimension(open_chain_hamiltonian(model_zoo('XX'), 6))
    0
    """

    w = eigvalsh(chain.single_particle_h, 'kernel_dimension')
    return int(np.sum(np.abs(w) <= zero_tol))

def finite_ground_projection(chain, kernel_policy='empty', zero_tol=settings.ZERO_TOL):
    """
    Projection onto the eigenvectors with eigenvalue above zero_tol,
    plus none, all, or the first half (in eigensolver order) of the
    kernel.

    >>> p = finite_ground_projection(open_chain_hamiltonian(model_zoo('XX'), 2))
    >>> bool(np.allclose(p, [[0.5, 0.5], [0.5, 0.5]]))
    True
    >>> p = finite_ground_projection(open_chain_hamiltonian(model_zoo('gapped_shifted_XX', mu=3), 5))
    >>> bool(np.allclose(p, np.eye(5)))
    True
    >>> zero = HoppingModel(1, {0: [[0.0]]}, name='zero')
    >>> float(np.abs(finite_ground_projection(open_chain_hamiltonian(zero, 3))).max())
    0.0
    >>> float(np.trace(finite_ground_projection(open_chain_hamiltonian(zero, 3), 'half')).real)
    2.0
    """

    if kernel_policy not in KERNEL_POLICIES:
        raise ValidationError('finite_ground_projection', 'policy', kernel_policy, ', '.join(KERNEL_POLICIES))
    w, v = eigh(chain.single_particle_h, 'finite_ground_projection')
    mask = w > zero_tol
    kernel = np.nonzero(np.abs(w) <= zero_tol)[0]
    if kernel_policy == 'full':
        mask[kernel] = True
    elif kernel_policy == 'half':
        mask[kernel[:(len(kernel) + 1) // 2]] = True
    return spectral_projector(v, mask)

def region_modes(chain, p_n, sites, source=''):
    """
    Occupations of the sites `sites` (all bands of each) in the state
    with one-particle projection p_n.
    """

    p_n = np.asarray(p_n)
    if p_n.shape != (chain.dimension, chain.dimension):
        raise ValidationError('halfchain_modes', 'shape', p_n.shape, chain.dimension)
    index = np.array([site * chain.bands + band for site in sites for band in range(chain.bands)], dtype=int)
    values = eigvalsh(p_n[np.ix_(index, index)], 'halfchain_modes')
    low, high = float(values[0]), float(values[-1])
    if low < -settings.MODE_RANGE_TOL or high > 1 + settings.MODE_RANGE_TOL:
        raise NumericalError('halfchain_modes', 'range', low, high)
    values = np.clip(values, 0.0, 1.0)
    values[values < settings.MODE_CLIP_TOL] = 0.0
    values[values > 1 - settings.MODE_CLIP_TOL] = 1.0
    return ModeSpectrum(values, source)

def halfchain_modes(chain, p_n):
    """
    >>> chain = open_chain_hamiltonian(model_zoo('XX'), 2, cut=1)
    >>> halfchain_modes(chain, finite_ground_projection(chain)).values
    array([0.5])
    >>> chain = open_chain_hamiltonian(model_zoo('SSH'), 6)
    >>> halfchain_modes(chain, np.eye(12)).values
    array([1., 1., 1., 1., 1., 1.])
    >>> halfchain_modes(chain, np.zeros((12, 12))).values
    array([0., 0., 0., 0., 0., 0.])
    """

    return region_modes(chain, p_n, chain.region,
        source='%s n=%d %s' % (chain.model.name, chain.sites, chain.partition))

def chain_modes(model, n, partition='half', kernel_policy='empty'):
    " ground state modes of subsystem A of the open chain of n cells, and its kernel dimension "

    chain = open_chain_hamiltonian(model, n, partition=partition)
    p_n = finite_ground_projection(chain, kernel_policy)
    return halfchain_modes(chain, p_n), kernel_dimension(chain)

def cut_spec(value):
    if value in PARTITIONS:
        return value
    return integer(value)

class Entropy(Command):
    """
    Entanglement entropy of subsystem A over a schedule of chain lengths.

    Writes rows (n, entropy_bits) and a plot file of (ln n, S).
    """

    name = 'entropy'
    output = 'entropy.csv'

    options = {
        'model': (None, text, "model file or zoo:NAME[,key=value]"),
        'sizes': ('16:512:x2', schedule, "chain lengths n"),
        'cut': ('half', choice(*PARTITIONS), "subsystem A: left half or even sites"),
        'kernel-policy': ('empty', choice(*KERNEL_POLICIES), "kernel assignment"),
    }

    def validate(self, config, evaluation):
        if config.sizes[0] < 2:
            evaluation.error('General', 'field', 'sizes', config.sizes[0])

    def apply(self, config, evaluation):
        model = config.load_model()

        def entropy(n):
            modes, kernel = chain_modes(model, n, config.cut, config.kernel_policy)
            if kernel:
                evaluation.message(self.get_name(), 'kernel', n, kernel)
            return entanglement_entropy(modes)

        values = parallel_map(entropy, config.sizes, config.jobs)
        rows = [(n, float(value)) for n, value in zip(config.sizes, values)]
        plot = [(float(np.log(n)), float(value)) for n, value in zip(config.sizes, values)]
        summary = '%s: S(n=%d) = %.6g bits' % (model.name, config.sizes[-1], values[-1])
        if len(values) >= 3 and np.ptp(values) > 0:
            fit = linregress(np.log(config.sizes), values)
            summary += ', slope %.4g bits per ln n (R^2 %.4f)' % (fit.slope, fit.rvalue ** 2)
        return Result(summary, [
            CsvArtifact(config.output, ['n', 'entropy_bits'], rows),
            PlotArtifact(self.derived_filename(config, '.plot.dat'), ['ln_n', 'S'], plot),
        ])

    messages = {
        'kernel': "Chain of `1` sites has a `2`-dimensional kernel.",
    }

class Modes(Command):
    """
    Mode spectrum of a subsystem of one open chain.
    """

    name = 'modes'
    output = 'modes.csv'

    options = {
        'model': (None, text, "model file or zoo:NAME[,key=value]"),
        'n': ('64', positive_integer, "number of cells"),
        'cut': ('half', cut_spec, "cut position, 'half' or 'sublattice'"),
        'kernel-policy': ('empty', choice(*KERNEL_POLICIES), "kernel assignment"),
    }

    def apply(self, config, evaluation):
        model = config.load_model()
        if config.cut in PARTITIONS:
            chain = open_chain_hamiltonian(model, config.n, partition=config.cut)
        else:
            chain = open_chain_hamiltonian(model, config.n, cut=config.cut)
        modes = halfchain_modes(chain, finite_ground_projection(chain, config.kernel_policy))
        rows = [(index, float(value)) for index, value in enumerate(modes)]
        summary = '%s: %d modes, entropy %.6g bits, kernel dimension %d' % (
            model.name, len(modes), entanglement_entropy(modes), kernel_dimension(chain))
        return Result(summary, [CsvArtifact(config.output, ['index', 'lambda'], rows)])

__test__ = {
    'xx_modes': """
    Half-filled XX chains give mode spectra symmetric under
    lambda -> 1 - lambda, and entropies growing like ln n.

    >>> xx = model_zoo('XX')
    >>> for n in (8, 32, 64):
    ...     modes, kernel = chain_modes(xx, n)
    ...     assert kernel == 0
    ...     assert np.max(np.abs(modes.values - np.sort(1 - modes.values))) <= 1e-9
    >>> sizes = [16, 32, 64, 128, 256, 512]
    >>> entropies = [entanglement_entropy(chain_modes(xx, n)[0]) for n in sizes]
    >>> fit = linregress(np.log(sizes), entropies)
    >>> bool(fit.slope > 0), bool(fit.rvalue ** 2 >= 0.98)
    (True, True)
    """,

    'bulk_block': """
    A block of 8 sites in the middle of a long chain sees the
    infinite-volume state: its modes match the N = 8 section.

    >>> from fermbezzle.builtin.hopping import build_symbol
    >>> from fermbezzle.builtin.spectral import ground_state_symbol
    >>> from fermbezzle.builtin.toeplitz import correlation_spectrum, finite_section
    >>> chain = open_chain_hamiltonian(model_zoo('XX'), 256)
    >>> bulk = region_modes(chain, finite_ground_projection(chain), range(124, 132))
    >>> section = correlation_spectrum(finite_section(ground_state_symbol(build_symbol(model_zoo('XX'))), 8))
    >>> float(np.max(np.abs(bulk.values - section.values))) <= 0.03
    True

    The first m sites of a chain of 4m sites touch the open end, which
    keeps their modes about 0.13 away from the N = m section for every m.

    >>> xx = model_zoo('XX')
    >>> psym = ground_state_symbol(build_symbol(xx))
    >>> deviations = []
    >>> for m in (8, 16, 32):
    ...     chain = open_chain_hamiltonian(xx, 4 * m, cut=m)
    ...     edge = halfchain_modes(chain, finite_ground_projection(chain))
    ...     reference = correlation_spectrum(finite_section(psym, m)).values
    ...     deviations.append(float(np.max(np.abs(edge.values - reference))))
    >>> [value <= 0.15 for value in deviations]
    [True, True, True]
    """,

    'sublattice': """
    The even sites of the XX chain carry a flat spectrum.

    >>> modes, kernel = chain_modes(model_zoo('XX'), 32, partition='sublattice')
    >>> float(np.max(np.abs(modes.values - 0.5))) <= 1e-9
    True
    """,

    'gapped': """
    >>> modes, kernel = chain_modes(model_zoo('gapped_shifted_XX', mu=3), 16)
    >>> modes.values
    array([1., 1., 1., 1., 1., 1., 1., 1.])
    """,
}
