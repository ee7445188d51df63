# -*- coding: utf8 -*-

"""
Quasi-free states

Wick correlators of quasi-free states and the many-body spectra of
products of uncorrelated modes diag(lambda_j, 1 - lambda_j).
"""

import heapq
import math

import numpy as np
from scipy.special import entr

from fermbezzle import settings
from fermbezzle.core.evaluation import ValidationError
from fermbezzle.core.numbers import LN2, binary_entropy

messages = {
    'wick_correlator': {
        'dim': "Vector `1` has dimension `2`, the state acts on dimension `3`.",
        'state': "State matrix must be square, got shape `1`.",
    },
    'product_spectrum_topk': {
        'k': "Number of entries `1` is not a positive integer.",
        'floor': "Mass floor `1` outside [0, 1).",
        'empty': "Mode spectrum is empty.",
    },
}

class ModeSpectrum(object):
    """
    Occupations lambda_j in [0, 1], sorted ascending.

    >>> ModeSpectrum([0.9, 0.1, 0.5], source='demo')
    <ModeSpectrum demo: 3 modes>
    >>> ModeSpectrum([0.9, 0.1, 0.5]).values
    array([0.1, 0.5, 0.9])
    >>> ModeSpectrum([1.5])
    Traceback (most recent call last):
    ...
    fermbezzle.core.evaluation.ValidationError: ModeSpectrum::range: Occupation 1.5 outside [0, 1].
    """

    messages = {
        'range': "Occupation `1` outside [0, 1].",
    }

    def __init__(self, values, source=''):
        values = np.sort(np.asarray(values, dtype=float).ravel())
        for value in values:
            if not 0.0 <= value <= 1.0:
                raise ValidationError('ModeSpectrum', 'range', value)
        self.values = values
        self.source = source

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __repr__(self):
        return '<ModeSpectrum %s: %d modes>' % (self.source or '?', len(self))

    def complement(self):
        return ModeSpectrum(1.0 - self.values, self.source)

class TruncatedSpectrum(object):
    """
    The largest entries of a product spectrum, descending, and the
    probability mass left out.
    """

    def __init__(self, entries, discarded_mass):
        self.entries = np.asarray(entries, dtype=float)
        self.discarded_mass = float(discarded_mass)

    def __len__(self):
        return len(self.entries)

    def __repr__(self):
        return '<TruncatedSpectrum: %d entries, discarded %.3g>' % (len(self), self.discarded_mass)

def wick_correlator(s, xi, eta):
    """
    omega_s(a(xi_1)...a(xi_m) a+(eta_n)...a+(eta_1)) = delta_mn det <xi_j|s|eta_k>.

    >>> s = np.diag([0.7, 0.2])
    >>> e = np.eye(2)
    >>> round(wick_correlator(s, [e[0], e[1]], [e[0], e[1]]).real, 12)
    0.14
    >>> wick_correlator(s, [e[0]], [e[0], e[1]])
    0j
    >>> wick_correlator(s, [np.ones(3)], [e[0]])
    Traceback (most recent call last):
    ...
    fermbezzle.core.evaluation.ValidationError: wick_correlator::dim: Vector 0 has dimension 3, the state acts on dimension 2.
    """

    s = np.asarray(s, dtype=complex)
    if s.ndim != 2 or s.shape[0] != s.shape[1]:
        raise ValidationError('wick_correlator', 'state', s.shape)
    dim = s.shape[0]
    xi = [np.asarray(v, dtype=complex) for v in xi]
    eta = [np.asarray(v, dtype=complex) for v in eta]
    for index, v in enumerate(xi + eta):
        if v.shape != (dim,):
            raise ValidationError('wick_correlator', 'dim', index, v.shape[0] if v.ndim else 1, dim)
    if len(xi) != len(eta):
        return 0j
    if not xi:
        return 1 + 0j
    gram = np.conj(np.array(xi)) @ s @ np.array(eta).T
    return complex(np.linalg.det(gram))

def outer_products(first, second):
    result = np.ones(1)
    for a, b in zip(first, second):
        result = np.outer(result, [a, b]).ravel()
    return np.sort(result)[::-1]

def product_spectrum_full(modes):
    """
    All 2^n products, descending.

    >>> product_spectrum_full(ModeSpectrum([0.9, 0.8]))
    array([0.72, 0.18, 0.08, 0.02])
    """

    values = np.asarray(getattr(modes, 'values', modes), dtype=float)
    return outer_products(values, 1.0 - values)

def collapse_modes(values, tol=settings.COLLAPSE_TOL):
    """
    Splits occupations into the common factor of nearly pure modes and
    the descending ratios lo/hi of the remaining ones, with their
    larger factors.
    """

    lo = np.minimum(values, 1.0 - values)
    hi = np.maximum(values, 1.0 - values)
    pure = lo < tol
    base = float(np.prod(hi[pure]))
    hi, lo = hi[~pure], lo[~pure]
    ratios = lo / hi
    order = np.argsort(-ratios, kind='stable')
    return base, hi[order], lo[order], ratios[order]

def truncate_by_mass(entries, mass_floor):
    if mass_floor <= 0:
        return entries
    cumulative = np.cumsum(entries)
    stop = np.searchsorted(cumulative, 1.0 - mass_floor)
    return entries[:stop + 1]

def product_spectrum_topk(modes, K=settings.TOPK, mass_floor=settings.MASS_FLOOR):
    """
    The K largest products prod_j mu_j, mu_j in {lambda_j, 1 - lambda_j},
    by best-first search over subsets of flipped modes; stops once the
    retained mass reaches 1 - mass_floor.

    >>> product_spectrum_topk(ModeSpectrum([0.9, 0.8]), 4).entries
    array([0.72, 0.18, 0.08, 0.02])
    >>> truncated = product_spectrum_topk(ModeSpectrum([1.0, 0.6]), 2)
    >>> truncated.entries, truncated.discarded_mass
    (array([0.6, 0.4]), 0.0)
    >>> product_spectrum_topk(ModeSpectrum([0.5] * 3), 8).entries
    array([0.125, 0.125, 0.125, 0.125, 0.125, 0.125, 0.125, 0.125])
    >>> product_spectrum_topk(ModeSpectrum([]), 2)
    Traceback (most recent call last):
    ...
    fermbezzle.core.evaluation.ValidationError: product_spectrum_topk::empty: Mode spectrum is empty.
    """

    if not isinstance(K, (int, np.integer)) or K < 1:
        raise ValidationError('product_spectrum_topk', 'k', K)
    if not 0 <= mass_floor < 1:
        raise ValidationError('product_spectrum_topk', 'floor', mass_floor)
    values = np.asarray(getattr(modes, 'values', modes), dtype=float)
    if values.size == 0:
        raise ValidationError('product_spectrum_topk', 'empty')

    base, hi, lo, ratios = collapse_modes(values)
    top = base * float(np.prod(hi))
    count = len(ratios)

    if count < 63 and (1 << count) <= K:
        entries = truncate_by_mass(base * outer_products(hi, lo), mass_floor)
        return TruncatedSpectrum(entries, max(0.0, 1.0 - math.fsum(entries)))

    # heap items: (-value, tiebreak, largest flipped index)
    entries = [top]
    mass = top
    heap = []
    counter = 0
    if count:
        heapq.heappush(heap, (-top * ratios[0], counter, 0))
    while heap and len(entries) < K and mass < 1.0 - mass_floor:
        value, _, last = heapq.heappop(heap)
        value = -value
        entries.append(value)
        mass += value
        if last + 1 < count:
            counter += 1
            heapq.heappush(heap, (-value * ratios[last + 1], counter, last + 1))
            counter += 1
            heapq.heappush(heap, (-value / ratios[last] * ratios[last + 1], counter, last + 1))
    entries = np.array(entries)
    return TruncatedSpectrum(entries, max(0.0, 1.0 - math.fsum(entries)))

def entanglement_entropy(modes):
    """
    Sum of binary entropies of the modes, in bits.

    >>> round(entanglement_entropy(ModeSpectrum([0.5])), 12)
    1.0
    >>> entanglement_entropy(ModeSpectrum([0, 1, 0]))
    0.0
    >>> round(entanglement_entropy(ModeSpectrum([0.9, 0.8])), 4)
    1.1909
    """

    values = np.asarray(getattr(modes, 'values', modes), dtype=float)
    return float(math.fsum(binary_entropy(values)))

def spectrum_entropy(probabilities):
    " -sum p log2 p of a probability vector "

    return float(math.fsum(entr(np.asarray(probabilities, dtype=float)))) / LN2

__test__ = {
    'wick': """
    Swapping two xi vectors flips the sign; unequal numbers of
    annihilators and creators give zero.

    >>> from fermbezzle.builtin.randomnumbers import RandomEnv
    >>> with RandomEnv(11) as rand:
    ...     for trial in range(20):
    ...         dim = rand.randint(2, 5)
    ...         m = rand.randint(2, dim)
    ...         s = rand.density_matrix(dim)
    ...         xi = list(rand.complex_vectors(m, dim))
    ...         eta = list(rand.complex_vectors(m, dim))
    ...         swapped = [xi[1], xi[0]] + xi[2:]
    ...         assert abs(wick_correlator(s, xi, eta) + wick_correlator(s, swapped, eta)) <= 1e-12
    ...         assert wick_correlator(s, xi, eta[:-1]) == 0
    ...         assert abs(wick_correlator(s, xi[:1], eta[:1]) - xi[0].conj() @ s @ eta[0]) <= 1e-12
    """,

    'product_spectrum': """
    The complete product spectrum is a probability vector matching brute
    force enumeration, and the best-first search returns its largest
    entries.

    >>> import itertools
    >>> from fermbezzle.builtin.randomnumbers import RandomEnv
    >>> with RandomEnv(3) as rand:
    ...     for n in (1, 4, 8, 12):
    ...         modes = ModeSpectrum(rand.randreal(size=n))
    ...         brute = sorted((np.prod([v if bit else 1 - v for v, bit in zip(modes.values, bits)])
    ...             for bits in itertools.product((0, 1), repeat=n)), reverse=True)
    ...         full = product_spectrum_topk(modes, 2 ** n, mass_floor=0.0)
    ...         assert abs(math.fsum(full.entries) - 1) <= 1e-12
    ...         assert np.allclose(full.entries, brute, rtol=1e-12, atol=1e-15)
    ...         top = product_spectrum_topk(modes, max(1, 2 ** n // 3), mass_floor=0.0)
    ...         assert np.allclose(top.entries, brute[:len(top.entries)], rtol=1e-12, atol=1e-15)
    ...         assert abs(math.fsum(top.entries) + top.discarded_mass - 1) <= 1e-12
    """,

    'entropy': """
    The mode sum agrees with the entropy of the full product spectrum
    and does not change under lambda -> 1 - lambda.

    >>> from fermbezzle.builtin.randomnumbers import RandomEnv
    >>> with RandomEnv(5) as rand:
    ...     for n in (1, 6, 12):
    ...         modes = ModeSpectrum(rand.randreal(size=n))
    ...         full = product_spectrum_full(modes)
    ...         assert abs(entanglement_entropy(modes) - spectrum_entropy(full)) <= 1e-9
    ...         assert abs(entanglement_entropy(modes) - entanglement_entropy(modes.complement())) <= 1e-12
    """,
}
