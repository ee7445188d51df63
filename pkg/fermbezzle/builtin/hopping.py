# -*- coding: utf8 -*-

"""
Hopping models

Translation-invariant, particle-number conserving single-particle
Hamiltonians H = sum h(x-y) a^+(x) a(y) on a chain with b bands per
cell, stored by their finitely many hopping matrices h(x), and their
momentum-space symbols h(k) = sum_x exp(-ikx) h(x).
"""

import json
from math import pi

import numpy as np
import sympy

from fermbezzle.core.convert import from_complex, from_pairs, to_pairs
from fermbezzle.core.evaluation import ValidationError
from fermbezzle.core.numbers import TWO_PI, is_power_of_two

HERMITICITY_TOL = 1e-12

messages = {
    'fourier_coefficient': {
        'grid': "Grid size `1` must be a power of two of at least `2` for offset `3`.",
    },
    'model_zoo': {
        'unknown': "Unknown model `1`; known models are `2`.",
        'param': "Invalid parameter `1` = `2` for model `3`.",
        'custom': "Model custom needs an explicit coefficient map.",
    },
}

class HoppingModel(object):
    """
    Hopping coefficients h(x) of a translation-invariant chain.

    >>> xx = HoppingModel(1, {1: [[1]], -1: [[1]]}, name='XX')
    >>> xx.bands, xx.radius, xx.support
    (1, 1, [-1, 1])
    >>> xx.coefficient(1)
    array([[1.+0.j]])
    >>> xx.coefficient(5)
    array([[0.+0.j]])

    Hermiticity h(-x) = h(x)^+ is enforced:
    >>> HoppingModel(1, {1: [[1]]})
    Traceback (most recent call last):
    ...
    fermbezzle.core.evaluation.ValidationError: HoppingModel::nonherm: Hopping matrix at offset 1 is not the conjugate transpose of the one at offset -1.
    """

    messages = {
        'bands': "Number of bands `1` is not a positive integer.",
        'offset': "Offset `1` is not an integer.",
        'shape': "Coefficient at offset `1` has shape `2`, expected `3`.",
        'nonherm': "Hopping matrix at offset `1` is not the conjugate transpose of the one at offset `2`.",
        'radius': "Offset `1` exceeds the declared radius `2`.",
        'format': "Malformed model description: `1`.",
    }

    def __init__(self, bands, coefficients, name='', radius=None):
        if not isinstance(bands, (int, np.integer)) or isinstance(bands, bool) or bands < 1:
            raise ValidationError('HoppingModel', 'bands', bands)
        self.bands = int(bands)
        self.name = name
        self._coefficients = {}
        for offset, matrix in coefficients.items():
            try:
                x = int(offset)
            except (TypeError, ValueError):
                raise ValidationError('HoppingModel', 'offset', offset)
            if isinstance(matrix, list) and matrix and isinstance(matrix[0], list) and \
                    matrix[0] and isinstance(matrix[0][0], list):
                matrix = from_pairs(matrix)
                if matrix is None:
                    raise ValidationError('HoppingModel', 'format', 'offset %d' % x)
            matrix = np.array(matrix, dtype=complex)
            if matrix.shape != (self.bands, self.bands):
                raise ValidationError('HoppingModel', 'shape', x, matrix.shape, (self.bands, self.bands))
            if not np.any(matrix):
                continue
            matrix.setflags(write=False)
            self._coefficients[x] = matrix
        support = sorted(self._coefficients)
        actual_radius = max([abs(x) for x in support] or [0])
        if radius is None:
            radius = actual_radius
        elif actual_radius > radius:
            raise ValidationError('HoppingModel', 'radius', actual_radius, radius)
        self.radius = int(radius)
        self.support = support
        for x in support:
            conjugate = self.coefficient(-x).conj().T
            if np.max(np.abs(self._coefficients[x] - conjugate)) > HERMITICITY_TOL:
                raise ValidationError('HoppingModel', 'nonherm', x, -x)

    def coefficient(self, x):
        matrix = self._coefficients.get(int(x))
        if matrix is None:
            return np.zeros((self.bands, self.bands), dtype=complex)
        return matrix

    @property
    def coefficients(self):
        return dict(self._coefficients)

    def __add__(self, other):
        if other.bands != self.bands:
            raise ValidationError('HoppingModel', 'shape', 'sum', (other.bands, other.bands),
                (self.bands, self.bands))
        offsets = set(self.support) | set(other.support)
        return HoppingModel(self.bands,
            dict((x, self.coefficient(x) + other.coefficient(x)) for x in offsets),
            name='%s+%s' % (self.name, other.name))

    def __repr__(self):
        return '<HoppingModel %s: %d bands, radius %d>' % (self.name or '?', self.bands, self.radius)

    def to_json(self):
        return {
            'bands': self.bands,
            'coefficients': dict((str(x), to_pairs(self._coefficients[x])) for x in self.support),
            'name': self.name,
        }

    @staticmethod
    def from_json(data):
        """
        >>> model = HoppingModel.from_json({'bands': 1, 'name': 'XX',
        ...     'coefficients': {'-1': [[[1, 0]]], '1': [[[1, 0]]]}})
        >>> model.to_json() == {'bands': 1, 'name': 'XX',
        ...     'coefficients': {'-1': [[[1.0, 0.0]]], '1': [[[1.0, 0.0]]]}}
        True
        """

        if not isinstance(data, dict) or 'bands' not in data or \
                not isinstance(data.get('coefficients', {}), dict):
            raise ValidationError('HoppingModel', 'format', 'expected bands and coefficients')
        coefficients = {}
        for key, value in data.get('coefficients', {}).items():
            matrix = from_pairs(value)
            if matrix is None:
                raise ValidationError('HoppingModel', 'format', 'offset %s' % key)
            coefficients[key] = matrix
        return HoppingModel(data['bands'], coefficients, name=data.get('name', ''),
            radius=data.get('radius'))

    @staticmethod
    def load(filename):
        with open(filename) as f:
            return HoppingModel.from_json(json.load(f))

class BlockSymbol(object):
    """
    The trigonometric polynomial h(k) = sum_x exp(-ikx) h(x); callable
    on scalars (b x b result) and arrays (stack of b x b matrices).

    >>> xx = build_symbol(model_zoo('XX'))
    >>> xx(0.0).real, xx(np.pi).real
    (array([[2.]]), array([[-2.]]))
    >>> xx.to_sympy()
    Matrix([[2*cos(k)]])
    """

    def __init__(self, model):
        self.model = model
        self.bands = model.bands
        self.offsets = np.array(model.support, dtype=float)
        if model.support:
            self.stack = np.array([model.coefficient(x) for x in model.support])
        else:
            self.stack = np.zeros((0, self.bands, self.bands), dtype=complex)

    def __call__(self, k):
        k = np.asarray(k, dtype=float)
        phases = np.exp(-1j * np.multiply.outer(k, self.offsets))
        return np.tensordot(phases, self.stack, axes=([-1], [0]))

    def to_sympy(self):
        k = sympy.Symbol('k', real=True)
        result = sympy.zeros(self.bands, self.bands)
        for x, matrix in zip(self.model.support, self.stack):
            phase = sympy.exp(-sympy.I * k * int(x))
            for l in range(self.bands):
                for m in range(self.bands):
                    if matrix[l, m] != 0:
                        result[l, m] += from_complex(matrix[l, m]) * phase
        return result.applyfunc(lambda entry: sympy.expand(entry.rewrite(sympy.cos)))

def build_symbol(model):
    """
    >>> ssh = build_symbol(model_zoo('SSH'))
    >>> k = 0.7
    >>> bool(np.allclose(ssh(k), [[0, 1 + np.exp(1j * k)], [1 + np.exp(-1j * k), 0]]))
    True
    >>> float(np.abs(build_symbol(HoppingModel(2, {}))(1.3)).max())
    0.0
    """

    return BlockSymbol(model)

def check_grid(x, grid_size):
    minimum = 4 * (abs(int(x)) + 1)
    if not is_power_of_two(grid_size) or grid_size < minimum:
        raise ValidationError('fourier_coefficient', 'grid', grid_size, minimum, x)

def fourier_coefficients(f, max_offset, grid_size):
    """
    All coefficients (1/2pi) int exp(ikm) f(k) dk for |m| <= max_offset
    by the trapezoidal rule on `grid_size` nodes; element m of the
    result is at index m + max_offset. `f` maps an array of angles to a
    stack of matrices (or scalars).
    """

    check_grid(max_offset, grid_size)
    nodes = TWO_PI * np.arange(grid_size) / grid_size
    values = np.asarray(f(nodes), dtype=complex)
    # numpy's inverse transform carries exp(+2 pi i j m / G) / G
    transformed = np.fft.ifft(values, axis=0)
    m = np.arange(-max_offset, max_offset + 1)
    return transformed[m % grid_size]

def fourier_coefficient(f, x, grid_size):
    """
    >>> round(float(abs(fourier_coefficient(lambda k: np.exp(1j * k), -1, 16))), 12)
    1.0
    >>> round(float(abs(fourier_coefficient(lambda k: np.exp(1j * k), 0, 16))), 12)
    0.0
    >>> fourier_coefficient(np.cos, 3, 8)
    Traceback (most recent call last):
    ...
    fermbezzle.core.evaluation.ValidationError: fourier_coefficient::grid: Grid size 8 must be a power of two of at least 16 for offset 3.
    """

    coefficients = fourier_coefficients(f, abs(int(x)), grid_size)
    return coefficients[int(x) + abs(int(x))]

ZOO = ('XX', 'SSH', 'gapped_shifted_XX', 'gapless_diag', 'twisted_XX', 'custom')

def model_zoo(name, **params):
    """
    Named models: the XX chain, the SSH chain (hoppings v inside and w
    between cells, critical at |v| = |w|), the gapped control
    h(k) = mu + 2 cos k with |mu| > 2, the gapless but non-critical
    diag(1 + cos k, -(1 + cos k)), the XX chain with a phase twist
    (h(k) = 2 cos(k - phi)), and custom coefficient maps.

    >>> sorted(model_zoo('XX').coefficients)
    [-1, 1]
    >>> ssh = model_zoo('SSH')
    >>> ssh.coefficient(-1).real
    array([[0., 1.],
           [0., 0.]])
    >>> build_symbol(model_zoo('gapped_shifted_XX', mu=3))(np.pi).real
    array([[1.]])
    >>> model_zoo('gapped_shifted_XX', mu=2)
    Traceback (most recent call last):
    ...
    fermbezzle.core.evaluation.ValidationError: model_zoo::param: Invalid parameter mu = 2 for model gapped_shifted_XX.
    >>> model_zoo('Ising')
    Traceback (most recent call last):
    ...
    fermbezzle.core.evaluation.ValidationError: model_zoo::unknown: Unknown model Ising; known models are XX, SSH, gapped_shifted_XX, gapless_diag, twisted_XX, custom.
    """

    def param(key, default):
        value = params.get(key, default)
        try:
            return float(value)
        except (TypeError, ValueError):
            raise ValidationError('model_zoo', 'param', key, value, name)

    if name == 'XX':
        t = param('t', 1.0)
        return HoppingModel(1, {-1: [[t]], 1: [[t]]}, name='XX')
    elif name == 'SSH':
        v, w = param('v', 1.0), param('w', 1.0)
        return HoppingModel(2, {
            0: [[0, v], [v, 0]],
            -1: [[0, w], [0, 0]],
            1: [[0, 0], [w, 0]],
        }, name='SSH' if v == w == 1.0 else 'SSH(v=%g,w=%g)' % (v, w))
    elif name == 'gapped_shifted_XX':
        mu = param('mu', 3.0)
        if abs(mu) <= 2:
            raise ValidationError('model_zoo', 'param', 'mu', params.get('mu', mu), name)
        return HoppingModel(1, {0: [[mu]], -1: [[1]], 1: [[1]]}, name='gapped_shifted_XX(mu=%g)' % mu)
    elif name == 'gapless_diag':
        return HoppingModel(2, {
            0: np.diag([1.0, -1.0]),
            -1: np.diag([0.5, -0.5]),
            1: np.diag([0.5, -0.5]),
        }, name='gapless_diag')
    elif name == 'twisted_XX':
        phi = param('phi', pi / 5)
        phase = np.exp(1j * phi)
        return HoppingModel(1, {1: [[phase]], -1: [[np.conj(phase)]]}, name='twisted_XX(phi=%g)' % phi)
    elif name == 'custom':
        coefficients = params.get('coefficients')
        if not coefficients:
            raise ValidationError('model_zoo', 'custom')
        bands = params.get('bands')
        if bands is None:
            bands = np.asarray(next(iter(coefficients.values()))).shape[0]
        return HoppingModel(bands, coefficients, name=params.get('label', 'custom'),
            radius=params.get('radius'))
    raise ValidationError('model_zoo', 'unknown', name, ', '.join(ZOO))

def parse_model_reference(text):
    """
    'zoo:NAME,key=value,...' -> (NAME, params); None for file names.

    >>> parse_model_reference('zoo:gapped_shifted_XX,mu=3')
    ('gapped_shifted_XX', {'mu': '3'})
    >>> parse_model_reference('models/xx.json') is None
    True
    """

    if not text.startswith('zoo:'):
        return None
    parts = text[len('zoo:'):].split(',')
    params = {}
    for part in parts[1:]:
        key, _, value = part.partition('=')
        params[key.strip()] = value.strip()
    return parts[0].strip(), params

def load_model(text):
    reference = parse_model_reference(text)
    if reference is not None:
        name, params = reference
        return model_zoo(name, **params)
    try:
        return HoppingModel.load(text)
    except (IOError, OSError):
        raise ValidationError('General', 'nofile', text)
    except ValueError as exc:
        if isinstance(exc, ValidationError):
            raise
        raise ValidationError('General', 'json', text, str(exc))

__test__ = {
    'symbol_properties': """
    h(k) is Hermitian at every angle, Fourier coefficients give back
    the hopping matrices, and symbols add up with their models.

    >>> k = TWO_PI * np.arange(1024) / 1024
    >>> models = [model_zoo(name) for name in ('XX', 'SSH', 'gapless_diag', 'twisted_XX')]
    >>> for model in models:
    ...     values = build_symbol(model)(k)
    ...     assert np.max(np.abs(values - np.conj(np.swapaxes(values, -1, -2)))) <= 1e-12
    >>> for model in models:
    ...     symbol = build_symbol(model)
    ...     for x in range(-3, 4):
    ...         error = np.max(np.abs(fourier_coefficient(symbol, x, 64) - model.coefficient(x)))
    ...         assert error <= 1e-12, (model, x, error)
    >>> ssh, gapless = model_zoo('SSH', v=0.4, w=1.3), model_zoo('gapless_diag')
    >>> total = build_symbol(ssh + gapless)(k)
    >>> float(np.max(np.abs(total - build_symbol(ssh)(k) - build_symbol(gapless)(k)))) <= 1e-12
    True
    """,

    'projector_coefficients': """
    The XX ground state projector is the indicator of (-pi/2, pi/2),
    with coefficients 1/2 at x = 0, 1/pi at x = 1 and 0 at x = 2. Plain
    trapezoidal sums see the jumps to order 1 / grid_size; the jump
    corrected coefficients are exact.

    >>> from fermbezzle.builtin.spectral import ground_state_symbol
    >>> from fermbezzle.builtin.toeplitz import symbol_coefficients
    >>> p = ground_state_symbol(build_symbol(model_zoo('XX')))
    >>> [round(float(fourier_coefficient(p, x, 2 ** 16).real[0, 0]), 3) + 0.0 for x in (0, 1, 2)]
    [0.5, 0.318, 0.0]
    >>> phi = symbol_coefficients(p, 2)[:, 0, 0]
    >>> [abs(complex(z) - expected) < 1e-12 for z, expected in zip(phi[2:], [0.5, 1 / pi, 0.0])]
    [True, True, True]
    """,
}
