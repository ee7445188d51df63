# -*- coding: utf8 -*-

"""
Essential spectrum and factor type

The essential spectrum of q*pq is assembled from the points 0 and 1 of
the continuous part of the symbol and, for every jump P -> Q, from the
eigenvalue curves of the interpolations mu P + (1 - mu) Q. An interval
in it makes the half-chain factor of type III_1.
"""

import numpy as np

from fermbezzle import settings
from fermbezzle.builtin.base import Command, JsonArtifact, Result, choice, positive_integer, schedule, text
from fermbezzle.builtin.hopping import build_symbol, model_zoo
from fermbezzle.builtin.linalg import check_projector, eigvalsh, range_basis
from fermbezzle.builtin.spectral import KERNEL_POLICIES, ProjectorSymbol, ground_state_symbol, regularize_isolated
from fermbezzle.builtin.toeplitz import (correlation_spectrum, filling_gap, finite_section,
    hs_divergence_verdict, hs_offdiagonal_partial_sums, trace_class_evidence)
from fermbezzle.core.evaluation import ValidationError
from fermbezzle.core.numbers import TWO_PI

messages = {
    'two_projection_analysis': {
        'shape': "Projectors of shapes `1` and `2` act on different spaces.",
    },
    'interpolation_eigencurves': {
        'chi': "Cosine `1` outside (0, 1).",
    },
}

class TwoProjectionData(object):
    def __init__(self, commuting_difference, cosines):
        self.commuting_difference = commuting_difference
        self.cosines = list(cosines)

    def __repr__(self):
        return '<TwoProjectionData commuting_difference=%s, cosines=%s>' % (
            self.commuting_difference, ['%.6g' % chi for chi in self.cosines])

    def to_json(self):
        return {'commuting_difference': self.commuting_difference, 'cosines': self.cosines}

def compressed_eigenvalues(P, Q):
    " eigenvalues of Q compressed to the range of P "

    basis = range_basis(P)
    if basis.shape[1] == 0:
        return np.zeros(0)
    return eigvalsh(np.conj(basis.T) @ Q @ basis, 'two_projection_analysis')

def two_projection_analysis(P, Q, tol=settings.TWO_PROJECTION_TOL):
    """
    Splits a pair of projectors into the part where they commute and
    the generic part, described by the cosines chi of its angles.

    >>> two_projection_analysis(np.eye(2), np.eye(2))
    <TwoProjectionData commuting_difference=False, cosines=[]>
    >>> two_projection_analysis(np.diag([1.0, 0.0]), np.diag([0.0, 1.0]))
    <TwoProjectionData commuting_difference=True, cosines=[]>
    >>> u = np.array([1.0, 1.0]) / np.sqrt(2)
    >>> two_projection_analysis(np.diag([1.0, 0.0]), np.outer(u, u))
    <TwoProjectionData commuting_difference=False, cosines=['0.707107']>

    The two limits of the SSH projector are orthogonal:
    >>> left, right = np.array([1j, 1]) / np.sqrt(2), np.array([-1j, 1]) / np.sqrt(2)
    >>> two_projection_analysis(np.outer(left, left.conj()), np.outer(right, right.conj()))
    <TwoProjectionData commuting_difference=True, cosines=[]>
    """

    P = check_projector(P, 'P')
    Q = check_projector(Q, 'Q')
    if P.shape != Q.shape:
        raise ValidationError('two_projection_analysis', 'shape', P.shape, Q.shape)
    on_p = compressed_eigenvalues(P, Q)
    on_q = compressed_eigenvalues(Q, P)
    commuting_difference = bool(np.any(on_p <= tol) or np.any(on_q <= tol))
    generic = on_p[(on_p > tol) & (on_p < 1 - tol)]
    cosines = sorted(float(chi) for chi in np.sqrt(generic))
    return TwoProjectionData(commuting_difference, cosines)

def interpolation_eigenvalues(mu, chi):
    """
    The two eigenvalues 1/2 (1 +- sqrt(4 (chi^2 - 1)(mu - mu^2) + 1)) of
    mu p + (1 - mu) q on a generic 2 x 2 block with cosine chi.

    >>> plus, minus = interpolation_eigenvalues(0.5, 0.5)
    >>> float(plus), float(minus)
    (0.75, 0.25)
    """

    mu = np.asarray(mu, dtype=float)
    chi = np.asarray(chi, dtype=float)
    # same radicand as 4 (chi^2 - 1)(mu - mu^2) + 1, exact at mu = 0 and 1/2
    root = np.sqrt((1 - 2 * mu) ** 2 + 4 * chi ** 2 * (mu - mu ** 2))
    return 0.5 * (1 + root), 0.5 * (1 - root)

def interpolation_eigencurves(chi):
    """
    Ranges of the two eigenvalue curves over mu in [0, 1].

    >>> interpolation_eigencurves(0.5)
    [(0.0, 0.25), (0.75, 1.0)]
    >>> interpolation_eigencurves(1.0)
    Traceback (most recent call last):
    ...
    fermbezzle.core.evaluation.ValidationError: interpolation_eigencurves::chi: Cosine 1 outside (0, 1).
    """

    if not 0 < chi < 1:
        raise ValidationError('interpolation_eigencurves', 'chi', chi)
    return [(0.0, 0.5 * (1 - chi)), (0.5 * (1 + chi), 1.0)]

class EssentialSpectrumSet(object):
    """
    Disjoint closed intervals plus isolated points of {0, 1}.

    >>> EssentialSpectrumSet([(0.5, 1.0), (0.0, 0.25), (0.25, 0.5)], [1.0])
    <EssentialSpectrumSet [0, 1]>
    >>> EssentialSpectrumSet([], [1.0, 0.0])
    <EssentialSpectrumSet {0, 1}>
    >>> EssentialSpectrumSet([(0.0, 0.25), (0.75, 1.0)], []).is_symmetric()
    True
    """

    def __init__(self, intervals, points, slack=settings.MERGE_SLACK):
        merged = []
        for a, b in sorted((float(a), float(b)) for a, b in intervals):
            if merged and a <= merged[-1][1] + slack:
                merged[-1] = (merged[-1][0], max(merged[-1][1], b))
            else:
                merged.append((a, b))
        self.intervals = merged
        self.points = sorted(set(float(x) for x in points
            if not any(a - slack <= x <= b + slack for a, b in merged)))

    def has_interval(self):
        return any(a < b for a, b in self.intervals)

    def is_symmetric(self, slack=settings.MERGE_SLACK):
        mirrored = EssentialSpectrumSet([(1 - b, 1 - a) for a, b in self.intervals],
            [1 - x for x in self.points])
        if len(mirrored.intervals) != len(self.intervals) or len(mirrored.points) != len(self.points):
            return False
        return all(abs(a - c) <= slack and abs(b - d) <= slack
                for (a, b), (c, d) in zip(self.intervals, mirrored.intervals)) and \
            all(abs(x - y) <= slack for x, y in zip(self.points, mirrored.points))

    def __str__(self):
        parts = ['[%g, %g]' % interval for interval in self.intervals]
        if self.points:
            parts.append('{%s}' % ', '.join('%g' % x for x in self.points))
        return ' u '.join(parts) or '{}'

    def __repr__(self):
        return '<EssentialSpectrumSet %s>' % self

    def to_json(self):
        return {'intervals': [list(interval) for interval in self.intervals], 'points': self.points}

def continuous_points(psym, grid_size=settings.GRID_SIZE):
    " 0 and 1 as eigenvalues of p(k) on a grid "

    nodes = TWO_PI * np.arange(grid_size) / grid_size
    ranks = np.rint(np.trace(regularize_isolated(psym(nodes)), axis1=-2, axis2=-1).real)
    points = []
    if np.any(ranks < psym.bands):
        points.append(0.0)
    if np.any(ranks > 0):
        points.append(1.0)
    return points

def essential_spectrum(psym, grid_size=settings.GRID_SIZE, tol=settings.TWO_PROJECTION_TOL):
    """
    >>> essential_spectrum(ground_state_symbol(build_symbol(model_zoo('XX'))))
    <EssentialSpectrumSet [0, 1]>
    >>> essential_spectrum(ground_state_symbol(build_symbol(model_zoo('SSH'))))
    <EssentialSpectrumSet [0, 1]>
    >>> essential_spectrum(ProjectorSymbol.constant(np.diag([1.0, 0.0])))
    <EssentialSpectrumSet {0, 1}>
    >>> essential_spectrum(ground_state_symbol(build_symbol(model_zoo('gapped_shifted_XX'))))
    <EssentialSpectrumSet {1}>
    """

    intervals = []
    for jump in psym.discontinuities:
        intervals.extend(jump_contribution(two_projection_analysis(jump.left_limit, jump.right_limit, tol)))
    return EssentialSpectrumSet(intervals, continuous_points(psym, grid_size))

def jump_contribution(analysis):
    intervals = []
    if analysis.commuting_difference:
        intervals.append((0.0, 1.0))
    for chi in analysis.cosines:
        intervals.extend(interpolation_eigencurves(chi))
    return intervals

class FactorTypeVerdict(object):
    def __init__(self, verdict, justification):
        self.verdict = verdict
        self.justification = justification

    def __repr__(self):
        return '<FactorTypeVerdict %s>' % self.verdict

def classify_factor_type(ess, hs_verdict, section_decay_evidence):
    """
    TypeIII1 when the essential spectrum contains an interval;
    TypeI_candidate when it lies in {0, 1}, the Hilbert-Schmidt sums
    converge and the section spectra look trace class; Indeterminate
    otherwise, naming what failed.

    >>> classify_factor_type(EssentialSpectrumSet([(0.0, 1.0)], []), 'log_divergent', None)
    <FactorTypeVerdict TypeIII1>
    >>> verdict = classify_factor_type(EssentialSpectrumSet([], [0.0, 1.0]), 'log_divergent', None)
    >>> verdict
    <FactorTypeVerdict Indeterminate>
    >>> verdict.justification[-2:]
    ['Hilbert-Schmidt sums are log_divergent, not convergent', 'no trace class evidence']
    """

    hs = getattr(hs_verdict, 'verdict', hs_verdict)
    justification = []
    intervals = [(a, b) for a, b in ess.intervals if a < b]
    if intervals:
        justification.append('essential spectrum contains %s' %
            ', '.join('[%g, %g]' % interval for interval in intervals))
        return FactorTypeVerdict('TypeIII1', justification)
    justification.append('essential spectrum %s has no interval' % ess)
    failed = []
    if hs != 'convergent':
        failed.append('Hilbert-Schmidt sums are %s, not convergent' % hs)
    if section_decay_evidence is None:
        failed.append('no trace class evidence')
    elif not section_decay_evidence.bounded:
        failed.append('sums of min(lambda, 1 - lambda) drift by %.3g across sizes %s' % (
            section_decay_evidence.drift, section_decay_evidence.sizes))
    if failed:
        return FactorTypeVerdict('Indeterminate', justification + failed)
    justification.append('Hilbert-Schmidt sums converge')
    justification.append('sums of min(lambda, 1 - lambda) bounded across sizes %s' %
        (section_decay_evidence.sizes,))
    return FactorTypeVerdict('TypeI_candidate', justification)

class ClassificationReport(object):
    def __init__(self, psym, ess, hs, evidence, verdict, filling):
        self.psym = psym
        self.ess = ess
        self.hs = hs
        self.evidence = evidence
        self.verdict = verdict
        self.filling = filling

    def to_json(self):
        return {
            'verdict': self.verdict.verdict,
            'justification': self.verdict.justification,
            'essential_spectrum': self.ess.to_json(),
            'discontinuities': [dict(jump.to_json(),
                **two_projection_analysis(jump.left_limit, jump.right_limit).to_json())
                for jump in self.psym.discontinuities],
            'hs_verdict': self.hs.to_json(),
            'evidence': self.evidence.to_json() if self.evidence is not None else None,
            'filling': self.filling,
        }

def classify(psym, hs_offsets=settings.HS_OFFSETS, sizes=settings.TRACE_CLASS_SIZES,
        filling_size=512, grid_size=settings.GRID_SIZE, quadrature=settings.QUADRATURE_GRID, jobs=1):
    """
    Runs the whole classification of a projector symbol: essential
    spectrum, Hilbert-Schmidt verdict, trace class evidence (only when
    there is no interval) and the filling gap of each interval at
    `filling_size`.
    """

    ess = essential_spectrum(psym, grid_size)
    hs = hs_divergence_verdict(hs_offdiagonal_partial_sums(psym, hs_offsets, quadrature))
    evidence = None
    if not ess.has_interval():
        evidence = trace_class_evidence(psym, sizes, grid_size=quadrature, jobs=jobs)
    filling = []
    if ess.has_interval() and filling_size:
        values = correlation_spectrum(finite_section(psym, filling_size, quadrature))
        filling = [{'interval': list(interval), 'N': filling_size,
            'largest_gap': filling_gap(values, interval)} for interval in ess.intervals]
    verdict = classify_factor_type(ess, hs, evidence)
    return ClassificationReport(psym, ess, hs, evidence, verdict, filling)

class Essspec(Command):
    """
    Essential spectrum of the half-chain correlation operator.
    """

    name = 'essspec'
    output = 'essspec.json'

    options = {
        'model': (None, text, "model file or zoo:NAME[,key=value]"),
        'kernel-policy': ('empty', choice(*KERNEL_POLICIES), "kernel assignment"),
        'grid': (str(settings.GRID_SIZE), positive_integer, "discontinuity scan grid"),
    }

    def apply(self, config, evaluation):
        model = config.load_model()
        psym = ground_state_symbol(build_symbol(model), config.kernel_policy, grid_size=config.grid)
        ess = essential_spectrum(psym, config.grid)
        data = {
            'model': model.name,
            'essential_spectrum': ess.to_json(),
            'discontinuities': [dict(jump.to_json(),
                **two_projection_analysis(jump.left_limit, jump.right_limit).to_json())
                for jump in psym.discontinuities],
        }
        return Result('%s: essential spectrum %s' % (model.name, ess), [JsonArtifact(config.output, data)])

class Classify(Command):
    """
    Factor type of the half-chain algebra.

    The verdict is TypeIII1, TypeI_candidate or Indeterminate, with the
    evidence it rests on.
    """

    name = 'classify'
    output = 'classify.json'

    options = {
        'model': (None, text, "model file or zoo:NAME[,key=value]"),
        'kernel-policy': ('empty', choice(*KERNEL_POLICIES), "kernel assignment"),
        'grid': (str(settings.GRID_SIZE), positive_integer, "discontinuity scan grid"),
        'quadrature': (str(settings.QUADRATURE_GRID), positive_integer, "Fourier quadrature grid"),
        'hs-offsets': (str(settings.HS_OFFSETS), positive_integer, "offsets of the Hilbert-Schmidt sums"),
        'sizes': (','.join(str(N) for N in settings.TRACE_CLASS_SIZES), schedule,
            "section sizes of the trace class evidence"),
        'filling-size': ('512', positive_integer, "section size of the filling diagnostic"),
    }

    def validate(self, config, evaluation):
        if config.hs_offsets < 128:
            evaluation.error('General', 'field', 'hs-offsets', config.hs_offsets)
        if max(config.sizes + [config.filling_size]) > settings.MAX_SECTION_BLOCKS:
            evaluation.error('General', 'field', 'sizes', max(config.sizes + [config.filling_size]))

    def apply(self, config, evaluation):
        model = config.load_model()
        psym = ground_state_symbol(build_symbol(model), config.kernel_policy, grid_size=config.grid)
        report = classify(psym, config.hs_offsets, config.sizes, config.filling_size,
            config.grid, config.quadrature, config.jobs)
        data = report.to_json()
        data['model'] = model.name
        summary = '%s: %s (essential spectrum %s, Hilbert-Schmidt %s)' % (
            model.name, report.verdict.verdict, report.ess, report.hs.verdict)
        return Result(summary, [JsonArtifact(config.output, data)])

__test__ = {
    'interpolation_identities': """
    lambda+ + lambda- = 1 and lambda+ lambda- = (1 - chi^2)(mu - mu^2).

    >>> from fermbezzle.builtin.randomnumbers import RandomEnv
    >>> with RandomEnv(1) as rand:
    ...     mu = rand.randreal(size=1000)
    ...     chi = rand.randreal(size=1000)
    >>> plus, minus = interpolation_eigenvalues(mu, chi)
    >>> float(np.max(np.abs(plus + minus - 1))) <= 1e-12
    True
    >>> float(np.max(np.abs(plus * minus - (1 - chi ** 2) * (mu - mu ** 2)))) <= 1e-12
    True
    >>> plus, minus = interpolation_eigenvalues(0.5, chi)
    >>> bool(np.all(plus == 0.5 * (1 + chi)) and np.all(minus == 0.5 * (1 - chi)))
    True
    >>> plus, minus = interpolation_eigenvalues(0.0, chi)
    >>> bool(np.all(plus == 1) and np.all(minus == 0))
    True

    As chi -> 0 the curves cover [0, 1]:
    >>> EssentialSpectrumSet(interpolation_eigencurves(1e-15), [])
    <EssentialSpectrumSet [0, 1]>
    """,

    'symmetry': """
    >>> for name in ('XX', 'SSH'):
    ...     assert essential_spectrum(ground_state_symbol(build_symbol(model_zoo(name)))).is_symmetric()
    """,

    'classification': """
    >>> xx = classify(ground_state_symbol(build_symbol(model_zoo('XX'))))
    >>> xx.verdict.verdict, xx.hs.verdict
    ('TypeIII1', 'log_divergent')
    >>> classify(ground_state_symbol(build_symbol(model_zoo('SSH')))).verdict.verdict
    'TypeIII1'

    Translating the symbol does not change the verdict.
    >>> classify(ground_state_symbol(build_symbol(model_zoo('twisted_XX', phi=0.7))),
    ...     filling_size=0).verdict.verdict
    'TypeIII1'

    >>> gapped = classify(ground_state_symbol(build_symbol(model_zoo('gapped_shifted_XX', mu=3))))
    >>> gapped.verdict.verdict, gapped.hs.verdict, gapped.evidence.bounded
    ('TypeI_candidate', 'convergent', True)
    >>> gapless = classify(ground_state_symbol(build_symbol(model_zoo('gapless_diag'))))
    >>> gapless.ess, gapless.verdict.verdict
    (<EssentialSpectrumSet {0, 1}>, 'TypeI_candidate')
    """,

    'hs_offsets': """
    The divergence verdict needs the checkpoints 16, 32, 64 and 128, so
    classify refuses fewer offsets before scanning the symbol.

    >>> from fermbezzle.core.evaluation import AbortInterrupt, Evaluation
    >>> evaluation = Evaluation()
    >>> try:
    ...     Classify().resolve(['--model', 'zoo:XX', '--hs-offsets', '64'], evaluation)
    ... except AbortInterrupt:
    ...     print(evaluation.get_messages()[-1])
    General::field: Invalid value 64 for option hs-offsets.
    >>> Classify().resolve(['--model', 'zoo:XX', '--hs-offsets', '128'], evaluation).hs_offsets
    128
    """,
}
