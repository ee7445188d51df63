# -*- coding: utf8 -*-

"""
Linear algebra

Hermitian eigensolvers and projector utilities shared by the symbol,
section and chain code. Eigensolver failures surface as numerical
errors naming the operation.
"""

import numpy as np
import scipy.linalg

from fermbezzle.core.evaluation import NumericalError, ValidationError
from fermbezzle.core.numbers import frobenius

messages = {
    'Projector': {
        'notproj': "Matrix `1` is not an orthogonal projector (deviation `2`).",
        'shape': "Projectors of shapes `1` and `2` cannot be compared.",
    },
}

def eigh(matrix, where='eigh'):
    """
    Hermitian eigendecomposition of a matrix or of a stack of matrices,
    eigenvalues ascending.

    >>> w, v = eigh(np.array([[0, 1], [1, 0]]))
    >>> w
    array([-1.,  1.])
    """

    try:
        return np.linalg.eigh(np.asarray(matrix))
    except np.linalg.LinAlgError as exc:
        raise NumericalError('General', 'linalg', where, str(exc))

def eigvalsh(matrix, where='eigvalsh'):
    try:
        return scipy.linalg.eigvalsh(np.asarray(matrix), check_finite=True)
    except (np.linalg.LinAlgError, ValueError) as exc:
        raise NumericalError('General', 'linalg', where, str(exc))

def hermitian_part(matrix):
    matrix = np.asarray(matrix)
    return 0.5 * (matrix + np.conj(np.swapaxes(matrix, -1, -2)))

def hermiticity_defect(matrix):
    matrix = np.asarray(matrix)
    return frobenius(matrix - np.conj(np.swapaxes(matrix, -1, -2)))

def projector_defect(matrix):
    """
    Largest of the idempotency and hermiticity defects.

    >>> float(projector_defect(np.diag([1.0, 0.0])))
    0.0
    >>> float(projector_defect(np.diag([0.5, 0.0])))
    0.25
    """

    matrix = np.asarray(matrix)
    idempotency = frobenius(matrix @ matrix - matrix)
    return np.maximum(idempotency, hermiticity_defect(matrix))

def check_projector(matrix, name='P', tol=1e-9):
    matrix = np.asarray(matrix, dtype=complex)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise ValidationError('Projector', 'shape', name, matrix.shape)
    defect = float(projector_defect(matrix))
    if defect > tol:
        raise ValidationError('Projector', 'notproj', name, defect)
    return matrix

def spectral_projector(vectors, mask):
    """
    Projector onto the columns of `vectors` selected by `mask`, for
    single matrices and stacks alike.

    >>> spectral_projector(np.eye(2), np.array([True, False])).real
    array([[1., 0.],
           [0., 0.]])
    """

    selected = vectors * mask[..., np.newaxis, :]
    return selected @ np.conj(np.swapaxes(vectors, -1, -2))

def range_basis(projector, tol=0.5):
    " Orthonormal basis (columns) of the range of a projector "

    w, v = eigh(hermitian_part(projector), 'range_basis')
    return v[:, w > tol]
