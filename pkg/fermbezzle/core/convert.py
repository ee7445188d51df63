# -*- coding: utf8 -*-

u"""
    fermbezzle: embezzlement and factor types of free-fermion chains
    Copyright (C) 2024 The fermbezzle developers

    This program is free software: you can redistribute it and/or modify
    it under the terms of the GNU General Public License as published by
    the Free Software Foundation, either version 3 of the License, or
    (at your option) any later version.

    This program is distributed in the hope that it will be useful,
    but WITHOUT ANY WARRANTY; without even the implied warranty of
    MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
    GNU General Public License for more details.

    You should have received a copy of the GNU General Public License
    along with this program.  If not, see <http://www.gnu.org/licenses/>.
"""

import numpy as np
import sympy

def to_pairs(matrix):
    """
    Complex matrix -> nested lists of [re, im] pairs.

    >>> to_pairs(np.array([[1, 2j]]))
    [[[1.0, 0.0], [0.0, 2.0]]]
    """

    matrix = np.asarray(matrix, dtype=complex)
    return [[[float(z.real), float(z.imag)] for z in row] for row in matrix]

def from_pairs(data):
    """
    Nested lists of [re, im] pairs (or plain reals) -> complex matrix.
    Returns None for malformed data.

    >>> from_pairs([[[0, 1], 2]])
    array([[0.+1.j, 2.+0.j]])
    >>> from_pairs([[[0, 1, 2]]]) is None
    True
    """

    if not isinstance(data, list) or not data:
        return None
    rows = []
    for row in data:
        if not isinstance(row, list):
            return None
        items = []
        for item in row:
            if isinstance(item, (list, tuple)):
                if len(item) != 2:
                    return None
                re, im = item
            else:
                re, im = item, 0
            try:
                items.append(complex(float(re), float(im)))
            except (TypeError, ValueError):
                return None
        rows.append(items)
    if len(set(len(row) for row in rows)) != 1:
        return None
    return np.array(rows, dtype=complex)

def from_complex(z):
    """
    >>> from_complex(1 + 0j), from_complex(0.5 - 2j)
    (1, 1/2 - 2*I)
    """

    return sympy.nsimplify(z.real) + sympy.I * sympy.nsimplify(z.imag)

def matrix_to_json(matrix, digits=12):
    " Rounded [re, im] pairs for reports "

    return [[[round(re, digits) + 0.0, round(im, digits) + 0.0] for re, im in row]
        for row in to_pairs(matrix)]
