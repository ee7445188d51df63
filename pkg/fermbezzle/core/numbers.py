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

from math import log, pi

import numpy as np
from scipy.special import entr

TWO_PI = 2 * pi
LN2 = log(2)

def is_power_of_two(n):
    """
    >>> [is_power_of_two(n) for n in (1, 4, 6, 4096)]
    [True, True, False, True]
    """

    n = int(n)
    return n > 0 and (n & (n - 1)) == 0

def frobenius(a):
    " Frobenius norm over the two trailing axes "

    a = np.asarray(a)
    return np.sqrt(np.sum(np.abs(a) ** 2, axis=(-2, -1)))

def wrap_angle(k):
    """
    Maps angles into [0, 2pi).

    >>> round(float(wrap_angle(-np.pi / 2) / np.pi), 12)
    1.5
    """

    k = np.mod(k, TWO_PI)
    return np.where(k >= TWO_PI, 0.0, k)

def binary_entropy(p):
    """
    H_2(p) in bits, elementwise, with 0 log 0 = 0.

    >>> round(float(binary_entropy(0.5)), 12)
    1.0
    >>> [round(float(x), 4) for x in binary_entropy([0.9, 0.8, 0.0])]
    [0.469, 0.7219, 0.0]
    """

    p = np.clip(np.asarray(p, dtype=float), 0.0, 1.0)
    return (entr(p) + entr(1.0 - p)) / LN2
