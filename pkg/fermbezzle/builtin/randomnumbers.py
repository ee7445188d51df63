# -*- coding: utf8 -*-

"""
Random number generation

Random numbers come from seeded numpy generators (PCG64) so that every
randomized check and oracle run is reproducible from its seed.
"""

import numpy as np
from scipy.stats import unitary_group

class RandomEnv(object):
    """
    >>> with RandomEnv(42) as rand:
    ...     first = rand.randint(0, 100)
    >>> with RandomEnv(42) as rand:
    ...     first == rand.randint(0, 100)
    True
    """

    def __init__(self, seed=None):
        self.seed = seed
        self.generator = None

    def __enter__(self):
        self.generator = np.random.default_rng(self.seed)
        return self

    def __exit__(self, type, value, traceback):
        self.generator = None

    def randint(self, a, b):
        " integer in [a, b] "

        return int(self.generator.integers(a, b + 1))

    def randreal(self, a=0.0, b=1.0, size=None):
        return self.generator.uniform(a, b, size)

    def probability_vector(self, length, sort=True):
        """
        Uniform sample from the probability simplex, sorted descending.
        """

        p = self.generator.dirichlet(np.ones(length))
        if sort:
            p = np.sort(p)[::-1]
        return p

    def unitary(self, dim):
        " Haar random unitary "

        if dim == 1:
            return np.exp(2j * np.pi * self.randreal()) * np.ones((1, 1))
        return unitary_group.rvs(dim, random_state=self.generator)

    def complex_vectors(self, count, dim):
        shape = (count, dim)
        return self.generator.normal(size=shape) + 1j * self.generator.normal(size=shape)

    def density_matrix(self, dim):
        " Random Hermitian 0 <= s <= 1 "

        u = self.unitary(dim)
        return (u * self.randreal(size=dim)) @ np.conj(u.T)
