#!/usr/bin/env python3
"""Which shift direction of sigma makes A B A^-1 = lambda B?

For each direction, find k with A B A^-1 = lambda^k B numerically.
"""

import numpy as np


def conjugation_exponent(p, shift):
    lam = np.exp(2j * np.pi / p)
    sigma = np.roll(np.eye(p), shift, axis=0)  # sigma e_j = e_(j + shift)
    tau = np.diag(lam ** np.arange(p))
    z = np.zeros((p, p))
    A = np.block([[sigma, z], [z, sigma.T]])
    B = np.block([[1j * tau, z], [z, -1j * tau.conj()]])
    X = A @ B @ A.T
    for k in range(p):
        if np.allclose(X, lam**k * B):
            return k
    return None


if __name__ == "__main__":
    for p in (3, 5, 7, 11):
        fwd = conjugation_exponent(p, +1)
        bwd = conjugation_exponent(p, -1)
        print(f"p={p}: e_j -> e_(j+1) gives lambda^{fwd}  (= lambda^-1);"
              f"  e_j -> e_(j-1) gives lambda^{bwd}")
