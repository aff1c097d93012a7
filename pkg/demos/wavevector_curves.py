"""
Axial wavevector in an absorbing slab
=====================================

How the squared real and imaginary parts of the axial wavevector b1 inside
the slab move as the transverse wavenumber k grows, for Re eps = 10 and
three loss levels.  Everything is in units of w/c.
"""
import numpy as np

from slabtherm import b1_squares_hat

k2 = np.linspace(0.0, 20.0, 11)

# Im^2 b1 rises and Re^2 b1 falls with k^2; the crossover sits near k^2 = Re eps
for im in (1.0, 5.0, 10.0):
    re2, im2 = b1_squares_hat(np.sqrt(k2), 10.0, im)
    print(f"\nIm eps = {im:g}")
    print(f"{'k^2':>6} {'Re^2 b1':>12} {'Im^2 b1':>12}")
    for row in zip(k2, re2, im2):
        print("{:6.1f} {:12.6f} {:12.6f}".format(*row))

# the k = 0 intercepts have a closed form
im = 1.0
root = np.hypot(im, 10.0)
print("\nintercepts at k = 0 for Im eps = 1:", 0.5 * (-10 + root), 0.5 * (10 + root))

# a lossless medium keeps the two parts strictly separate
re2, im2 = b1_squares_hat(np.sqrt(k2), 10.0, 0.0)
print("lossless: Re^2 b1 * Im^2 b1 =", re2 * im2)
