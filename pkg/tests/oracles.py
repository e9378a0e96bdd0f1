"""Independent reference computations shared by several test modules."""
import math

from scipy.integrate import quad


def excision_pv(f, a, b, pole, delta0=4e-3, levels=4):
    """Principal value by symmetric excision of (pole - delta, pole + delta).

    The excision error is an odd power series in delta, so repeated halving
    with Richardson weights 2^1, 2^3, 2^5, ... removes it term by term.
    """
    def excised(delta):
        left = quad(f, a, pole - delta, epsabs=1e-14, epsrel=1e-13, limit=400)[0]
        right = quad(f, pole + delta, b, epsabs=1e-14, epsrel=1e-13, limit=400)[0]
        return left + right

    table = [excised(delta0 / 2**i) for i in range(levels)]
    power = 1
    while len(table) > 1:
        w = 2.0**power
        table = [(w * table[i + 1] - table[i]) / (w - 1) for i in range(len(table) - 1)]
        power += 2
    return table[0]
