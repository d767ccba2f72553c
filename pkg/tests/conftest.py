import random

import pytest

from eulerchar import Complex, make_complex


def antichain_families(n):
    """Every antichain of subsets of {0..n-1}, including [] (void) and [0] ({∅})."""
    subs = list(range(1 << n))
    out = []

    def rec(i, cur):
        out.append(tuple(cur))
        for j in range(i, len(subs)):
            s = subs[j]
            if all(s & ~t and t & ~s for t in cur):
                cur.append(s)
                rec(j + 1, cur)
                cur.pop()

    rec(0, [])
    return out


def all_complexes(max_n):
    for n in range(max_n + 1):
        for fam in antichain_families(n):
            yield Complex(n, tuple(sorted(fam)))


def random_complex(rng: random.Random, max_n=12, max_m=12, min_n=1):
    n = rng.randint(min_n, max_n)
    m = rng.randint(1, max_m)
    return make_complex(n, [rng.getrandbits(n) for _ in range(m)])


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
