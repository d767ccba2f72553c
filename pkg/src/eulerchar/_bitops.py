"""Bit-packed set kernels.

A face / vertex set is a plain Python int used as a bit vector (bit i =
element i).  CPython big ints already execute the word-level boolean ops in
C, so these kernels focus on keeping the Python-level loop counts low: the
antichain extraction switches to a transposed incidence representation for
large batches, and wide integers are scanned through bytes instead of
repeated shifts.
"""

_BYTE_BITS = [tuple(b for b in range(8) if (v >> b) & 1) for v in range(256)]

# batches larger than this use the transposed dominator check in maximal_sets
_LARGE_BATCH = 512
# ints wider than this are iterated via to_bytes instead of bit twiddling
_WIDE_BITS = 4096


def mask(n):
    """All-ones mask for a universe of n elements."""
    return (1 << n) - 1


def iter_bits(x):
    """Yield the set bit positions of x in ascending order."""
    if x.bit_length() > _WIDE_BITS:
        bb = _BYTE_BITS
        base = 0
        for byte in x.to_bytes((x.bit_length() + 7) >> 3, "little"):
            if byte:
                for b in bb[byte]:
                    yield base + b
            base += 8
        return
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def union_all(sets):
    u = 0
    for s in sets:
        u |= s
    return u


def transpose_rows(sets):
    """Incidence transpose: dict mapping element v to the bitmask of set
    indices i with v in sets[i].  Only elements that occur are keyed."""
    nbytes = (len(sets) + 7) >> 3
    buf = {}
    for i, s in enumerate(sets):
        byte = i >> 3
        bit = 1 << (i & 7)
        for v in iter_bits(s):
            b = buf.get(v)
            if b is None:
                b = buf[v] = bytearray(nbytes)
            b[byte] |= bit
    return {v: int.from_bytes(bytes(b), "little") for v, b in buf.items()}


def maximal_sets(sets):
    """Maximal elements of a family of bitsets under inclusion.

    Duplicates are dropped.  Result is sorted ascending as integers, so the
    output order is canonical regardless of input order.
    """
    if not sets:
        return []
    uniq = set(sets)
    if len(uniq) == 1:
        return list(uniq)
    sizes = {s: s.bit_count() for s in uniq}
    if len(set(sizes.values())) == 1:
        # equal-cardinality distinct sets are pairwise incomparable
        return sorted(uniq)
    order = sorted(uniq, key=lambda s: (-sizes[s], s))
    if len(order) > _LARGE_BATCH:
        return sorted(_maximal_transposed(order, sizes))
    kept = []
    bound = 0  # kept[:bound] are strictly larger than the current size level
    cur = -1
    for s in order:
        sz = sizes[s]
        if sz != cur:
            bound = len(kept)
            cur = sz
        dominated = False
        for i in range(bound):
            if s & ~kept[i] == 0:
                dominated = True
                break
        if not dominated:
            kept.append(s)
    return sorted(kept)


def _maximal_transposed(order, sizes):
    # order is sorted by descending size; a set can only be dominated by a
    # strictly larger one, i.e. by an earlier index from a previous size run.
    rows = transpose_rows(order)
    kept = []
    bound_mask = 0
    cur = sizes[order[0]]
    level_mask = 0  # accumulates (1 << i) for indices at the current level
    for i, s in enumerate(order):
        sz = sizes[s]
        if sz != cur:
            bound_mask |= level_mask
            level_mask = 0
            cur = sz
        level_mask |= 1 << i
        if bound_mask:
            acc = bound_mask
            for v in iter_bits(s):
                acc &= rows[v]
                if not acc:
                    break
            if acc:
                continue
        kept.append(s)
    return kept


def compress_columns(keep, sets):
    """Re-index each bitset onto the dense universe enumerating the set bits
    of `keep` in ascending order.  Returns (k, new_sets)."""
    positions = list(iter_bits(keep))
    k = len(positions)
    nbytes = (keep.bit_length() + 7) >> 3
    out = []
    for f in sets:
        fb = f.to_bytes(nbytes, "little")
        ob = bytearray((k + 7) >> 3)
        for j, p in enumerate(positions):
            if fb[p >> 3] & (1 << (p & 7)):
                ob[j >> 3] |= 1 << (j & 7)
        out.append(int.from_bytes(bytes(ob), "little"))
    return k, out
