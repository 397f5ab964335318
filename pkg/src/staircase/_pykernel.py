"""Pure-Python tableau kernels.

Reference implementation of the hot loops. ``_ckernel.pyx`` mirrors every
function here with the same signatures and byte layouts; this module is used
when the extension is not built, and as the oracle the extension is tested
against.

Layouts
-------
Labels are small ints: 0 empty, 1 alpha, 2 beta, 3 gamma, 4 delta (odd codes
are the alpha/gamma family, even nonzero codes beta/delta). Filled cells use
5 for q and 6 for u.

A type-A tableau of size n is ``bytes`` of length n(n+1)/2, rows bottom to
top, row i holding columns 1..i.

A type-B half tableau of size n is ``bytes`` of length n(n+1): the cells
(r, c) of the full size-2n tableau with r + c <= 2n + 1, rows bottom to top.
Positive row i is full row i; negative row -i is full row 2n + 1 - i.

Events are ``(x, y, i)`` triples; ``i == 0`` means a single-letter insertion
(``y`` is then 0).
"""

EMPTY, ALPHA, BETA, GAMMA, DELTA, QCELL, UCELL = range(7)
PSI = (0, DELTA, GAMMA, BETA, ALPHA)


class KernelError(ValueError):
    """Raised when an input is not a legal tableau or event."""


def _offsets_a(n):
    return [p * (p + 1) // 2 for p in range(n + 1)]


def _offsets_b(n):
    offs = [0]
    for p in range(2 * n):
        offs.append(offs[-1] + min(p + 1, 2 * n - p))
    return offs


def _move(g, offs, src, dst, ncols):
    a = offs[src]
    b = offs[dst]
    for k in range(ncols):
        if g[b + k]:
            raise KernelError("elementary move onto a nonempty cell")
        g[b + k] = g[a + k]
        g[a + k] = 0


def _insert_core(g, offs, seq, i, y):
    for p in range(len(seq) - 2, -1, -1):
        _move(g, offs, seq[p], seq[p + 1], seq[p])
    if i:
        _move(g, offs, i - 1, seq[0], i)
        g[offs[i - 1] + i - 1] = y


def _uninsert_core(g, offs, seq, n):
    """Undo an insertion whose alpha/gamma row sequence is ``seq``.

    Returns ``(i, y)``; ``i == 0`` for a single-letter insertion.
    """
    special = [0] * (n + 1)
    ptr = 0
    for j in range(1, n + 1):
        while seq[ptr] + 1 <= j:
            ptr += 1
        special[j] = ptr
    i = 0
    for j in range(n, 0, -1):
        if g[offs[seq[special[j]]] + j - 1]:
            i = j
            break
    if i == 0:
        for p in range(len(seq) - 1):
            _move(g, offs, seq[p + 1], seq[p], seq[p])
        return 0, 0
    y = g[offs[i - 1] + i - 1]
    if y not in (BETA, DELTA):
        raise KernelError("special-cell column does not end on a beta/delta diagonal")
    g[offs[i - 1] + i - 1] = 0
    l = special[i]
    _move(g, offs, seq[l], i - 1, i)
    for p in range(l, len(seq) - 1):
        _move(g, offs, seq[p + 1], seq[p], seq[p])
    return i, y


def _check_event(n, x, y, i, type_b):
    if x not in (ALPHA, BETA, GAMMA, DELTA):
        raise KernelError(f"bad event letter {x!r}")
    if i == 0:
        return
    if not 1 <= i <= n:
        raise KernelError(f"event position {i} outside [1, {n}]")
    if y not in (BETA, DELTA):
        raise KernelError("second event letter must be beta or delta")
    if not type_b and x not in (ALPHA, GAMMA):
        raise KernelError("first event letter must be alpha or gamma")


# -- type A -----------------------------------------------------------------

def insert_a(cells, n, x, y, i):
    _check_event(n, x, y, i, False)
    N = n + 1
    g = bytearray(cells)
    g.extend(bytes(N))
    offs = _offsets_a(N)
    g[offs[n] + n] = x
    if i == 0 and x in (BETA, DELTA):
        return bytes(g)
    seq = [p for p in range(i, N) if g[offs[p] + p] & 1]
    _insert_core(g, offs, seq, i, y)
    return bytes(g)


def uninsert_a(cells, N):
    if N < 1:
        raise KernelError("cannot uninsert from the empty tableau")
    n = N - 1
    g = bytearray(cells)
    offs = _offsets_a(N)
    x = g[offs[n] + n]
    if x in (ALPHA, GAMMA):
        seq = [p for p in range(N) if g[offs[p] + p] & 1]
        i, y = _uninsert_core(g, offs, seq, n)
    elif x in (BETA, DELTA):
        i, y = 0, 0
    else:
        raise KernelError("top diagonal cell is unlabeled")
    if any(g[offs[n]:offs[n] + n]):
        raise KernelError("top row is not reduced to its diagonal")
    return bytes(g[:offs[n]]), x, y, i


def fill_a(cells, n):
    out = bytearray(cells)
    below = [0] * (n + 1)
    off = 0
    for i in range(1, n + 1):
        r = 0
        for j in range(i, 0, -1):
            c = cells[off + j - 1]
            if c:
                r = c
                below[j] = c
            else:
                b = below[j]
                if r == DELTA or (r & 1 and (b == BETA or b == GAMMA)):
                    out[off + j - 1] = QCELL
                else:
                    out[off + j - 1] = UCELL
        off += i
    return bytes(out)


def weight_a(cells, n):
    counts = [0] * 7
    for c in fill_a(cells, n):
        counts[c] += 1
    return tuple(counts[1:])


def is_valid_a(cells, n):
    if len(cells) != n * (n + 1) // 2:
        return False
    blocked = [False] * (n + 1)
    off = 0
    for i in range(1, n + 1):
        if not cells[off + i - 1]:
            return False
        left_closed = False
        for j in range(i, 0, -1):
            c = cells[off + j - 1]
            if c > DELTA:
                return False
            if c:
                if left_closed or blocked[j]:
                    return False
                if c & 1:
                    blocked[j] = True
                else:
                    left_closed = True
        off += i
    return True


def children_a(cells, n, events):
    return [insert_a(cells, n, x, y, i) for x, y, i in events]


def decompose_a(cells, n):
    events = []
    for k in range(n, 0, -1):
        cells, x, y, i = uninsert_a(cells, k)
        events.append((x, y, i))
    events.reverse()
    return events


def compose_a(events):
    cells = b""
    for n, (x, y, i) in enumerate(events):
        cells = insert_a(cells, n, x, y, i)
    return cells


# -- type B -----------------------------------------------------------------

def _grow_b(cells, n, x):
    half = n * (n + 1) // 2
    g = bytearray(cells[:half])
    g.extend(bytes(n))
    g.append(x)
    g.extend(bytes(n + 1))
    g.extend(cells[half:])
    return g


def insert_b(cells, n, x, y, i):
    _check_event(n, x, y, i, True)
    N = n + 1
    g = _grow_b(cells, n, x)
    offs = _offsets_b(N)
    if x & 1:
        seq = [p for p in range(i, N) if g[offs[p] + p] & 1]
    else:
        seq = [p for p in range(i, n) if g[offs[p] + p] & 1]
        seq.append(N)
    _insert_core(g, offs, seq, i, y)
    return bytes(g)


def uninsert_b(cells, N):
    if N < 1:
        raise KernelError("cannot uninsert from the empty tableau")
    n = N - 1
    g = bytearray(cells)
    offs = _offsets_b(N)
    x = g[offs[n] + n]
    if x & 1:
        if any(g[offs[N]:offs[N + 1]]):
            raise KernelError("row -(n+1) must be empty under an alpha/gamma diagonal")
        seq = [p for p in range(N) if g[offs[p] + p] & 1]
    elif x:
        seq = [p for p in range(n) if g[offs[p] + p] & 1]
        seq.append(N)
    else:
        raise KernelError("top diagonal cell is unlabeled")
    i, y = _uninsert_core(g, offs, seq, n)
    if any(g[offs[n]:offs[n] + n]) or any(g[offs[N]:offs[N + 1]]):
        raise KernelError("inserted rows are not reduced to the diagonal")
    return bytes(g[:offs[n]] + g[offs[N + 1]:]), x, y, i


def expand_b(cells, n):
    m = 2 * n
    out = bytearray(m * (m + 1) // 2)
    offs = _offsets_b(n)
    pos = 0
    for r in range(1, m + 1):
        for c in range(1, r + 1):
            if r + c <= m + 1:
                out[pos] = cells[offs[r - 1] + c - 1]
            else:
                rr = m + 1 - c
                cc = m + 1 - r
                out[pos] = PSI[cells[offs[rr - 1] + cc - 1]]
            pos += 1
    return bytes(out)


def weight_b(cells, n):
    m = 2 * n
    filled = fill_a(expand_b(cells, n), m)
    counts = [0] * 7
    z = 0
    pos = 0
    for r in range(1, m + 1):
        for c in range(1, r + 1):
            if r + c <= m + 1:
                v = filled[pos]
                counts[v] += 1
                if v == QCELL and r + c == m + 1:
                    z += 1
            pos += 1
    return tuple(counts[1:]) + (z,)


def is_valid_b(cells, n):
    if len(cells) != n * (n + 1):
        return False
    offs = _offsets_b(n)
    for i in range(1, n + 1):
        if cells[offs[2 * n - i] + i - 1]:
            return False
    return is_valid_a(expand_b(cells, n), 2 * n)


def children_b(cells, n, events):
    return [insert_b(cells, n, x, y, i) for x, y, i in events]


def decompose_b(cells, n):
    events = []
    for k in range(n, 0, -1):
        cells, x, y, i = uninsert_b(cells, k)
        events.append((x, y, i))
    events.reverse()
    return events


def compose_b(events):
    cells = b""
    for n, (x, y, i) in enumerate(events):
        cells = insert_b(cells, n, x, y, i)
    return cells
