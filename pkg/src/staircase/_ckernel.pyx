# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled tableau kernels.

Drop-in replacement for ``_pykernel``: same functions, same byte layouts,
same exceptions. See that module for the layout conventions.
"""

from cpython.bytes cimport PyBytes_AS_STRING, PyBytes_FromStringAndSize
from cpython.mem cimport PyMem_Free, PyMem_Malloc
from libc.string cimport memcpy, memset

from staircase._pykernel import KernelError

cdef enum:
    EMPTY = 0
    ALPHA = 1
    BETA = 2
    GAMMA = 3
    DELTA = 4
    QCELL = 5
    UCELL = 6

cdef unsigned char PSI[5]
PSI[:] = [0, DELTA, GAMMA, BETA, ALPHA]


cdef class _Scratch:
    """Owns the temporary buffers of one kernel call."""
    cdef unsigned char *g
    cdef Py_ssize_t *offs
    cdef Py_ssize_t *seq
    cdef Py_ssize_t *special

    def __cinit__(self, Py_ssize_t ncells, Py_ssize_t nrows):
        self.g = <unsigned char *>PyMem_Malloc(ncells + 1)
        self.offs = <Py_ssize_t *>PyMem_Malloc((nrows + 2) * sizeof(Py_ssize_t))
        self.seq = <Py_ssize_t *>PyMem_Malloc((nrows + 2) * sizeof(Py_ssize_t))
        self.special = <Py_ssize_t *>PyMem_Malloc((nrows + 2) * sizeof(Py_ssize_t))
        if not (self.g and self.offs and self.seq and self.special):
            raise MemoryError()

    def __dealloc__(self):
        PyMem_Free(self.g)
        PyMem_Free(self.offs)
        PyMem_Free(self.seq)
        PyMem_Free(self.special)


cdef inline void offsets_a(Py_ssize_t *offs, Py_ssize_t n) noexcept:
    cdef Py_ssize_t p
    for p in range(n + 1):
        offs[p] = p * (p + 1) // 2


cdef inline void offsets_b(Py_ssize_t *offs, Py_ssize_t n) noexcept:
    cdef Py_ssize_t p, ln
    offs[0] = 0
    for p in range(2 * n):
        ln = p + 1 if p + 1 < 2 * n - p else 2 * n - p
        offs[p + 1] = offs[p] + ln


cdef inline int move(unsigned char *g, Py_ssize_t *offs, Py_ssize_t src,
                     Py_ssize_t dst, Py_ssize_t ncols) noexcept:
    cdef Py_ssize_t a = offs[src], b = offs[dst], k
    for k in range(ncols):
        if g[b + k]:
            return -1
        g[b + k] = g[a + k]
        g[a + k] = 0
    return 0


cdef int insert_core(unsigned char *g, Py_ssize_t *offs, Py_ssize_t *seq,
                     Py_ssize_t nseq, Py_ssize_t i, unsigned char y) noexcept:
    cdef Py_ssize_t p
    for p in range(nseq - 2, -1, -1):
        if move(g, offs, seq[p], seq[p + 1], seq[p]) < 0:
            return -1
    if i:
        if move(g, offs, i - 1, seq[0], i) < 0:
            return -1
        g[offs[i - 1] + i - 1] = y
    return 0


cdef int uninsert_core(unsigned char *g, Py_ssize_t *offs, Py_ssize_t *seq,
                       Py_ssize_t nseq, Py_ssize_t *special, Py_ssize_t n,
                       Py_ssize_t *out_i, unsigned char *out_y) noexcept:
    """Returns 0 on success, -1 on a move conflict, -2 on a bad diagonal."""
    cdef Py_ssize_t j, p, l, ptr = 0, i = 0
    cdef unsigned char y
    for j in range(1, n + 1):
        while seq[ptr] + 1 <= j:
            ptr += 1
        special[j] = ptr
    for j in range(n, 0, -1):
        if g[offs[seq[special[j]]] + j - 1]:
            i = j
            break
    out_i[0] = i
    out_y[0] = 0
    if i == 0:
        for p in range(nseq - 1):
            if move(g, offs, seq[p + 1], seq[p], seq[p]) < 0:
                return -1
        return 0
    y = g[offs[i - 1] + i - 1]
    if y != BETA and y != DELTA:
        return -2
    out_y[0] = y
    g[offs[i - 1] + i - 1] = 0
    l = special[i]
    if move(g, offs, seq[l], i - 1, i) < 0:
        return -1
    for p in range(l, nseq - 1):
        if move(g, offs, seq[p + 1], seq[p], seq[p]) < 0:
            return -1
    return 0


cdef check_event(Py_ssize_t n, int x, int y, Py_ssize_t i, bint type_b):
    if x < ALPHA or x > DELTA:
        raise KernelError(f"bad event letter {x!r}")
    if i == 0:
        return
    if i < 1 or i > n:
        raise KernelError(f"event position {i} outside [1, {n}]")
    if y != BETA and y != DELTA:
        raise KernelError("second event letter must be beta or delta")
    if not type_b and x != ALPHA and x != GAMMA:
        raise KernelError("first event letter must be alpha or gamma")


cdef inline bint any_set(unsigned char *g, Py_ssize_t a, Py_ssize_t b) noexcept:
    cdef Py_ssize_t k
    for k in range(a, b):
        if g[k]:
            return True
    return False


# -- type A -----------------------------------------------------------------

def insert_a(bytes cells, Py_ssize_t n, int x, int y, Py_ssize_t i):
    check_event(n, x, y, i, False)
    cdef Py_ssize_t N = n + 1, old = n * (n + 1) // 2, p, nseq = 0
    if len(cells) != old:
        raise KernelError("cell buffer does not match the size")
    cdef bytes out = PyBytes_FromStringAndSize(NULL, old + N)
    cdef unsigned char *g = <unsigned char *>PyBytes_AS_STRING(out)
    memcpy(g, PyBytes_AS_STRING(cells), old)
    memset(g + old, 0, N)
    g[old + n] = <unsigned char>x
    if i == 0 and (x == BETA or x == DELTA):
        return out
    cdef _Scratch s = _Scratch(0, N)
    offsets_a(s.offs, N)
    for p in range(i, N):
        if g[s.offs[p] + p] & 1:
            s.seq[nseq] = p
            nseq += 1
    if insert_core(g, s.offs, s.seq, nseq, i, <unsigned char>y) < 0:
        raise KernelError("elementary move onto a nonempty cell")
    return out


def uninsert_a(bytes cells, Py_ssize_t N):
    if N < 1:
        raise KernelError("cannot uninsert from the empty tableau")
    cdef Py_ssize_t n = N - 1, total = N * (N + 1) // 2, p, nseq = 0, i = 0
    cdef unsigned char y = 0, x
    cdef int rc
    if len(cells) != total:
        raise KernelError("cell buffer does not match the size")
    cdef _Scratch s = _Scratch(total, N)
    cdef unsigned char *g = s.g
    memcpy(g, PyBytes_AS_STRING(cells), total)
    offsets_a(s.offs, N)
    x = g[s.offs[n] + n]
    if x == ALPHA or x == GAMMA:
        for p in range(N):
            if g[s.offs[p] + p] & 1:
                s.seq[nseq] = p
                nseq += 1
        rc = uninsert_core(g, s.offs, s.seq, nseq, s.special, n, &i, &y)
        if rc == -1:
            raise KernelError("elementary move onto a nonempty cell")
        if rc == -2:
            raise KernelError("special-cell column does not end on a beta/delta diagonal")
    elif x != BETA and x != DELTA:
        raise KernelError("top diagonal cell is unlabeled")
    if any_set(g, s.offs[n], s.offs[n] + n):
        raise KernelError("top row is not reduced to its diagonal")
    return PyBytes_FromStringAndSize(<char *>g, s.offs[n]), x, y, i


cdef void fill_buf(unsigned char *cells, unsigned char *out, Py_ssize_t n,
                   unsigned char *below) noexcept:
    cdef Py_ssize_t i, j, off = 0
    cdef unsigned char r, c, b
    memset(below, 0, n + 1)
    for i in range(1, n + 1):
        r = 0
        for j in range(i, 0, -1):
            c = cells[off + j - 1]
            if c:
                r = c
                below[j] = c
                out[off + j - 1] = c
            else:
                b = below[j]
                if r == DELTA or (r & 1 and (b == BETA or b == GAMMA)):
                    out[off + j - 1] = QCELL
                else:
                    out[off + j - 1] = UCELL
        off += i


def fill_a(bytes cells, Py_ssize_t n):
    cdef Py_ssize_t total = n * (n + 1) // 2
    if len(cells) != total:
        raise KernelError("cell buffer does not match the size")
    cdef bytes out = PyBytes_FromStringAndSize(NULL, total)
    cdef _Scratch s = _Scratch(n + 1, 0)
    fill_buf(<unsigned char *>PyBytes_AS_STRING(cells),
             <unsigned char *>PyBytes_AS_STRING(out), n, s.g)
    return out


def weight_a(bytes cells, Py_ssize_t n):
    cdef Py_ssize_t total = n * (n + 1) // 2, k
    if len(cells) != total:
        raise KernelError("cell buffer does not match the size")
    cdef _Scratch s = _Scratch(total + n + 1, 0)
    cdef unsigned char *filled = s.g + n + 1
    cdef Py_ssize_t counts[7]
    memset(counts, 0, sizeof(counts))
    fill_buf(<unsigned char *>PyBytes_AS_STRING(cells), filled, n, s.g)
    for k in range(total):
        counts[filled[k]] += 1
    return (counts[1], counts[2], counts[3], counts[4], counts[5], counts[6])


cdef bint valid_a_buf(unsigned char *cells, Py_ssize_t n, unsigned char *blocked) noexcept:
    cdef Py_ssize_t i, j, off = 0
    cdef unsigned char c
    cdef bint left_closed
    memset(blocked, 0, n + 1)
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
                    blocked[j] = 1
                else:
                    left_closed = True
        off += i
    return True


def is_valid_a(bytes cells, Py_ssize_t n):
    if len(cells) != n * (n + 1) // 2:
        return False
    cdef _Scratch s = _Scratch(n + 1, 0)
    return valid_a_buf(<unsigned char *>PyBytes_AS_STRING(cells), n, s.g)


def children_a(bytes cells, Py_ssize_t n, events):
    return [insert_a(cells, n, x, y, i) for x, y, i in events]


def decompose_a(bytes cells, Py_ssize_t n):
    cdef list events = []
    cdef Py_ssize_t k
    for k in range(n, 0, -1):
        cells, x, y, i = uninsert_a(cells, k)
        events.append((x, y, i))
    events.reverse()
    return events


def compose_a(events):
    cdef bytes cells = b""
    cdef Py_ssize_t n = 0
    for x, y, i in events:
        cells = insert_a(cells, n, x, y, i)
        n += 1
    return cells


# -- type B -----------------------------------------------------------------

def insert_b(bytes cells, Py_ssize_t n, int x, int y, Py_ssize_t i):
    check_event(n, x, y, i, True)
    cdef Py_ssize_t N = n + 1, old = n * (n + 1), half = n * (n + 1) // 2
    cdef Py_ssize_t p, nseq = 0
    if len(cells) != old:
        raise KernelError("cell buffer does not match the size")
    cdef bytes out = PyBytes_FromStringAndSize(NULL, N * (N + 1))
    cdef unsigned char *g = <unsigned char *>PyBytes_AS_STRING(out)
    cdef unsigned char *src = <unsigned char *>PyBytes_AS_STRING(cells)
    memcpy(g, src, half)
    memset(g + half, 0, 2 * N)
    g[half + n] = <unsigned char>x
    memcpy(g + half + 2 * N, src + half, old - half)
    cdef _Scratch s = _Scratch(0, 2 * N)
    offsets_b(s.offs, N)
    if x & 1:
        for p in range(i, N):
            if g[s.offs[p] + p] & 1:
                s.seq[nseq] = p
                nseq += 1
    else:
        for p in range(i, n):
            if g[s.offs[p] + p] & 1:
                s.seq[nseq] = p
                nseq += 1
        s.seq[nseq] = N
        nseq += 1
    if insert_core(g, s.offs, s.seq, nseq, i, <unsigned char>y) < 0:
        raise KernelError("elementary move onto a nonempty cell")
    return out


def uninsert_b(bytes cells, Py_ssize_t N):
    if N < 1:
        raise KernelError("cannot uninsert from the empty tableau")
    cdef Py_ssize_t n = N - 1, total = N * (N + 1), p, nseq = 0, i = 0
    cdef unsigned char y = 0, x
    cdef int rc
    if len(cells) != total:
        raise KernelError("cell buffer does not match the size")
    cdef _Scratch s = _Scratch(total, 2 * N)
    cdef unsigned char *g = s.g
    memcpy(g, PyBytes_AS_STRING(cells), total)
    offsets_b(s.offs, N)
    x = g[s.offs[n] + n]
    if x & 1:
        if any_set(g, s.offs[N], s.offs[N + 1]):
            raise KernelError("row -(n+1) must be empty under an alpha/gamma diagonal")
        for p in range(N):
            if g[s.offs[p] + p] & 1:
                s.seq[nseq] = p
                nseq += 1
    elif x:
        for p in range(n):
            if g[s.offs[p] + p] & 1:
                s.seq[nseq] = p
                nseq += 1
        s.seq[nseq] = N
        nseq += 1
    else:
        raise KernelError("top diagonal cell is unlabeled")
    rc = uninsert_core(g, s.offs, s.seq, nseq, s.special, n, &i, &y)
    if rc == -1:
        raise KernelError("elementary move onto a nonempty cell")
    if rc == -2:
        raise KernelError("special-cell column does not end on a beta/delta diagonal")
    if any_set(g, s.offs[n], s.offs[n] + n) or any_set(g, s.offs[N], s.offs[N + 1]):
        raise KernelError("inserted rows are not reduced to the diagonal")
    cdef bytes out = PyBytes_FromStringAndSize(NULL, n * (n + 1))
    cdef unsigned char *o = <unsigned char *>PyBytes_AS_STRING(out)
    memcpy(o, g, s.offs[n])
    memcpy(o + s.offs[n], g + s.offs[N + 1], total - s.offs[N + 1])
    return out, x, y, i


cdef void expand_buf(unsigned char *cells, unsigned char *out, Py_ssize_t n,
                     Py_ssize_t *offs) noexcept:
    cdef Py_ssize_t m = 2 * n, r, c, pos = 0
    offsets_b(offs, n)
    for r in range(1, m + 1):
        for c in range(1, r + 1):
            if r + c <= m + 1:
                out[pos] = cells[offs[r - 1] + c - 1]
            else:
                out[pos] = PSI[cells[offs[m - c] + m - r]]
            pos += 1


def expand_b(bytes cells, Py_ssize_t n):
    if len(cells) != n * (n + 1):
        raise KernelError("cell buffer does not match the size")
    cdef Py_ssize_t m = 2 * n
    cdef bytes out = PyBytes_FromStringAndSize(NULL, m * (m + 1) // 2)
    cdef _Scratch s = _Scratch(0, m)
    expand_buf(<unsigned char *>PyBytes_AS_STRING(cells),
               <unsigned char *>PyBytes_AS_STRING(out), n, s.offs)
    return out


def weight_b(bytes cells, Py_ssize_t n):
    if len(cells) != n * (n + 1):
        raise KernelError("cell buffer does not match the size")
    cdef Py_ssize_t m = 2 * n, total = m * (m + 1) // 2, r, c, pos = 0
    cdef _Scratch s = _Scratch(2 * total + m + 1, m)
    cdef unsigned char *full = s.g
    cdef unsigned char *filled = s.g + total
    cdef unsigned char *below = s.g + 2 * total
    cdef unsigned char v
    cdef Py_ssize_t counts[7]
    cdef Py_ssize_t z = 0
    memset(counts, 0, sizeof(counts))
    expand_buf(<unsigned char *>PyBytes_AS_STRING(cells), full, n, s.offs)
    fill_buf(full, filled, m, below)
    for r in range(1, m + 1):
        for c in range(1, r + 1):
            if r + c <= m + 1:
                v = filled[pos]
                counts[v] += 1
                if v == QCELL and r + c == m + 1:
                    z += 1
            pos += 1
    return (counts[1], counts[2], counts[3], counts[4], counts[5], counts[6], z)


def is_valid_b(bytes cells, Py_ssize_t n):
    if len(cells) != n * (n + 1):
        return False
    cdef Py_ssize_t m = 2 * n, total = m * (m + 1) // 2, i
    cdef _Scratch s = _Scratch(total + m + 1, m)
    cdef unsigned char *src = <unsigned char *>PyBytes_AS_STRING(cells)
    offsets_b(s.offs, n)
    for i in range(1, n + 1):
        if src[s.offs[m - i] + i - 1]:
            return False
    expand_buf(src, s.g, n, s.offs)
    return valid_a_buf(s.g, m, s.g + total)


def children_b(bytes cells, Py_ssize_t n, events):
    return [insert_b(cells, n, x, y, i) for x, y, i in events]


def decompose_b(bytes cells, Py_ssize_t n):
    cdef list events = []
    cdef Py_ssize_t k
    for k in range(n, 0, -1):
        cells, x, y, i = uninsert_b(cells, k)
        events.append((x, y, i))
    events.reverse()
    return events


def compose_b(events):
    cdef bytes cells = b""
    cdef Py_ssize_t n = 0
    for x, y, i in events:
        cells = insert_b(cells, n, x, y, i)
        n += 1
    return cells
