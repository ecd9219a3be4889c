"""
Exact sparse integer linear algebra: Smith normal form, integer solving and
reduction mod p.
"""

from __future__ import absolute_import, division, print_function

import numpy as np
import six

from .errors import ParameterError, ShapeError
from .utils import get_logger


__all__ = [
    'SparseIntMatrix',
    'SmithDecomposition',
    'smith_normal_form',
    'solve_integer',
    'reduce_mod_p',
    'rank',
    'kernel_basis',
    'is_prime',
    'int_vector',
]

LOG = get_logger()


def is_prime(p):
    if not isinstance(p, six.integer_types) or p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def int_vector(values, modulus=None):
    '''Object-dtype numpy vector of python ints, reduced mod ``modulus``.'''
    vec = np.array([int(v) for v in values], dtype=object)
    if modulus:
        vec = vec % modulus
    return vec


def _modinv(a, p):
    return pow(int(a) % p, p - 2, p)


class SparseIntMatrix(object):
    '''An immutable integer matrix stored as {(row, col): value}.

    Zero entries are never stored. If ``modulus`` is set, entries live in
    Z/modulus and every product is reduced.
    '''

    def __init__(self, rows, cols, entries=None, modulus=None):
        self.rows = int(rows)
        self.cols = int(cols)
        self.modulus = modulus
        self._entries = {}
        self._by_row = None
        for (i, j), v in six.iteritems(entries or {}):
            if not (0 <= i < self.rows and 0 <= j < self.cols):
                raise ShapeError("Entry out of bounds", (i, j),
                                 (self.rows, self.cols))
            v = int(v)
            if modulus:
                v %= modulus
            if v:
                self._entries[(i, j)] = v

    @classmethod
    def from_dense(cls, dense, modulus=None):
        dense = [list(row) for row in dense]
        rows = len(dense)
        cols = len(dense[0]) if rows else 0
        entries = {}
        for i, row in enumerate(dense):
            if len(row) != cols:
                raise ShapeError("Ragged matrix rows")
            for j, v in enumerate(row):
                if v:
                    entries[(i, j)] = v
        return cls(rows, cols, entries, modulus)

    @classmethod
    def identity(cls, n, modulus=None):
        return cls(n, n, {(i, i): 1 for i in range(n)}, modulus)

    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def nnz(self):
        return len(self._entries)

    def items(self):
        return sorted(self._entries.items())

    def __getitem__(self, key):
        return self._entries.get(key, 0)

    def __eq__(self, other):
        if not isinstance(other, SparseIntMatrix):
            return NotImplemented
        return (self.shape == other.shape and
                self._entries == other._entries)

    def __ne__(self, other):
        res = self.__eq__(other)
        return res if res is NotImplemented else not res

    __hash__ = None

    def __repr__(self):
        return "SparseIntMatrix({}x{}, nnz={})".format(self.rows, self.cols,
                                                      self.nnz)

    def is_zero(self):
        return not self._entries

    def row_dicts(self):
        if self._by_row is None:
            by_row = {}
            for (i, j), v in six.iteritems(self._entries):
                by_row.setdefault(i, {})[j] = v
            self._by_row = by_row
        return self._by_row

    def transpose(self):
        return SparseIntMatrix(self.cols, self.rows,
                               {(j, i): v for (i, j), v in self.items()},
                               self.modulus)

    T = property(transpose)

    def to_dense(self):
        dense = np.zeros(self.shape, dtype=object)
        dense[:, :] = 0
        for (i, j), v in six.iteritems(self._entries):
            dense[i, j] = v
        return dense

    def mod(self, p):
        return SparseIntMatrix(self.rows, self.cols, self._entries, p)

    def submatrix(self, row_index, col_index):
        '''Restrict to the given rows and columns, renumbered in order.'''
        rmap = {r: k for k, r in enumerate(row_index)}
        cmap = {c: k for k, c in enumerate(col_index)}
        entries = {}
        for (i, j), v in six.iteritems(self._entries):
            if i in rmap and j in cmap:
                entries[(rmap[i], cmap[j])] = v
        return SparseIntMatrix(len(rmap), len(cmap), entries, self.modulus)

    def dot(self, other):
        '''Matrix product with another SparseIntMatrix or a vector.'''
        modulus = self.modulus or getattr(other, 'modulus', None)
        if isinstance(other, SparseIntMatrix):
            if self.cols != other.rows:
                raise ShapeError("Cannot multiply", self.shape, other.shape)
            other_rows = other.row_dicts()
            entries = {}
            for (i, k), v in six.iteritems(self._entries):
                for j, w in six.iteritems(other_rows.get(k, {})):
                    entries[(i, j)] = entries.get((i, j), 0) + v * w
            return SparseIntMatrix(self.rows, other.cols, entries, modulus)
        vec = list(other)
        if len(vec) != self.cols:
            raise ShapeError("Cannot multiply", self.shape, len(vec))
        out = [0] * self.rows
        for (i, j), v in six.iteritems(self._entries):
            if vec[j]:
                out[i] += v * int(vec[j])
        return int_vector(out, modulus)

    __matmul__ = dot


class _Workspace(object):
    '''Mutable sparse matrix used inside the elimination loops only.'''

    def __init__(self, matrix, modulus=None):
        self.rows = {}
        self.cols = {}
        self.modulus = modulus
        self.shape = matrix.shape
        for (i, j), v in matrix.items():
            self.set(i, j, v)

    @classmethod
    def identity(cls, n, modulus=None):
        return cls(SparseIntMatrix.identity(n), modulus)

    def get(self, i, j):
        return self.rows.get(i, {}).get(j, 0)

    def set(self, i, j, v):
        if self.modulus:
            v %= self.modulus
        if v:
            self.rows.setdefault(i, {})[j] = v
            self.cols.setdefault(j, set()).add(i)
        else:
            row = self.rows.get(i)
            if row and j in row:
                del row[j]
                self.cols[j].discard(i)

    def add_row(self, src, dst, c):
        '''row[dst] += c * row[src]'''
        if not c:
            return
        for j, v in list(self.rows.get(src, {}).items()):
            self.set(dst, j, self.get(dst, j) + c * v)

    def add_col(self, src, dst, c):
        '''col[dst] += c * col[src]'''
        if not c:
            return
        for i in list(self.cols.get(src, ())):
            self.set(i, dst, self.get(i, dst) + c * self.get(i, src))

    def swap_rows(self, a, b):
        if a == b:
            return
        ra, rb = self.rows.pop(a, {}), self.rows.pop(b, {})
        for j in ra:
            self.cols[j].discard(a)
        for j in rb:
            self.cols[j].discard(b)
        for j, v in ra.items():
            self.set(b, j, v)
        for j, v in rb.items():
            self.set(a, j, v)

    def swap_cols(self, a, b):
        if a == b:
            return
        ca, cb = self.cols.pop(a, set()), self.cols.pop(b, set())
        va = {i: self.rows[i].pop(a) for i in ca}
        vb = {i: self.rows[i].pop(b) for i in cb}
        for i, v in va.items():
            self.set(i, b, v)
        for i, v in vb.items():
            self.set(i, a, v)

    def scale_row(self, i, s):
        for j, v in list(self.rows.get(i, {}).items()):
            self.set(i, j, v * s)

    def scale_col(self, j, s):
        for i in list(self.cols.get(j, ())):
            self.set(i, j, self.get(i, j) * s)

    def freeze(self):
        entries = {}
        for i, row in six.iteritems(self.rows):
            for j, v in six.iteritems(row):
                entries[(i, j)] = v
        return SparseIntMatrix(self.shape[0], self.shape[1], entries,
                               self.modulus)


class SmithDecomposition(object):
    '''A = U * D * V with U, V unimodular and D diagonal.

    ``U_inv`` and ``V_inv`` are carried along so kernels, cokernels and
    solutions can be read off without inverting anything afterwards.
    '''

    def __init__(self, U, D, V, U_inv, V_inv, divisors, modulus=None):
        self.U = U
        self.D = D
        self.V = V
        self.U_inv = U_inv
        self.V_inv = V_inv
        self.divisors = list(divisors)
        self.modulus = modulus

    @property
    def rank(self):
        return len(self.divisors)

    def product(self):
        return self.U.dot(self.D).dot(self.V)

    def solve(self, b):
        '''Return x with A x = b, or None when no solution exists.'''
        c = self.U_inv.dot(b)
        y = [0] * self.V.rows
        for i, d in enumerate(self.divisors):
            if self.modulus:
                y[i] = int(c[i]) * _modinv(d, self.modulus)
            elif c[i] % d:
                return None
            else:
                y[i] = int(c[i]) // d
        if any(c[self.rank:]):
            return None
        return self.V_inv.dot(y)

    def kernel_basis(self):
        '''Columns of V^-1 that D sends to zero; they span ker A.'''
        dense = self.V_inv.transpose().row_dicts()
        basis = []
        for j in range(self.rank, self.V.rows):
            vec = [0] * self.V.rows
            for i, v in six.iteritems(dense.get(j, {})):
                vec[i] = v
            basis.append(int_vector(vec, self.modulus))
        return basis


class _Eliminator(object):
    '''Row and column operations on A, mirrored into U, U^-1, V, V^-1.'''

    def __init__(self, A, modulus, transforms):
        self.W = _Workspace(A, modulus)
        self.modulus = modulus
        self.transforms = transforms
        m, n = A.shape
        if transforms:
            self.U = _Workspace.identity(m, modulus)
            self.U_inv = _Workspace.identity(m, modulus)
            self.V = _Workspace.identity(n, modulus)
            self.V_inv = _Workspace.identity(n, modulus)

    def row_add(self, src, dst, c):
        self.W.add_row(src, dst, c)
        if self.transforms:
            self.U_inv.add_row(src, dst, c)
            self.U.add_col(dst, src, -c)

    def col_add(self, src, dst, c):
        self.W.add_col(src, dst, c)
        if self.transforms:
            self.V.add_row(dst, src, -c)
            self.V_inv.add_col(src, dst, c)

    def row_swap(self, a, b):
        self.W.swap_rows(a, b)
        if self.transforms:
            self.U_inv.swap_rows(a, b)
            self.U.swap_cols(a, b)

    def col_swap(self, a, b):
        self.W.swap_cols(a, b)
        if self.transforms:
            self.V.swap_rows(a, b)
            self.V_inv.swap_cols(a, b)

    def row_scale(self, i, s):
        '''Scale row i by the unit s.'''
        self.W.scale_row(i, s)
        if self.transforms:
            self.U_inv.scale_row(i, s)
            if self.modulus:
                self.U.scale_col(i, _modinv(s, self.modulus))
            else:
                self.U.scale_col(i, s)

    def find_pivot(self, t):
        best = None
        for i in sorted(self.W.rows):
            if i < t:
                continue
            for j, v in six.iteritems(self.W.rows[i]):
                if j < t:
                    continue
                key = (abs(v), i, j)
                if best is None or key < best:
                    best = key
        return best

    def clear(self, t):
        '''Make (t, t) the only nonzero entry of row t and column t.'''
        W = self.W
        while True:
            if self.modulus and W.get(t, t) != 1:
                self.row_scale(t, _modinv(W.get(t, t), self.modulus))
            p = W.get(t, t)
            for i in sorted(W.cols.get(t, ())):
                if i > t:
                    self.row_add(t, i, -(W.get(i, t) // p))
            for j in sorted(W.rows.get(t, {})):
                if j > t:
                    self.col_add(t, j, -(W.get(t, j) // p))
            col_rest = [(abs(W.get(i, t)), i) for i in W.cols.get(t, ())
                        if i > t]
            row_rest = [(abs(W.get(t, j)), j) for j in W.rows.get(t, {})
                        if j > t]
            if not col_rest and not row_rest:
                return
            # A remainder smaller than the pivot is left; move it in.
            if col_rest and (not row_rest or min(col_rest) <= min(row_rest)):
                self.row_swap(t, min(col_rest)[1])
            else:
                self.col_swap(t, min(row_rest)[1])

    def diagonalise(self):
        m, n = self.W.shape
        t = 0
        while t < min(m, n):
            pivot = self.find_pivot(t)
            if pivot is None:
                break
            _, i, j = pivot
            self.row_swap(t, i)
            self.col_swap(t, j)
            self.clear(t)
            t += 1
        return t

    def fix_divisibility(self, r):
        W = self.W
        for i in range(r):
            if W.get(i, i) < 0:
                self.row_scale(i, -1)
        for i in range(r):
            for j in range(i + 1, r):
                if W.get(j, j) % W.get(i, i):
                    self.row_add(j, i, 1)
                    self.clear(i)
                    for k in (i, j):
                        if W.get(k, k) < 0:
                            self.row_scale(k, -1)


def smith_normal_form(A, modulus=None, transforms=True):
    '''Compute the Smith normal form of ``A``.

    Over the integers (``modulus=None``) the result satisfies A = U D V with
    det U, det V = +-1 and the elementary divisors dividing each other.
    With a prime ``modulus`` the same decomposition is computed over Z/p,
    where every divisor is 1. Pivots are chosen by smallest absolute value,
    ties broken by position, so the result is deterministic.
    '''
    if modulus is not None and not is_prime(modulus):
        raise ParameterError("Modulus must be prime", modulus)
    if modulus is None:
        modulus = A.modulus
    elim = _Eliminator(A, modulus, transforms)
    r = elim.diagonalise()
    if not modulus:
        elim.fix_divisibility(r)
    divisors = [elim.W.get(i, i) for i in range(r)]
    LOG.debug("Smith form of %dx%d matrix: rank %d", A.rows, A.cols, r)
    if transforms:
        return SmithDecomposition(elim.U.freeze(), elim.W.freeze(),
                                  elim.V.freeze(), elim.U_inv.freeze(),
                                  elim.V_inv.freeze(), divisors, modulus)
    ident_m = SparseIntMatrix.identity(A.rows, modulus)
    ident_n = SparseIntMatrix.identity(A.cols, modulus)
    return SmithDecomposition(None, elim.W.freeze(), None, ident_m, ident_n,
                              divisors, modulus)


def rank(A, modulus=None):
    return smith_normal_form(A, modulus, transforms=False).rank


def kernel_basis(A, modulus=None):
    return smith_normal_form(A, modulus).kernel_basis()


def solve_integer(A, b, modulus=None, decomposition=None):
    '''Solve A x = b over the integers (or Z/p). Returns None if unsolvable.

    The solution is checked by substitution before it is returned.
    '''
    b = list(b)
    if len(b) != A.rows:
        raise ShapeError("Right-hand side has wrong length", len(b), A.rows)
    snf = decomposition or smith_normal_form(A, modulus)
    modulus = snf.modulus
    if modulus:
        b = [int(v) % modulus for v in b]
    x = snf.solve(b)
    if x is None:
        return None
    if modulus:
        x = x % modulus
    residual = A.dot(x) - int_vector(b)
    if modulus:
        residual = residual % modulus
    if any(residual):
        raise ArithmeticError("Solution failed substitution")
    return x


def reduce_mod_p(obj, p):
    '''Reduce a matrix or a vector entrywise modulo the prime ``p``.'''
    if not is_prime(p):
        raise ParameterError("Not a prime", p)
    if isinstance(obj, SparseIntMatrix):
        return obj.mod(p)
    return int_vector(obj, p)
