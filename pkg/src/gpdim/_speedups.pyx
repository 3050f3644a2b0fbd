# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: all-pairs BFS and the resolving-set scan.

Semantics match gpdim._kernels_py exactly; see that module for the contract.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

UNSET = 0xFFFF


def bfs_all_pairs(const cnp.int32_t[:, ::1] adj):
    cdef Py_ssize_t nv = adj.shape[0]
    cdef Py_ssize_t deg = adj.shape[1]
    out = np.full((nv, nv), UNSET, dtype=np.uint16)
    cdef cnp.uint16_t[:, ::1] dist = out
    queue_arr = np.empty(nv, dtype=np.int32)
    cdef cnp.int32_t[::1] queue = queue_arr
    cdef Py_ssize_t src, head, tail, cur, t, nb
    with nogil:
        for src in range(nv):
            dist[src, src] = 0
            queue[0] = <cnp.int32_t> src
            head = 0
            tail = 1
            while head < tail:
                cur = queue[head]
                head += 1
                for t in range(deg):
                    nb = adj[cur, t]
                    if dist[src, nb] == 0xFFFF:
                        dist[src, nb] = dist[src, cur] + 1
                        queue[tail] = <cnp.int32_t> nb
                        tail += 1
    return out


def pack_bits(width):
    return 16 if width <= 4 else 10


def scan_resolving(const cnp.uint16_t[:, ::1] dist, const cnp.int64_t[:, ::1] cands):
    cdef Py_ssize_t nv = dist.shape[0]
    cdef Py_ssize_t m = cands.shape[0]
    cdef Py_ssize_t s = cands.shape[1]
    if m == 0:
        return -1
    cdef int bits = 16 if s <= 4 else 10
    # Open-addressing table with generation stamps: no clearing between
    # candidates, early exit on the first duplicate representation.
    cdef Py_ssize_t tsize = 1
    cdef int tbits = 0
    while tsize < 2 * nv:
        tsize <<= 1
        tbits += 1
    keys_arr = np.zeros(tsize, dtype=np.uint64)
    stamps_arr = np.zeros(tsize, dtype=np.int64)
    cdef cnp.uint64_t[::1] keys = keys_arr
    cdef cnp.int64_t[::1] stamps = stamps_arr
    cdef Py_ssize_t mask = tsize - 1
    cdef int shift = 64 - tbits
    cdef Py_ssize_t c, z, t, h
    cdef cnp.uint64_t key
    cdef cnp.int64_t gen = 0
    cdef bint distinct
    cdef Py_ssize_t found = -1
    with nogil:
        for c in range(m):
            gen += 1
            distinct = True
            for z in range(nv):
                key = 0
                for t in range(s):
                    key = (key << bits) | dist[z, cands[c, t]]
                h = <Py_ssize_t> ((key * <cnp.uint64_t> 0x9E3779B97F4A7C15) >> shift)
                while True:
                    if stamps[h] != gen:
                        stamps[h] = gen
                        keys[h] = key
                        break
                    if keys[h] == key:
                        distinct = False
                        break
                    h = (h + 1) & mask
                if not distinct:
                    break
            if distinct:
                found = c
                break
    return found
