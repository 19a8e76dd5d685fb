"""Pure-Python/numpy versions of the compiled kernels in _kernels.pyx."""
from __future__ import annotations

import math

import numpy as np


def jacobi_eigenvalues(a: np.ndarray, tol: float, max_sweeps: int):
    n = a.shape[0]
    for sweep in range(max_sweeps + 1):
        off = np.sqrt(np.sum(np.triu(a, 1) ** 2) * 2.0)
        if off <= tol:
            return np.diagonal(a).copy(), sweep
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            row = a[p]
            for q in np.nonzero(row[p + 1:])[0] + p + 1:
                apq = a[p, q]
                if apq == 0.0:
                    continue
                app, aqq = a[p, p], a[q, q]
                theta = (aqq - app) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(1.0, theta))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                rp = a[p].copy()
                rq = a[q]
                a[p] = c * rp - s * rq
                a[q] = s * rp + c * rq
                a[:, p] = a[p]
                a[:, q] = a[q]
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = a[q, p] = 0.0
    return np.diagonal(a).copy(), -1


def _pair_perms(p: int) -> list[list[int]]:
    h = (p - 1) // 2
    perms = []
    for i in range(1, h + 1):
        row = []
        for b in range(h):
            r = i * (b + 1) % p
            row.append((r if r <= h else p - r) - 1)
        perms.append(row)
    return perms


def prime_distinct_counts(p: int, masks: np.ndarray) -> np.ndarray:
    h = (p - 1) // 2
    perms = _pair_perms(p)
    # per multiplier, image of each single bit as a mask
    bit_images = [[1 << perm[b] for b in range(h)] for perm in perms]
    out = np.zeros(len(masks), dtype=np.int64)
    for idx, m in enumerate(masks.tolist()):
        bits = [b for b in range(h) if m >> b & 1]
        images = set()
        for imgs in bit_images:
            img = 0
            for b in bits:
                img |= imgs[b]
            images.add(img)
        out[idx] = len(images) + 1
    return out


def gray_realizable(rows: np.ndarray, degs: np.ndarray, target_sorted: np.ndarray,
                    target_degree: int, lo: int, hi: int, chunk: int = 4096) -> int:
    k = rows.shape[0]
    shifts = np.arange(k, dtype=np.int64)
    for start in range(lo, hi, chunk):
        it = np.arange(start, min(hi, start + chunk), dtype=np.int64)
        g = it ^ (it >> 1)
        sel = ((g[:, None] >> shifts) & 1).astype(np.int64)
        keep = (sel @ degs == target_degree) & (g != 0)
        if not keep.any():
            continue
        lam = np.sort(sel[keep] @ rows, axis=1)
        hit = np.nonzero((lam == target_sorted).all(axis=1))[0]
        if hit.size:
            return int(g[keep][hit[0]])
    return -1
